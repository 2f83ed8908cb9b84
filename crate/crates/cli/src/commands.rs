//! Command implementations. Each command writes its CSV artifacts plus one
//! manifest and returns a process exit code through `CliError`.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use lumen_mix_core::constants::{C, EV, HBAR, K_B};
use lumen_mix_core::gaussian_mixture::{
    default_wavenumber_grid, default_weight_grid, feasibility_sweep, fwhm_thz_to_sigma,
    sigma_to_fwhm_thz, solve_weights,
};
use lumen_mix_core::thermal_field::{
    coherence_time, energy_density, g1_fwhm_coherence_time, g1_thermal, photon_density,
    ThermalEnvironment,
};
use lumen_mix_core::thermal_pulse::{
    field_components, intensity_profile, mixture_density_constraint, moment_report,
    AngularProfile, IntensityGrid, ThermalPulseSpec, MAX_KT_RADIUS,
};
use lumen_mix_core::Error as CoreError;

use crate::output::{fmt, CsvFile, RunManifest};

pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn flags(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }

    pub fn numerical(message: impl Into<String>) -> Self {
        CliError { code: 3, message: message.into() }
    }

    pub fn infeasible(message: impl Into<String>) -> Self {
        CliError { code: 4, message: message.into() }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Domain(_) => CliError::flags(e.to_string()),
            other => CliError::numerical(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::numerical(format!("i/o failure: {e}"))
    }
}

pub fn environment(temperature: f64) -> Result<ThermalEnvironment, CliError> {
    ThermalEnvironment::new(temperature)
        .map_err(|e| CliError::flags(format!("bad --temperature: {e}")))
}

pub fn profile_from_flags(name: &str, gamma: f64) -> Result<AngularProfile, CliError> {
    let profile = match name {
        "truncated-gaussian" => AngularProfile::truncated_gaussian(gamma),
        "truncated-parabola" => AngularProfile::truncated_parabola(),
        "uniform-hemisphere" => AngularProfile::uniform_hemisphere(),
        "uniform-sphere" => AngularProfile::uniform_sphere(),
        other => return Err(CliError::flags(format!("unknown --profile {other}"))),
    };
    profile.map_err(|e| CliError::flags(e.to_string()))
}

// ---------------------------------------------------------------- thermal-g1

pub fn cmd_thermal_g1(
    temperature: f64,
    tau_min_fs: f64,
    tau_max_fs: f64,
    points: usize,
    out: &Path,
) -> Result<(), CliError> {
    if points < 2 {
        return Err(CliError::flags("--points must be at least 2"));
    }
    if !(tau_min_fs < tau_max_fs) {
        return Err(CliError::flags("--tau-min-fs must be below --tau-max-fs"));
    }
    let started = Instant::now();
    let env = environment(temperature)?;
    let g0 = g1_thermal(0.0, &env)?.value.norm();

    let mut csv = CsvFile::new(out);
    csv.metadata("thermal first-order equal-space-point correlation function")
        .metadata(&format!("temperature_K = {temperature}"))
        .metadata("units: tau in fs, re/im/abs in V^2/m^2")
        .header(&["tau_fs", "re", "im", "abs", "abs_normalized"]);
    for i in 0..points {
        let tau_fs = tau_min_fs + (tau_max_fs - tau_min_fs) * i as f64 / (points - 1) as f64;
        let sample = g1_thermal(tau_fs * 1e-15, &env).map_err(|e| {
            CliError::numerical(format!("row tau = {tau_fs} fs: {e}"))
        })?;
        let v = sample.value;
        csv.row(&[tau_fs, v.re, v.im, v.norm(), v.norm() / g0]);
    }
    let path = csv.finish()?;

    let mut manifest = RunManifest::new("thermal-g1");
    manifest
        .parameter("temperature_K", temperature)
        .parameter("tau_min_fs", tau_min_fs)
        .parameter("tau_max_fs", tau_max_fs)
        .parameter("points", points);
    manifest.tolerance("quadrature_relative", 1e-12);
    manifest.outputs.push(path.display().to_string());
    manifest.write(started)?;
    Ok(())
}

// ------------------------------------------------------------ gaussian-solve

#[allow(clippy::too_many_arguments)]
pub fn cmd_gaussian_solve(
    temperature: f64,
    sigma: Option<f64>,
    fwhm_thz: Option<f64>,
    grid_points: usize,
    strict: bool,
    out: &Path,
) -> Result<(), CliError> {
    let sigma = match (sigma, fwhm_thz) {
        (Some(s), None) => s,
        (None, Some(f)) => fwhm_thz_to_sigma(f),
        _ => {
            return Err(CliError::flags(
                "exactly one of --sigma or --fwhm-thz must be given",
            ))
        }
    };
    if grid_points < 2 {
        return Err(CliError::flags("--grid-points must be at least 2"));
    }
    let started = Instant::now();
    let env = environment(temperature)?;
    let kt = env.thermal_wavenumber();
    let k_grid = default_wavenumber_grid(&env, grid_points);
    let k_o_grid = default_weight_grid(&env, grid_points, sigma);
    let solution = solve_weights(&env, sigma, &k_grid, &k_o_grid, 1.0)?;

    let mut csv = CsvFile::new(out);
    csv.metadata("nonnegative mixture weight density over the central wavenumber")
        .metadata(&format!("temperature_K = {temperature}"))
        .metadata(&format!("sigma_per_m = {}", fmt(sigma)))
        .metadata(&format!("fwhm_thz = {}", fmt(sigma_to_fwhm_thz(sigma))))
        .metadata(&format!(
            "relative_residual = {} feasible = {}",
            fmt(solution.relative_residual),
            solution.feasible
        ))
        .metadata("p normalized so that sum_j p_j M(k_i,k0_j) dk0_j = occupancy(k_i)/|alpha|^2")
        .header(&["k_o_per_m", "k_o_over_kT", "p_value"]);
    for (k_o, p) in solution.k_o_grid.iter().zip(&solution.p_values) {
        csv.row(&[*k_o, *k_o / kt, *p]);
    }
    let path = csv.finish()?;

    let mut manifest = RunManifest::new("gaussian-solve");
    manifest
        .parameter("temperature_K", temperature)
        .parameter("sigma_per_m", fmt(sigma))
        .parameter("fwhm_thz", fmt(sigma_to_fwhm_thz(sigma)))
        .parameter("grid_points", grid_points)
        .parameter(
            "k_grid",
            format!("log[{}..{}] x{}", fmt(k_grid[0]), fmt(k_grid[grid_points - 1]), grid_points),
        )
        .parameter(
            "k_o_grid",
            format!(
                "log[{}..{}] x{}",
                fmt(k_o_grid[0]),
                fmt(*k_o_grid.last().unwrap()),
                k_o_grid.len()
            ),
        )
        .parameter("relative_residual", fmt(solution.relative_residual))
        .parameter("feasible", solution.feasible);
    manifest.tolerance("feasibility_threshold", 1e-3);
    manifest.outputs.push(path.display().to_string());
    manifest.write(started)?;

    println!(
        "sigma = {} 1/m ({} THz FWHM): residual {:.3e}, feasible = {}",
        fmt(sigma),
        fmt(sigma_to_fwhm_thz(sigma)),
        solution.relative_residual,
        solution.feasible
    );
    if strict && !solution.feasible {
        return Err(CliError::infeasible(format!(
            "no nonnegative solution at this bandwidth (residual {:.3e})",
            solution.relative_residual
        )));
    }
    Ok(())
}

// ------------------------------------------------------------ gaussian-sweep

pub fn cmd_gaussian_sweep(
    temperature: f64,
    fwhm_thz_list: &[f64],
    grid_points: usize,
    out: &Path,
) -> Result<(), CliError> {
    if fwhm_thz_list.is_empty() {
        return Err(CliError::flags("--fwhm-thz needs at least one value"));
    }
    let started = Instant::now();
    let env = environment(temperature)?;
    let sigmas: Vec<f64> = fwhm_thz_list.iter().map(|&f| fwhm_thz_to_sigma(f)).collect();
    let sweep = feasibility_sweep(&env, &sigmas, grid_points)?;

    let mut csv = CsvFile::new(out);
    csv.metadata("bandwidth feasibility sweep of the Gaussian pulse mixture")
        .metadata(&format!("temperature_K = {temperature}"))
        .metadata(&format!(
            "residual_monotone_in_sigma = {}",
            sweep.residual_monotone_in_sigma
        ))
        .header(&["sigma_per_m", "fwhm_thz", "relative_residual", "feasible"]);
    for row in &sweep.rows {
        let residual = row
            .relative_residual
            .map(fmt)
            .unwrap_or_else(|| "nan".into());
        let feasible = row
            .feasible
            .map(|f| f.to_string())
            .unwrap_or_else(|| row.error.clone().unwrap_or_else(|| "error".into()));
        csv.row_mixed(&[fmt(row.sigma), fmt(row.fwhm_thz), residual, feasible]);
    }
    let path = csv.finish()?;

    let mut manifest = RunManifest::new("gaussian-sweep");
    manifest
        .parameter("temperature_K", temperature)
        .parameter(
            "fwhm_thz_list",
            fwhm_thz_list.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","),
        )
        .parameter("grid_points", grid_points)
        .parameter("residual_monotone_in_sigma", sweep.residual_monotone_in_sigma);
    manifest.tolerance("feasibility_threshold", 1e-3);
    manifest.outputs.push(path.display().to_string());
    manifest.write(started)?;
    Ok(())
}

// ------------------------------------------------------------- pulse-moments

pub fn cmd_pulse_moments(
    temperature: f64,
    gamma: f64,
    profile_name: &str,
    out: &Path,
) -> Result<(), CliError> {
    let started = Instant::now();
    let env = environment(temperature)?;
    let profile = profile_from_flags(profile_name, gamma)?;
    let spec = ThermalPulseSpec::with_defaults(env, profile)
        .map_err(|e| CliError::numerical(e.to_string()))?;
    let report = moment_report(&spec)?;

    let p = report.momentum_mean_ev_c;
    let m_hat = spec.frame.m_hat();
    let [vmm, vnn, vuu] = report.variance_coefficients_ev_c;
    let mut csv = CsvFile::new(out);
    csv.metadata("thermal-pulse energy and momentum statistics (per |alpha| = 1)")
        .metadata(&format!("temperature_K = {temperature}"))
        .metadata(&format!("profile = {}", spec.profile.label()))
        .metadata("momentum vector given on the (m,n,u) frame; closed-form columns cross-check the quadrature route")
        .header(&[
            "energy_mean_eV",
            "energy_mean_closed_eV",
            "energy_std_eV",
            "energy_std_closed_eV",
            "p_mean_m_eV_c",
            "p_mean_n_eV_c",
            "p_mean_u_eV_c",
            "p_mean_erf_closed_eV_c",
            "p_var_mm_eV2_c2",
            "p_var_nn_eV2_c2",
            "p_var_uu_eV2_c2",
            "p_std_mm_eV_c",
            "p_std_nn_eV_c",
            "p_std_uu_eV_c",
        ]);
    csv.row(&[
        report.energy_mean_ev,
        report.energy_mean_closed_ev,
        report.energy_std_ev,
        report.energy_std_closed_ev,
        p.dot(m_hat),
        p.dot(spec.frame.n_hat()),
        p.dot(spec.frame.u_hat()),
        report.momentum_mean_erf_closed_ev_c.unwrap_or(f64::NAN),
        vmm,
        vnn,
        vuu,
        vmm.sqrt(),
        vnn.sqrt(),
        vuu.sqrt(),
    ]);
    let path = csv.finish()?;

    let mut manifest = RunManifest::new("pulse-moments");
    manifest
        .parameter("temperature_K", temperature)
        .parameter("gamma", gamma)
        .parameter("profile", spec.profile.label());
    manifest.tolerance("closed_form_agreement", 1e-10);
    manifest.outputs.push(path.display().to_string());
    manifest.write(started)?;
    Ok(())
}

// --------------------------------------------------------------- pulse-field

#[allow(clippy::too_many_arguments)]
pub fn cmd_pulse_field(
    temperature: f64,
    gamma: f64,
    axis: &str,
    r_max_kt: f64,
    points: usize,
    time_fs: f64,
    out: &Path,
) -> Result<(), CliError> {
    if !(r_max_kt > 0.0 && r_max_kt <= MAX_KT_RADIUS) {
        return Err(CliError::flags(format!(
            "--r-max-kt must lie in (0, {MAX_KT_RADIUS}]"
        )));
    }
    if points < 2 {
        return Err(CliError::flags("--points must be at least 2"));
    }
    // the signed coordinate s runs along the chosen frame axis; negative s
    // flips to the antipodal (theta, phi)
    let angles = |s: f64| -> (f64, f64) {
        use std::f64::consts::PI;
        match (axis, s >= 0.0) {
            ("m", true) => (0.0, 0.0),
            ("m", false) => (PI, 0.0),
            ("n", true) => (PI / 2.0, 0.0),
            ("n", false) => (PI / 2.0, PI),
            ("u", true) => (PI / 2.0, PI / 2.0),
            ("u", false) => (PI / 2.0, 3.0 * PI / 2.0),
            _ => (f64::NAN, f64::NAN),
        }
    };
    if !matches!(axis, "m" | "n" | "u") {
        return Err(CliError::flags("--axis must be one of m, n, u"));
    }

    let started = Instant::now();
    let env = environment(temperature)?;
    let profile = profile_from_flags("truncated-gaussian", gamma)?;
    let spec = ThermalPulseSpec::with_defaults(env, profile)
        .map_err(|e| CliError::numerical(e.to_string()))?;
    let kt = env.thermal_wavenumber();
    let t = time_fs * 1e-15;

    let mut rows = Vec::with_capacity(points);
    let mut i_max = 0.0f64;
    for i in 0..points {
        let s = -r_max_kt + 2.0 * r_max_kt * i as f64 / (points - 1) as f64;
        let (theta, phi) = angles(s);
        let sample = field_components(&spec, s.abs() / kt, theta, phi, t)?;
        i_max = i_max.max(sample.intensity);
        rows.push((s, theta, phi, sample));
    }

    let mut csv = CsvFile::new(out);
    csv.metadata("thermal-pulse field components along one frame axis through the center")
        .metadata(&format!("temperature_K = {temperature}, gamma = {gamma}, axis = {axis}"))
        .metadata(&format!("time_fs = {time_fs}"))
        .metadata("units: E in V/m for alpha = 1; kT_R is the signed axis coordinate in units of 1/k_T")
        .header(&[
            "kT_R", "Theta", "Phi", "axis", "ReEu", "ImEu", "ReEm", "ImEm", "I", "I_over_Imax",
        ]);
    let axis_code = match axis {
        "m" => 0.0,
        "n" => 1.0,
        _ => 2.0,
    };
    for (s, theta, phi, sample) in &rows {
        csv.row(&[
            *s,
            *theta,
            *phi,
            axis_code,
            sample.e_u.re,
            sample.e_u.im,
            sample.e_m.re,
            sample.e_m.im,
            sample.intensity,
            if i_max > 0.0 { sample.intensity / i_max } else { 0.0 },
        ]);
    }
    let path = csv.finish()?;

    let mut manifest = RunManifest::new("pulse-field");
    manifest
        .parameter("temperature_K", temperature)
        .parameter("gamma", gamma)
        .parameter("axis", axis)
        .parameter("r_max_kt", r_max_kt)
        .parameter("points", points)
        .parameter("time_fs", time_fs);
    manifest.tolerance("outer_quadrature_relative", 5e-9);
    manifest.tolerance("inner_quadrature_relative", 1e-9);
    manifest.outputs.push(path.display().to_string());
    manifest.write(started)?;
    Ok(())
}

// ----------------------------------------------------------- pulse-intensity

#[allow(clippy::too_many_arguments)]
pub fn cmd_pulse_intensity(
    temperature: f64,
    gamma: f64,
    r_max_kt: f64,
    r_points: usize,
    theta_points: usize,
    phi_points: usize,
    time_fs: f64,
    out: &Path,
) -> Result<(), CliError> {
    if !(r_max_kt > 0.0 && r_max_kt <= MAX_KT_RADIUS) {
        return Err(CliError::flags(format!(
            "--r-max-kt must lie in (0, {MAX_KT_RADIUS}]"
        )));
    }
    if r_points < 2 || theta_points < 2 || phi_points < 2 {
        return Err(CliError::flags("grid needs at least 2 points per dimension"));
    }
    let started = Instant::now();
    let env = environment(temperature)?;
    let profile = profile_from_flags("truncated-gaussian", gamma)?;
    let spec = ThermalPulseSpec::with_defaults(env, profile)
        .map_err(|e| CliError::numerical(e.to_string()))?;
    let kt = env.thermal_wavenumber();

    let grid = IntensityGrid::uniform(kt, r_max_kt, r_points, theta_points, phi_points);
    let result = intensity_profile(&spec, grid, time_fs * 1e-15)?;

    let mut csv = CsvFile::new(out);
    csv.metadata("thermal-pulse intensity on a spherical grid around the center")
        .metadata(&format!("temperature_K = {temperature}, gamma = {gamma}, time_fs = {time_fs}"))
        .metadata("I = |E_u|^2 + |E_m|^2 = A(R,Theta) + sin^2(Phi) B(R,Theta)")
        .header(&["kT_R", "Theta", "Phi", "I", "I_over_Imax"]);
    for (ir, &r) in result.grid.r_values.iter().enumerate() {
        for (it, &theta) in result.grid.theta_values.iter().enumerate() {
            for (ip, &phi) in result.grid.phi_values.iter().enumerate() {
                let intensity = result.intensity[result.index(ir, it, ip)];
                csv.row(&[
                    r * kt,
                    theta,
                    phi,
                    intensity,
                    if result.i_max > 0.0 { intensity / result.i_max } else { 0.0 },
                ]);
            }
        }
    }
    let path = csv.finish()?;

    let halfmax_path = out.with_extension("halfmax.csv");
    let mut halfmax = CsvFile::new(&halfmax_path);
    halfmax
        .metadata("half-maximum boundary points of the pulse intensity")
        .metadata("frame coordinates (n,u,m) in units of 1/k_T")
        .header(&["x_kT", "y_kT", "z_kT"]);
    for p in &result.half_max_points {
        halfmax.row(&[p[0] * kt, p[1] * kt, p[2] * kt]);
    }
    let halfmax_path = halfmax.finish()?;

    let mut manifest = RunManifest::new("pulse-intensity");
    manifest
        .parameter("temperature_K", temperature)
        .parameter("gamma", gamma)
        .parameter("r_max_kt", r_max_kt)
        .parameter("grid", format!("{r_points}x{theta_points}x{phi_points}"))
        .parameter("time_fs", time_fs)
        .parameter("i_max_V2_per_m2", fmt(result.i_max))
        .parameter("half_max_points", result.half_max_points.len());
    manifest.tolerance("outer_quadrature_relative", 5e-9);
    manifest.outputs.push(path.display().to_string());
    manifest.outputs.push(halfmax_path.display().to_string());
    manifest.write(started)?;
    Ok(())
}

// ------------------------------------------------------------------ constants

pub fn cmd_constants(temperature: f64, json: bool) -> Result<(), CliError> {
    let env = environment(temperature)?;
    let mixture = mixture_density_constraint(&env)?;
    let kbt_ev = K_B * temperature / EV;
    let fs = 1e-15;

    let mut values = BTreeMap::new();
    values.insert("temperature_K", temperature);
    values.insert("kBT_eV", kbt_ev);
    values.insert("k_T_per_m", env.thermal_wavenumber());
    values.insert("coherence_time_fs", coherence_time(&env) / fs);
    values.insert("g1_fwhm_time_fs", g1_fwhm_coherence_time(&env)? / fs);
    values.insert("p_alpha_sq_per_m3_integral_form", mixture.p_alpha_sq);
    values.insert(
        "p_alpha_sq_per_m3_printed_closed_form",
        mixture.p_alpha_sq_printed_closed_form,
    );
    values.insert("photon_density_per_m3", photon_density(&env));
    values.insert("energy_density_J_per_m3", energy_density(&env));
    values.insert("beta_per_J", env.beta());
    values.insert("hbar_Js", HBAR);
    values.insert("c_m_per_s", C);

    if json {
        println!("{}", serde_json::to_string_pretty(&values).expect("serializes"));
    } else {
        for (key, value) in &values {
            println!("{key} = {value:.6e}");
        }
    }
    Ok(())
}

// ------------------------------------------------------------ reproduce-paper

pub fn cmd_reproduce_paper(temperature: f64, out_dir: Option<PathBuf>) -> Result<(), CliError> {
    let started = Instant::now();
    let dir = out_dir.unwrap_or_else(|| {
        let stamp = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        PathBuf::from(format!("reproduction-{stamp}"))
    });
    std::fs::create_dir_all(&dir)?;

    println!("writing the full figure/number suite into {}", dir.display());

    cmd_thermal_g1(temperature, -5.0, 5.0, 201, &dir.join("thermal_g1.csv"))?;
    cmd_gaussian_solve(
        temperature,
        None,
        Some(1.0),
        240,
        false,
        &dir.join("gaussian_solve_1thz.csv"),
    )?;
    cmd_gaussian_solve(
        temperature,
        None,
        Some(100.0),
        240,
        false,
        &dir.join("gaussian_solve_100thz.csv"),
    )?;
    cmd_gaussian_sweep(
        temperature,
        &[0.1, 1.0, 10.0, 100.0],
        240,
        &dir.join("gaussian_sweep.csv"),
    )?;
    cmd_pulse_moments(
        temperature,
        0.1,
        "truncated-gaussian",
        &dir.join("pulse_moments.csv"),
    )?;
    for axis in ["m", "n", "u"] {
        cmd_pulse_field(
            temperature,
            0.1,
            axis,
            6.0,
            161,
            0.0,
            &dir.join(format!("pulse_field_{axis}.csv")),
        )?;
    }
    cmd_pulse_intensity(
        temperature,
        0.1,
        5.0,
        21,
        17,
        8,
        0.0,
        &dir.join("pulse_intensity.csv"),
    )?;

    let mut manifest = RunManifest::new("reproduce-paper");
    manifest.parameter("temperature_K", temperature);
    manifest.outputs.push(dir.display().to_string());
    manifest.write(started)?;
    println!("done in {:.1} s", started.elapsed().as_secs_f64());
    Ok(())
}
