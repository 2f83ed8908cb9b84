//! Electric-field components and intensity of a thermal pulse.
//!
//! The two nonvanishing components (along û and m̂; none along n̂ by
//! construction) reduce to a radial integral over a Bessel-kernel angular
//! integral:
//!
//! E_u = 2πiαN √(ħc/16π³ε₀) ∫dk k³√k l(k) e^{−ickt}
//!         ∫dx υ(x)·x·e^{−ikRx cosΘ} J₀(kR√(1−x²) sinΘ)
//! E_m = −2παN √(ħc/16π³ε₀) sinΦ ∫dk k³√k l(k) e^{−ickt}
//!         ∫dx υ(x)·√(1−x²)·e^{−ikRx cosΘ} J₁(kR√(1−x²) sinΘ)
//!
//! with R, Θ, Φ the spherical coordinates of the field point in the pulse
//! frame (Θ from m̂, Φ from n̂ toward û). The inner integral is pre-split
//! into cells of roughly one oscillation period before adaptive refinement;
//! the radial integral runs in u = βħck.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::constants::{C, EPSILON_0, HBAR};
use crate::error::{Error, Result};
use crate::numerics::{
    bessel_j0, bessel_j1, integrate_cells, integrate_semi_infinite, Quadrature, QuadratureSpec,
    Vec3,
};
use crate::parallel;
use crate::thermal_pulse::ThermalPulseSpec;

/// Hard cap on k_T·R; beyond it the oscillatory integrals are refused
/// rather than silently degraded.
pub const MAX_KT_RADIUS: f64 = 40.0;

/// Field components at one point of the pulse frame. The n̂ component is
/// identically absent; intensity is |E_u|² + |E_m|².
#[derive(Debug, Clone, Copy)]
pub struct FieldSample {
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
    pub t: f64,
    pub e_u: Complex64,
    pub e_m: Complex64,
    pub intensity: f64,
}

enum AngularKernel {
    J0X,
    J1Sqrt,
}

/// Inner angular integral over x = cosθ of the wavevector direction.
fn angular_integral(
    spec: &ThermalPulseSpec,
    kr: f64,
    theta: f64,
    kernel: &AngularKernel,
) -> Result<Complex64> {
    let (lo, hi) = spec.profile.effective_support();
    let cos_t = theta.cos();
    let sin_t = theta.sin();

    // one cell per ~π of combined exponential + Bessel phase
    let phase_span = kr * (cos_t.abs() * (hi - lo) + sin_t.abs());
    let n_cells = (1 + (phase_span / PI) as usize).min(4096);
    let cells: Vec<(f64, f64)> = (0..n_cells)
        .map(|i| {
            let w = (hi - lo) / n_cells as f64;
            (lo + i as f64 * w, lo + (i + 1) as f64 * w)
        })
        .collect();

    let qspec = QuadratureSpec::new(1e-9, 5e-14, 800);
    let profile = &spec.profile;
    let q: Quadrature<Complex64> = integrate_cells(
        |x: f64| {
            let upsilon = profile.value(x);
            if upsilon == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            let transverse = (1.0 - x * x).max(0.0).sqrt();
            let phase = Complex64::new(0.0, -kr * x * cos_t).exp();
            let weight = match kernel {
                AngularKernel::J0X => x * bessel_j0(kr * transverse * sin_t),
                AngularKernel::J1Sqrt => transverse * bessel_j1(kr * transverse * sin_t),
            };
            phase * (upsilon * weight)
        },
        &cells,
        &qspec,
    )?;
    Ok(q.value)
}

/// Dimensionless radial integral ∫du u^{5/2}(e^u−1)^{−1/2} e^{−iτ̂u} G(uρ).
fn radial_integral(
    spec: &ThermalPulseSpec,
    rho: f64,
    theta: f64,
    tau_hat: f64,
    kernel: AngularKernel,
) -> Result<Complex64> {
    let qspec = QuadratureSpec::new(5e-9, 5e-13, 2000);
    let inner_failure: std::cell::RefCell<Option<Error>> = std::cell::RefCell::new(None);
    let q = integrate_semi_infinite(
        |u: f64| {
            if u <= 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            let envelope = u.powf(2.5) / u.exp_m1().sqrt();
            // beyond the Planck tail nothing contributes; skip the inner work
            if u > 3.0 && envelope < 3e-15 {
                return Complex64::new(0.0, 0.0);
            }
            match angular_integral(spec, u * rho, theta, &kernel) {
                Ok(angular) => {
                    let phase = Complex64::new(0.0, -tau_hat * u).exp();
                    phase * angular * envelope
                }
                Err(e) => {
                    inner_failure.borrow_mut().get_or_insert(e);
                    Complex64::new(0.0, 0.0)
                }
            }
        },
        &qspec,
    );
    if let Some(e) = inner_failure.into_inner() {
        return Err(e);
    }
    Ok(q?.value)
}

fn validate_point(spec: &ThermalPulseSpec, r: f64, theta: f64, phi: f64, t: f64) -> Result<f64> {
    if !(r >= 0.0) || !r.is_finite() {
        return Err(Error::domain(format!("radius must be nonnegative, got {r}")));
    }
    if !theta.is_finite() || !phi.is_finite() || !t.is_finite() {
        return Err(Error::domain("theta, phi and t must be finite"));
    }
    let kt_r = spec.env.thermal_wavenumber() * r;
    if kt_r > MAX_KT_RADIUS {
        return Err(Error::FieldOutOfRange { kt_r, max: MAX_KT_RADIUS });
    }
    Ok(kt_r)
}

/// Field components at distance `r` (meters) from the pulse center, at
/// polar angle `theta` from m̂ and azimuth `phi` from n̂, at time `t`.
pub fn field_components(
    spec: &ThermalPulseSpec,
    r: f64,
    theta: f64,
    phi: f64,
    t: f64,
) -> Result<FieldSample> {
    let rho = validate_point(spec, r, theta, phi, t)?;
    let tau_hat = C * spec.env.thermal_wavenumber() * t;

    let j_u = radial_integral(spec, rho, theta, tau_hat, AngularKernel::J0X)?;
    let j_m = radial_integral(spec, rho, theta, tau_hat, AngularKernel::J1Sqrt)?;

    let kt = spec.env.thermal_wavenumber();
    let scale = spec.normalization() * (HBAR * C / (16.0 * PI.powi(3) * EPSILON_0)).sqrt()
        * kt.powf(3.5);
    let e_u = Complex64::new(0.0, 2.0 * PI) * spec.alpha * scale * j_u;
    let e_m = Complex64::new(-2.0 * PI * phi.sin(), 0.0) * spec.alpha * scale * j_m;

    Ok(FieldSample {
        r,
        theta,
        phi,
        t,
        e_u,
        e_m,
        intensity: e_u.norm_sqr() + e_m.norm_sqr(),
    })
}

/// Full field vector E = E_u û + E_m m̂ at a lab-frame displacement from the
/// pulse center, returned as (real part, imaginary part). Used by the
/// divergence checks; the n̂ component is structurally zero.
pub fn field_vector_at(
    spec: &ThermalPulseSpec,
    displacement: Vec3,
    t: f64,
) -> Result<(Vec3, Vec3)> {
    let r = displacement.norm();
    let (theta, phi) = if r == 0.0 {
        (0.0, 0.0)
    } else {
        let zc = (displacement.dot(spec.frame.m_hat()) / r).clamp(-1.0, 1.0);
        (
            zc.acos(),
            displacement
                .dot(spec.frame.u_hat())
                .atan2(displacement.dot(spec.frame.n_hat())),
        )
    };
    let sample = field_components(spec, r, theta, phi, t)?;
    let u_hat = spec.frame.u_hat();
    let m_hat = spec.frame.m_hat();
    let re = u_hat * sample.e_u.re + m_hat * sample.e_m.re;
    let im = u_hat * sample.e_u.im + m_hat * sample.e_m.im;
    Ok((re, im))
}

/// Sample grid in the pulse frame (meters and radians).
#[derive(Debug, Clone)]
pub struct IntensityGrid {
    pub r_values: Vec<f64>,
    pub theta_values: Vec<f64>,
    pub phi_values: Vec<f64>,
}

impl IntensityGrid {
    /// Uniform grid out to `r_max_kt` thermal radii.
    pub fn uniform(env_kt: f64, r_max_kt: f64, nr: usize, ntheta: usize, nphi: usize) -> Self {
        let r_values = (0..nr)
            .map(|i| r_max_kt / env_kt * i as f64 / (nr.max(2) - 1) as f64)
            .collect();
        let theta_values = (0..ntheta)
            .map(|i| PI * i as f64 / (ntheta.max(2) - 1) as f64)
            .collect();
        let phi_values = (0..nphi)
            .map(|i| 2.0 * PI * i as f64 / nphi.max(1) as f64)
            .collect();
        IntensityGrid { r_values, theta_values, phi_values }
    }
}

/// Sampled intensity I(R,Θ,Φ) = A(R,Θ) + sin²Φ·B(R,Θ) together with the
/// half-maximum boundary points. Only the two base planes are ever
/// integrated: E_u is Φ-independent and E_m carries a pure sinΦ factor.
#[derive(Debug, Clone)]
pub struct IntensityProfile {
    pub grid: IntensityGrid,
    /// |E_u|² on the (r, θ) grid, r-major.
    pub a: Vec<f64>,
    /// |E_m/sinΦ|² on the (r, θ) grid, r-major.
    pub b: Vec<f64>,
    /// I on the full (r, θ, φ) grid, r-major then θ then φ.
    pub intensity: Vec<f64>,
    pub i_max: f64,
    /// Crossing points of I = I_max/2, in frame coordinates
    /// (n̂, û, m̂ components, meters).
    pub half_max_points: Vec<Vec3>,
}

impl IntensityProfile {
    pub fn index(&self, ir: usize, it: usize, ip: usize) -> usize {
        (ir * self.grid.theta_values.len() + it) * self.grid.phi_values.len() + ip
    }
}

fn frame_point(r: f64, theta: f64, phi: f64) -> Vec3 {
    Vec3::new(
        r * theta.sin() * phi.cos(),
        r * theta.sin() * phi.sin(),
        r * theta.cos(),
    )
}

/// Evaluates the intensity on the grid at time `t` and extracts the
/// half-maximum region boundary by marching over sampled edges.
pub fn intensity_profile(
    spec: &ThermalPulseSpec,
    grid: IntensityGrid,
    t: f64,
) -> Result<IntensityProfile> {
    for &r in &grid.r_values {
        validate_point(spec, r, 0.0, 0.0, t)?;
    }
    if grid.theta_values.is_empty() || grid.phi_values.is_empty() {
        return Err(Error::domain("grid must carry at least one theta and phi value"));
    }

    let nr = grid.r_values.len();
    let nt = grid.theta_values.len();
    let base: Vec<Result<(f64, f64)>> = parallel::map_indexed(nr * nt, |idx| {
        let (ir, it) = (idx / nt, idx % nt);
        let r = grid.r_values[ir];
        let theta = grid.theta_values[it];
        let e_u = field_components(spec, r, theta, 0.0, t)?;
        // sinΦ = 1 plane carries the full m̂ component
        let e_m = field_components(spec, r, theta, PI / 2.0, t)?;
        Ok((e_u.e_u.norm_sqr(), e_m.e_m.norm_sqr()))
    });
    let mut a = Vec::with_capacity(nr * nt);
    let mut b = Vec::with_capacity(nr * nt);
    for entry in base {
        let (av, bv) = entry?;
        a.push(av);
        b.push(bv);
    }

    let np = grid.phi_values.len();
    let mut intensity = Vec::with_capacity(nr * nt * np);
    for idx in 0..nr * nt {
        for &phi in &grid.phi_values {
            intensity.push(a[idx] + phi.sin().powi(2) * b[idx]);
        }
    }
    let i_max = intensity.iter().cloned().fold(0.0, f64::max);

    let mut profile = IntensityProfile {
        grid,
        a,
        b,
        intensity,
        i_max,
        half_max_points: Vec::new(),
    };
    if i_max > 0.0 {
        profile.half_max_points = half_max_boundary(&profile);
    }
    Ok(profile)
}

/// Midpoints of grid edges on which the intensity crosses I_max/2.
fn half_max_boundary(p: &IntensityProfile) -> Vec<Vec3> {
    let half = 0.5 * p.i_max;
    let (nr, nt, np) = (
        p.grid.r_values.len(),
        p.grid.theta_values.len(),
        p.grid.phi_values.len(),
    );
    let mut points = Vec::new();
    let mut push_crossing = |i1: f64, i2: f64, p1: Vec3, p2: Vec3| {
        if (i1 - half) * (i2 - half) < 0.0 {
            let f = (half - i1) / (i2 - i1);
            points.push(p1 + (p2 - p1) * f);
        }
    };
    for ir in 0..nr {
        for it in 0..nt {
            for ip in 0..np {
                let here = p.intensity[p.index(ir, it, ip)];
                let pos = frame_point(
                    p.grid.r_values[ir],
                    p.grid.theta_values[it],
                    p.grid.phi_values[ip],
                );
                if ir + 1 < nr {
                    let there = p.intensity[p.index(ir + 1, it, ip)];
                    let pos2 = frame_point(
                        p.grid.r_values[ir + 1],
                        p.grid.theta_values[it],
                        p.grid.phi_values[ip],
                    );
                    push_crossing(here, there, pos, pos2);
                }
                if it + 1 < nt {
                    let there = p.intensity[p.index(ir, it + 1, ip)];
                    let pos2 = frame_point(
                        p.grid.r_values[ir],
                        p.grid.theta_values[it + 1],
                        p.grid.phi_values[ip],
                    );
                    push_crossing(here, there, pos, pos2);
                }
                if ip + 1 < np {
                    let there = p.intensity[p.index(ir, it, ip + 1)];
                    let pos2 = frame_point(
                        p.grid.r_values[ir],
                        p.grid.theta_values[it],
                        p.grid.phi_values[ip + 1],
                    );
                    push_crossing(here, there, pos, pos2);
                }
            }
        }
    }
    points
}
