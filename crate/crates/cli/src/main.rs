//! Command-line surface over the pulse-mixture library. One subcommand per
//! computation; every run emits plot-tool-agnostic CSV plus a JSON manifest.
//!
//! Exit codes: 0 success, 2 invalid flags, 3 numerical failure, 4 when an
//! infeasible solve was requested with --strict.

// `!(a < b)` checks reject NaN flag values along with the wrong ordering
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::CliError;

#[derive(Parser)]
#[command(
    name = "lumen-mix",
    about = "Statistical pulse mixtures reproducing the first-order correlation function of thermal light",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Thermal first-order correlation function over a delay range
    ThermalG1 {
        #[arg(long, default_value_t = 5777.0)]
        temperature: f64,
        #[arg(long, default_value_t = -5.0)]
        tau_min_fs: f64,
        #[arg(long, default_value_t = 5.0)]
        tau_max_fs: f64,
        #[arg(long, default_value_t = 201)]
        points: usize,
        #[arg(long, default_value = "thermal_g1.csv")]
        out: PathBuf,
    },
    /// Nonnegative inversion of the Gaussian-mixture weight density
    GaussianSolve {
        #[arg(long, default_value_t = 5777.0)]
        temperature: f64,
        /// Lineshape width σ in 1/m (exclusive with --fwhm-thz)
        #[arg(long)]
        sigma: Option<f64>,
        /// Spectral FWHM in THz (exclusive with --sigma)
        #[arg(long)]
        fwhm_thz: Option<f64>,
        #[arg(long, default_value_t = 240)]
        grid_points: usize,
        /// Fail (exit 4) when no nonnegative solution exists
        #[arg(long)]
        strict: bool,
        #[arg(long, default_value = "weights.csv")]
        out: PathBuf,
    },
    /// Feasibility sweep over a list of spectral bandwidths
    GaussianSweep {
        #[arg(long, default_value_t = 5777.0)]
        temperature: f64,
        /// Comma-separated FWHM list in THz
        #[arg(long, value_delimiter = ',', default_value = "0.1,1,10,100")]
        fwhm_thz: Vec<f64>,
        #[arg(long, default_value_t = 240)]
        grid_points: usize,
        #[arg(long, default_value = "sweep.csv")]
        out: PathBuf,
    },
    /// Energy/momentum statistics of one thermal pulse
    PulseMoments {
        #[arg(long, default_value_t = 5777.0)]
        temperature: f64,
        /// Angular spread of the truncated-Gaussian profile
        #[arg(long, default_value_t = 0.1)]
        gamma: f64,
        /// truncated-gaussian | truncated-parabola | uniform-hemisphere | uniform-sphere
        #[arg(long, default_value = "truncated-gaussian")]
        profile: String,
        #[arg(long, default_value = "moments.csv")]
        out: PathBuf,
    },
    /// Field components along a frame axis through the pulse center
    PulseField {
        #[arg(long, default_value_t = 5777.0)]
        temperature: f64,
        #[arg(long, default_value_t = 0.1)]
        gamma: f64,
        /// Axis through the center: m, n or u
        #[arg(long, default_value = "m")]
        axis: String,
        #[arg(long, default_value_t = 6.0)]
        r_max_kt: f64,
        #[arg(long, default_value_t = 161)]
        points: usize,
        #[arg(long, default_value_t = 0.0)]
        time_fs: f64,
        #[arg(long, default_value = "field.csv")]
        out: PathBuf,
    },
    /// Intensity on a spherical grid plus the half-maximum region
    PulseIntensity {
        #[arg(long, default_value_t = 5777.0)]
        temperature: f64,
        #[arg(long, default_value_t = 0.1)]
        gamma: f64,
        #[arg(long, default_value_t = 5.0)]
        r_max_kt: f64,
        #[arg(long, default_value_t = 21)]
        r_points: usize,
        #[arg(long, default_value_t = 17)]
        theta_points: usize,
        #[arg(long, default_value_t = 8)]
        phi_points: usize,
        #[arg(long, default_value_t = 0.0)]
        time_fs: f64,
        #[arg(long, default_value = "intensity.csv")]
        out: PathBuf,
    },
    /// Derived constants at a temperature (text or JSON)
    Constants {
        #[arg(long, default_value_t = 5777.0)]
        temperature: f64,
        #[arg(long)]
        json: bool,
    },
    /// Full figure/number suite into one directory
    ReproducePaper {
        #[arg(long, default_value_t = 5777.0)]
        temperature: f64,
        /// Target directory (default: timestamped)
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

fn configure_threads() {
    if let Ok(value) = std::env::var("LUMEN_MIX_THREADS") {
        if let Ok(threads) = value.parse::<usize>() {
            if threads >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::ThermalG1 { temperature, tau_min_fs, tau_max_fs, points, out } => {
            commands::cmd_thermal_g1(temperature, tau_min_fs, tau_max_fs, points, &out)
        }
        Command::GaussianSolve { temperature, sigma, fwhm_thz, grid_points, strict, out } => {
            commands::cmd_gaussian_solve(temperature, sigma, fwhm_thz, grid_points, strict, &out)
        }
        Command::GaussianSweep { temperature, fwhm_thz, grid_points, out } => {
            commands::cmd_gaussian_sweep(temperature, &fwhm_thz, grid_points, &out)
        }
        Command::PulseMoments { temperature, gamma, profile, out } => {
            commands::cmd_pulse_moments(temperature, gamma, &profile, &out)
        }
        Command::PulseField { temperature, gamma, axis, r_max_kt, points, time_fs, out } => {
            commands::cmd_pulse_field(temperature, gamma, &axis, r_max_kt, points, time_fs, &out)
        }
        Command::PulseIntensity {
            temperature,
            gamma,
            r_max_kt,
            r_points,
            theta_points,
            phi_points,
            time_fs,
            out,
        } => commands::cmd_pulse_intensity(
            temperature,
            gamma,
            r_max_kt,
            r_points,
            theta_points,
            phi_points,
            time_fs,
            &out,
        ),
        Command::Constants { temperature, json } => commands::cmd_constants(temperature, json),
        Command::ReproducePaper { temperature, out_dir } => {
            commands::cmd_reproduce_paper(temperature, out_dir)
        }
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code as u8)
        }
    }
}
