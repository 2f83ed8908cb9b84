//! The thermal-pulse lineshape l(k) = k⁻¹(e^{βħck} − 1)^{−1/2} and the
//! spectral moments ∫₀^∞ kⁿ l(k)² dk it feeds into.

use crate::error::{Error, Result};
use crate::numerics::{integrate_semi_infinite, zeta, QuadratureSpec};
use crate::thermal_field::ThermalEnvironment;

/// l(k), in meters. For βħck below 1e-6 the expansion
/// (βħc)^{−1/2} k^{−3/2} (1 − u/4 + u²/96) replaces the direct form.
pub fn lineshape(k: f64, env: &ThermalEnvironment) -> Result<f64> {
    if !(k > 0.0) {
        return Err(Error::domain(format!("wavenumber must be positive, got {k}")));
    }
    let u = env.dimensionless_wavenumber(k);
    if u < 1e-6 {
        // (βħc)^{-1/2} = √k_T
        Ok(env.thermal_wavenumber().sqrt() * k.powf(-1.5) * (1.0 - u / 4.0 + u * u / 96.0))
    } else {
        Ok(u.exp_m1().powf(-0.5) / k)
    }
}

/// Closed forms of ∫₀^∞ kⁿ l(k)² dk = Γ(n−1)ζ(n−1)·k_T^{n−1}:
/// n = 4 → 2ζ(3)k_T³, n = 5 → (π⁴/15)k_T⁴, n = 6 → 24ζ(5)k_T⁵.
pub fn lineshape_moment_closed(n: u32, env: &ThermalEnvironment) -> Result<f64> {
    let kt = env.thermal_wavenumber();
    let value = match n {
        4 => 2.0 * zeta(3)? * kt.powi(3),
        5 => std::f64::consts::PI.powi(4) / 15.0 * kt.powi(4),
        6 => 24.0 * zeta(5)? * kt.powi(5),
        other => {
            return Err(Error::domain(format!(
                "no closed form wired up for moment n = {other}"
            )))
        }
    };
    Ok(value)
}

/// Same moments by direct quadrature of the lineshape itself (the
/// independent route the closed forms are checked against).
pub fn lineshape_moment_quadrature(n: u32, env: &ThermalEnvironment) -> Result<f64> {
    if !(4..=6).contains(&n) {
        return Err(Error::domain(format!("moment n = {n} outside the supported 4..=6")));
    }
    let kt = env.thermal_wavenumber();
    let q = integrate_semi_infinite(
        |u: f64| {
            if u <= 0.0 {
                return 0.0;
            }
            let k = u * kt;
            let l = lineshape(k, env).expect("positive k");
            k.powi(n as i32) * l * l * kt // dk = k_T du
        },
        &QuadratureSpec::default(),
    )?;
    Ok(q.value)
}
