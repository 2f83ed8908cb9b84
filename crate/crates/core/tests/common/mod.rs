//! Brute-force oracles shared by the integration suites. Everything here
//! recomputes the library's claims from their defining integrals, staying
//! off the closed-form code paths it checks.

#![allow(dead_code)]

use num_complex::Complex64;

use lumen_mix_core::constants::{C, EPSILON_0, HBAR};
use lumen_mix_core::numerics::{integrate, integrate_semi_infinite, QuadratureSpec, Vec3};
use lumen_mix_core::thermal_pulse::ThermalPulseSpec;

/// Any orthonormal pair spanning the plane perpendicular to `axis`.
pub fn perpendicular_pair(axis: Vec3) -> (Vec3, Vec3) {
    let seed = if axis[0].abs() < 0.9 {
        Vec3::new(1.0, 0.0, 0.0)
    } else {
        Vec3::new(0.0, 1.0, 0.0)
    };
    let e1 = (seed - axis * seed.dot(axis)).normalized().unwrap();
    let e2 = axis.cross(e1);
    (e1, e2)
}

/// xx component of the Ψ-averaged tensor ∫dΨ (x̂·(k×n̂))(x̂·(k×n̂)) by plain
/// trapezoid (the integrand is a degree-2 trigonometric polynomial in Ψ, so
/// the trapezoid rule is exact here).
fn psi_average_xx(k_vec: Vec3, m_hat: Vec3, n_psi: usize) -> f64 {
    let (e1, e2) = perpendicular_pair(m_hat);
    let mut acc = 0.0;
    for i in 0..n_psi {
        let psi = 2.0 * std::f64::consts::PI * i as f64 / n_psi as f64;
        let n_hat = e1 * psi.cos() + e2 * psi.sin();
        let kxn = k_vec.cross(n_hat);
        acc += kxn[0] * kxn[0];
    }
    acc * 2.0 * std::f64::consts::PI / n_psi as f64
}

/// Brute-force reduced kernel M(k, k₀): the full angular chain
/// Ψ-average → φ̄-average over the direction of k₀ → θ quadrature with the
/// Gaussian weight, assembled against the mixture normalization 8π³N²k₀².
pub fn kernel_m_bruteforce(k: f64, k_o: f64, sigma: f64) -> f64 {
    let pi = std::f64::consts::PI;
    let k_vec = Vec3::new(0.0, 0.0, k);
    let k_hat = Vec3::new(0.0, 0.0, 1.0);
    let (e1, e2) = perpendicular_pair(k_hat);
    let n_phibar = 64;

    // φ̄-averaged Ψ-average at polar angle θ of m̂ around k̂
    let phibar_xx = |x: f64| {
        let sin_t = (1.0 - x * x).max(0.0).sqrt();
        let mut acc = 0.0;
        for i in 0..n_phibar {
            let phibar = 2.0 * pi * i as f64 / n_phibar as f64;
            let m_hat = k_hat * x + e1 * (sin_t * phibar.cos()) + e2 * (sin_t * phibar.sin());
            acc += psi_average_xx(k_vec, m_hat, 64);
        }
        acc * 2.0 * pi / n_phibar as f64
    };

    let spec = QuadratureSpec::new(1e-11, 0.0, 2000);
    let chain = integrate(
        |x: f64| {
            let gauss = (-(k * k + k_o * k_o - 2.0 * k * k_o * x) / (sigma * sigma)).exp();
            gauss * phibar_xx(x)
        },
        -1.0,
        1.0,
        &spec,
    )
    .unwrap()
    .value;

    let n_sq = 1.0 / (pi * pi.sqrt() * sigma.powi(3) * (k_o * k_o + sigma * sigma));
    8.0 * pi.powi(3) * n_sq * k_o * k_o * chain
}

/// Σ_λ ∫|f|² d³k for a Gaussian-lineshape pulse, by direct spherical
/// quadrature (k adaptive × x adaptive × φ trapezoid). Should be 1.
pub fn gaussian_norm_bruteforce(sigma: f64, k_o: f64) -> f64 {
    let pi = std::f64::consts::PI;
    let n_sq = 1.0 / (pi * pi.sqrt() * sigma.powi(3) * (k_o * k_o + sigma * sigma));
    let spec = QuadratureSpec::new(1e-11, 0.0, 4000);
    let n_phi = 64;

    let lo = (k_o - 15.0 * sigma).max(1e-9 * sigma.min(k_o));
    let hi = k_o + 15.0 * sigma;
    integrate(
        |k: f64| {
            let inner = integrate(
                |x: f64| {
                    // φ average of k² − (k·n̂)² with n̂ ⊥ m̂
                    let sin2 = 1.0 - x * x;
                    let mut phi_acc = 0.0;
                    for i in 0..n_phi {
                        let phi = 2.0 * pi * i as f64 / n_phi as f64;
                        phi_acc += 1.0 - sin2 * phi.cos().powi(2);
                    }
                    let phi_avg = phi_acc * 2.0 * pi / n_phi as f64;
                    let gauss =
                        (-(k * k + k_o * k_o - 2.0 * k * k_o * x) / (sigma * sigma)).exp();
                    gauss * phi_avg
                },
                -1.0,
                1.0,
                &spec,
            )
            .unwrap()
            .value;
            n_sq * k.powi(4) * inner
        },
        lo,
        hi,
        &spec,
    )
    .unwrap()
    .value
}

/// Σ_λ ∫|f|² d³k for a thermal pulse, by direct spherical quadrature in
/// u = βħck. Should be 1.
pub fn pulse_norm_bruteforce(spec: &ThermalPulseSpec) -> f64 {
    let pi = std::f64::consts::PI;
    let kt = spec.env.thermal_wavenumber();
    let qspec = QuadratureSpec::new(1e-11, 1e-16, 4000);
    let n_phi = 64;
    let (lo, hi) = spec.profile.support();

    let angular = integrate(
        |x: f64| {
            let upsilon = spec.profile.value(x);
            if upsilon == 0.0 {
                return 0.0;
            }
            let sin2 = 1.0 - x * x;
            let mut phi_acc = 0.0;
            for i in 0..n_phi {
                let phi = 2.0 * pi * i as f64 / n_phi as f64;
                phi_acc += 1.0 - sin2 * phi.cos().powi(2);
            }
            upsilon * upsilon * phi_acc * 2.0 * pi / n_phi as f64
        },
        lo,
        hi,
        &qspec,
    )
    .unwrap()
    .value;

    let radial = integrate_semi_infinite(
        |u: f64| {
            if u <= 0.0 {
                return 0.0;
            }
            // k⁴ l(k)² dk = k_T³ u²/(e^u−1) du
            kt.powi(3) * u * u / u.exp_m1()
        },
        &qspec,
    )
    .unwrap()
    .value;

    spec.normalization().powi(2) * radial * angular
}

/// û component of the pulse field from the defining 3D integral (pre-Bessel
/// form), with the φ integral done by trapezoid. Independent of the
/// Bessel-kernel reduction used by the library.
pub fn field_eu_bruteforce(
    spec: &ThermalPulseSpec,
    r: f64,
    theta_big: f64,
    phi_big: f64,
    t: f64,
) -> Complex64 {
    let pi = std::f64::consts::PI;
    let kt = spec.env.thermal_wavenumber();
    let qspec = QuadratureSpec::new(1e-9, 1e-14, 4000);
    let (lo, hi) = spec.profile.support();
    let tau_hat = C * kt * t;

    let radial = integrate_semi_infinite(
        |u: f64| {
            if u <= 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            let k = u * kt;
            let envelope = u.powf(2.5) / u.exp_m1().sqrt();
            if u > 3.0 && envelope < 1e-14 {
                return Complex64::new(0.0, 0.0);
            }
            let kr = k * r;
            let n_phi = 64.max(6 * (1.0 + kr) as usize);
            let angular = integrate(
                |x: f64| {
                    let upsilon = spec.profile.value(x);
                    if upsilon == 0.0 {
                        return Complex64::new(0.0, 0.0);
                    }
                    let sin_t = (1.0 - x * x).max(0.0).sqrt();
                    let mut acc = Complex64::new(0.0, 0.0);
                    for i in 0..n_phi {
                        let phi = 2.0 * pi * i as f64 / n_phi as f64;
                        let k_dot_r = kr
                            * (sin_t * theta_big.sin() * (phi - phi_big).cos()
                                + x * theta_big.cos());
                        acc += Complex64::new(0.0, -k_dot_r).exp();
                    }
                    acc * (upsilon * x * 2.0 * pi / n_phi as f64)
                },
                lo,
                hi,
                &qspec,
            )
            .unwrap()
            .value;
            angular * envelope * Complex64::new(0.0, -tau_hat * u).exp()
        },
        &qspec,
    )
    .unwrap()
    .value;

    // iNα √(ħc/16π³ε₀) k_T^{7/2}, matching the u-substituted radial weight
    let scale = spec.normalization() * (HBAR * C / (16.0 * pi.powi(3) * EPSILON_0)).sqrt()
        * kt.powf(3.5);
    Complex64::new(0.0, 1.0) * spec.alpha * scale * radial
}
