//! Independent-oracle checks: every closed form that the library leans on is
//! recomputed here from its defining integral or identity.

mod common;

use approx::assert_relative_eq;
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use lumen_mix_core::gaussian_mixture::kernel_m;
use lumen_mix_core::numerics::Vec3;
use lumen_mix_core::thermal_field::ThermalEnvironment;
use lumen_mix_core::thermal_pulse::{field_components, AngularProfile, ThermalPulseSpec};

#[test]
fn kernel_closed_form_matches_angular_chain() {
    // the spec point k = k₀ = 10σ plus seeded random triples
    let mut cases = vec![(10.0, 10.0, 1.0)];
    let mut rng = StdRng::seed_from_u64(0x6b65726e);
    for _ in 0..6 {
        let sigma = 10f64.powf(rng.gen_range(-1.0..1.0));
        let k = sigma * rng.gen_range(0.1..15.0);
        let k_o = sigma * rng.gen_range(0.1..15.0);
        cases.push((k, k_o, sigma));
    }
    for (k, k_o, sigma) in cases {
        let closed = kernel_m(k, k_o, sigma).unwrap();
        let brute = common::kernel_m_bruteforce(k, k_o, sigma);
        assert_relative_eq!(closed, brute, max_relative = 1e-8);
    }
}

#[test]
fn gaussian_normalization_is_unit() {
    let mut rng = StdRng::seed_from_u64(0x4e67);
    for _ in 0..5 {
        let sigma = 10f64.powf(rng.gen_range(-1.0..1.0));
        let k_o = sigma * rng.gen_range(0.5..20.0);
        let norm = common::gaussian_norm_bruteforce(sigma, k_o);
        assert_relative_eq!(norm, 1.0, max_relative = 1e-8);
    }
}

#[test]
fn pulse_normalization_is_unit() {
    let env = ThermalEnvironment::solar();
    let mut rng = StdRng::seed_from_u64(0x4e62);
    let mut profiles = vec![
        AngularProfile::truncated_parabola().unwrap(),
        AngularProfile::uniform_hemisphere().unwrap(),
        AngularProfile::uniform_sphere().unwrap(),
    ];
    for _ in 0..2 {
        profiles.push(AngularProfile::truncated_gaussian(rng.gen_range(0.03..0.4)).unwrap());
    }
    for profile in profiles {
        let spec = ThermalPulseSpec::with_defaults(env, profile).unwrap();
        let norm = common::pulse_norm_bruteforce(&spec);
        assert_relative_eq!(norm, 1.0, max_relative = 1e-8);
    }
}

/// Helicity vectors from an orthonormal transverse pair.
fn helicity_vectors(k_hat: Vec3) -> ([Complex64; 3], [Complex64; 3]) {
    let (e1, e2) = common::perpendicular_pair(k_hat);
    let inv_sqrt2 = 1.0 / 2.0f64.sqrt();
    let mut plus = [Complex64::new(0.0, 0.0); 3];
    let mut minus = [Complex64::new(0.0, 0.0); 3];
    for i in 0..3 {
        plus[i] = Complex64::new(-e1[i] * inv_sqrt2, -e2[i] * inv_sqrt2);
        minus[i] = Complex64::new(e1[i] * inv_sqrt2, -e2[i] * inv_sqrt2);
    }
    (plus, minus)
}

#[test]
fn polarization_sum_identities() {
    // Σ_λ e*_λ e_λ = 𝟙 − k̂k̂, and Σ_λ ((k×n̂)·e*_λ) e_λ = k×n̂
    let mut rng = StdRng::seed_from_u64(0x706f6c);
    for _ in 0..20 {
        let k_vec = Vec3::new(
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        );
        if k_vec.norm() < 0.1 {
            continue;
        }
        let k_hat = k_vec.normalized().unwrap();
        let (plus, minus) = helicity_vectors(k_hat);

        for i in 0..3 {
            for j in 0..3 {
                let sum: Complex64 = plus[i].conj() * plus[j] + minus[i].conj() * minus[j];
                let expected = (if i == j { 1.0 } else { 0.0 }) - k_hat[i] * k_hat[j];
                assert_relative_eq!(sum.re, expected, epsilon = 1e-12);
                assert!(sum.im.abs() < 1e-12);
            }
        }

        let n_hat = Vec3::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        )
        .normalized()
        .unwrap();
        let w = k_vec.cross(n_hat); // perpendicular to k by construction
        let mut reconstructed = [Complex64::new(0.0, 0.0); 3];
        for basis in [&plus, &minus] {
            let mut proj = Complex64::new(0.0, 0.0);
            for i in 0..3 {
                proj += basis[i].conj() * w[i];
            }
            for i in 0..3 {
                reconstructed[i] += proj * basis[i];
            }
        }
        for i in 0..3 {
            assert_relative_eq!(reconstructed[i].re, w[i], epsilon = 1e-12);
            assert!(reconstructed[i].im.abs() < 1e-12);
        }
    }
}

#[test]
fn field_reduction_matches_pre_bessel_form() {
    let env = ThermalEnvironment::solar();
    let spec = ThermalPulseSpec::with_defaults(
        env,
        AngularProfile::truncated_gaussian(0.1).unwrap(),
    )
    .unwrap();
    let kt = env.thermal_wavenumber();

    // at the pulse center the two routes must agree to 1e-6
    let reduced = field_components(&spec, 0.0, 0.0, 0.0, 0.0).unwrap();
    let brute = common::field_eu_bruteforce(&spec, 0.0, 0.0, 0.0, 0.0);
    assert_relative_eq!(reduced.e_u.re, brute.re, max_relative = 1e-6);
    assert_relative_eq!(reduced.e_u.im, brute.im, max_relative = 1e-6);

    // off-center spot check of the full phase structure
    let (r, theta, phi) = (0.8 / kt, 0.9, 0.4);
    let reduced = field_components(&spec, r, theta, phi, 0.0).unwrap();
    let brute = common::field_eu_bruteforce(&spec, r, theta, phi, 0.0);
    let denom = brute.norm().max(1e-300);
    assert!(
        (reduced.e_u - brute).norm() / denom < 1e-5,
        "off-center mismatch: {} vs {}",
        reduced.e_u,
        brute
    );
}
