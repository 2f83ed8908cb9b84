//! The broadband "thermal pulse" family: lineshape matched to the Planck
//! spectrum, angular spread profile with cached moments, normalization,
//! energy/momentum statistics, electric-field and intensity profiles, and
//! the mixture identity with the thermal correlation function.

pub mod field;
pub mod lineshape;
pub mod mixture;
pub mod moments;
pub mod profile;

pub use field::{
    field_components, field_vector_at, intensity_profile, FieldSample, IntensityGrid,
    IntensityProfile, MAX_KT_RADIUS,
};
pub use lineshape::{lineshape, lineshape_moment_closed, lineshape_moment_quadrature};
pub use mixture::{g1_thermal_pulse_mixture, mixture_density_constraint, MixtureSpec};
pub use moments::{
    energy_mean_closed_ev, energy_mean_ev, energy_std_closed_ev, energy_std_ev, moment_report,
    momentum_mean_erf_closed_form_ev_c, momentum_mean_ev_c, momentum_std_ev_c,
    momentum_variance_ev_c, MomentReport,
};
pub use profile::{AngularProfile, ProfileKind};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::PropagationFrame;
use crate::thermal_field::ThermalEnvironment;

/// A thermal pulse: environment, direction spread, amplitude and frame,
/// with the normalization constant
/// N = [π(C₀+C₂)∫₀^∞ k⁴l(k)²dk]^{−1/2}
/// computed at construction and cross-checked against the closed form
/// ∫k⁴l²dk = 2ζ(3)k_T³ to 1e-10.
#[derive(Debug, Clone)]
pub struct ThermalPulseSpec {
    pub env: ThermalEnvironment,
    pub profile: AngularProfile,
    pub alpha: Complex64,
    pub frame: PropagationFrame,
    normalization: f64,
}

impl ThermalPulseSpec {
    pub fn new(
        env: ThermalEnvironment,
        profile: AngularProfile,
        alpha: Complex64,
        frame: PropagationFrame,
    ) -> Result<Self> {
        let i4_quad = lineshape::lineshape_moment_quadrature(4, &env)?;
        let i4_closed = lineshape::lineshape_moment_closed(4, &env)?;
        let rel = ((i4_quad - i4_closed) / i4_closed).abs();
        if rel > 1e-10 {
            return Err(Error::Inconsistency(format!(
                "∫k⁴l²dk quadrature disagrees with 2ζ(3)k_T³ by {rel:.2e}"
            )));
        }
        let c = profile.moments();
        let norm_sq = std::f64::consts::PI * (c[0] + c[2]) * i4_quad;
        Ok(ThermalPulseSpec { env, profile, alpha, frame, normalization: norm_sq.powf(-0.5) })
    }

    /// Convenience constructor with α = 1 and the canonical frame.
    pub fn with_defaults(env: ThermalEnvironment, profile: AngularProfile) -> Result<Self> {
        ThermalPulseSpec::new(
            env,
            profile,
            Complex64::new(1.0, 0.0),
            PropagationFrame::canonical(),
        )
    }

    /// Normalization constant N of the spectral distribution, in m^{3/2}.
    pub fn normalization(&self) -> f64 {
        self.normalization
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::zeta;
    use approx::assert_relative_eq;

    #[test]
    fn normalization_against_closed_form() {
        let env = ThermalEnvironment::solar();
        let profile = AngularProfile::truncated_gaussian(0.1).unwrap();
        let spec = ThermalPulseSpec::with_defaults(env, profile).unwrap();
        let c = spec.profile.moments();
        let kt = env.thermal_wavenumber();
        let expected = (std::f64::consts::PI
            * (c[0] + c[2])
            * 2.0
            * zeta(3).unwrap()
            * kt.powi(3))
        .powf(-0.5);
        assert_relative_eq!(spec.normalization(), expected, max_relative = 1e-10);
    }
}
