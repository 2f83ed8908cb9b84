//! Direction-spread profile υ(x) over x = k̂·m̂ and its cached polynomial
//! moments C_n = ∫ x^n υ²(x) dx.

use crate::error::{Error, Result};
use crate::numerics::{integrate, QuadratureSpec};

/// Supported υ shapes. All are supported within [−1, 1] and peak at x = 1
/// except the isotropic sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProfileKind {
    /// θ(x)θ(1−x)·e^{−(x−1)²/γ²}
    TruncatedGaussian { gamma: f64 },
    /// θ(x)θ(1−x)·(1−(x−1)²)
    TruncatedParabola,
    /// θ(x)θ(1−x)
    UniformHemisphere,
    /// υ ≡ 1 on [−1, 1]
    UniformSphere,
}

/// υ(x) together with its moments C₀…C₄, computed once at construction by
/// quadrature to 1e-10.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularProfile {
    kind: ProfileKind,
    moments: [f64; 5],
}

impl AngularProfile {
    pub fn truncated_gaussian(gamma: f64) -> Result<Self> {
        if !(gamma > 0.0) || !gamma.is_finite() {
            return Err(Error::domain(format!("gamma must be positive, got {gamma}")));
        }
        AngularProfile::build(ProfileKind::TruncatedGaussian { gamma })
    }

    pub fn truncated_parabola() -> Result<Self> {
        AngularProfile::build(ProfileKind::TruncatedParabola)
    }

    pub fn uniform_hemisphere() -> Result<Self> {
        AngularProfile::build(ProfileKind::UniformHemisphere)
    }

    pub fn uniform_sphere() -> Result<Self> {
        AngularProfile::build(ProfileKind::UniformSphere)
    }

    fn build(kind: ProfileKind) -> Result<Self> {
        let (lo, hi) = support_of(kind);
        let spec = QuadratureSpec::new(1e-12, 1e-18, 2000);
        let mut moments = [0.0; 5];
        for (n, slot) in moments.iter_mut().enumerate() {
            let q = integrate(
                |x: f64| x.powi(n as i32) * value_of(kind, x).powi(2),
                lo,
                hi,
                &spec,
            )?;
            *slot = q.value;
        }
        let profile = AngularProfile { kind, moments };
        profile.check_invariants()?;
        Ok(profile)
    }

    fn check_invariants(&self) -> Result<()> {
        let c = &self.moments;
        let ok = c[0] > 0.0
            && c[0] >= c[2]
            && c[2] >= c[4]
            && c[4] > 0.0
            && c[1].abs() <= c[0]
            && c[3].abs() <= c[2];
        if ok {
            Ok(())
        } else {
            Err(Error::Inconsistency(format!("moment ordering violated: {c:?}")))
        }
    }

    pub fn kind(&self) -> ProfileKind {
        self.kind
    }

    /// υ(x).
    pub fn value(&self, x: f64) -> f64 {
        value_of(self.kind, x)
    }

    /// Interval outside which υ vanishes.
    pub fn support(&self) -> (f64, f64) {
        support_of(self.kind)
    }

    /// Sub-interval that carries all but a ~1e-60 fraction of υ²; shrinks
    /// the oscillatory field integrals for narrow Gaussian profiles.
    pub fn effective_support(&self) -> (f64, f64) {
        match self.kind {
            ProfileKind::TruncatedGaussian { gamma } => ((1.0 - 12.0 * gamma).max(0.0), 1.0),
            other => support_of(other),
        }
    }

    /// Cached moments C₀…C₄.
    pub fn moments(&self) -> &[f64; 5] {
        &self.moments
    }

    pub fn label(&self) -> String {
        match self.kind {
            ProfileKind::TruncatedGaussian { gamma } => format!("truncated_gaussian(gamma={gamma})"),
            ProfileKind::TruncatedParabola => "truncated_parabola".into(),
            ProfileKind::UniformHemisphere => "uniform_hemisphere".into(),
            ProfileKind::UniformSphere => "uniform_sphere".into(),
        }
    }
}

fn support_of(kind: ProfileKind) -> (f64, f64) {
    match kind {
        ProfileKind::UniformSphere => (-1.0, 1.0),
        _ => (0.0, 1.0),
    }
}

fn value_of(kind: ProfileKind, x: f64) -> f64 {
    let (lo, hi) = support_of(kind);
    if !(lo..=hi).contains(&x) {
        return 0.0;
    }
    match kind {
        ProfileKind::TruncatedGaussian { gamma } => (-((x - 1.0) / gamma).powi(2)).exp(),
        ProfileKind::TruncatedParabola => 1.0 - (x - 1.0).powi(2),
        ProfileKind::UniformHemisphere | ProfileKind::UniformSphere => 1.0,
    }
}
