//! Statistical mixtures of multi-frequency coherent pulses that reproduce the
//! first-order, equal-space-point correlation function of blackbody radiation.
//!
//! The crate is organised in four layers:
//!
//! * [`numerics`] — adaptive Gauss–Kronrod quadrature on finite and
//!   semi-infinite intervals, the special functions needed here (Bessel
//!   J₀/J₁, erf, ζ(2..5)) and small 3D vector/dyadic algebra with orthonormal
//!   propagation frames.
//! * [`thermal_field`] — blackbody reference quantities: Planck occupancy,
//!   the thermal first-order correlation function, photon and energy
//!   densities, the thermal coherence time.
//! * [`gaussian_mixture`] — the Gaussian-lineshape pulse family, its reduced
//!   two-wavenumber kernel, and the nonnegative least-squares inversion for
//!   the mixture weight density together with a bandwidth feasibility sweep.
//! * [`thermal_pulse`] — the broadband pulse family whose lineshape matches
//!   the thermal spectrum: normalization, energy/momentum statistics,
//!   electric-field and intensity profiles, and the mixture identity with the
//!   thermal correlation function.
//!
//! All spectral integrals are evaluated in the dimensionless variable
//! `u = βħck`; lengths are naturally measured in units of the inverse thermal
//! wavenumber `1/k_T` with `k_T = k_B T / (ħ c)`. Conversion to SI happens at
//! the API boundary.
//!
//! With the `parallel` feature (on by default) the data-parallel inner loops
//! (kernel-matrix assembly, feasibility sweeps, field grids) run on rayon;
//! without it they fall back to equivalent sequential code. Results are
//! bitwise identical either way.

// `!(x > 0.0)` style checks are deliberate: they reject NaN along with the
// out-of-domain sign.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod constants;
pub mod error;
pub mod gaussian_mixture;
pub mod numerics;
pub(crate) mod parallel;
pub mod thermal_field;
pub mod thermal_pulse;

pub use error::{Error, Result};
pub use thermal_field::ThermalEnvironment;
