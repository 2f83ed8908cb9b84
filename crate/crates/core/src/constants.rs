//! Physical constants (CODATA 2018 exact or recommended values).
//!
//! Hard-coded so that every emitted number is reproducible; the version tag
//! is written into run manifests.

/// Reduced Planck constant, J·s.
pub const HBAR: f64 = 1.054_571_817e-34;

/// Speed of light in vacuum, m/s (exact).
pub const C: f64 = 2.997_924_58e8;

/// Boltzmann constant, J/K (exact).
pub const K_B: f64 = 1.380_649e-23;

/// Vacuum permittivity, F/m.
pub const EPSILON_0: f64 = 8.854_187_812_8e-12;

/// One electron-volt, J (exact).
pub const EV: f64 = 1.602_176_634e-19;

/// Tag recorded in manifests so downstream artifacts can be traced to the
/// constant set they were produced with.
pub const CONSTANTS_VERSION: &str = "codata-2018";
