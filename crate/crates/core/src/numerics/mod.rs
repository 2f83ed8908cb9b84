//! Numerical substrate: quadrature, special functions, 3D frame algebra.

pub mod geometry;
pub mod lstsq;
pub mod quad;
pub mod special;

pub use geometry::{Dyadic3, PropagationFrame, Vec3};
pub use quad::{integrate, integrate_cells, integrate_semi_infinite, Quadrature, QuadratureSpec};
pub use special::{bessel_j0, bessel_j1, erf, zeta};
