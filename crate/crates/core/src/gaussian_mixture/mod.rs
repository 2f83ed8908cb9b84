//! The Gaussian-lineshape pulse family: reduced two-wavenumber kernel,
//! nonnegative inversion of the mixture weight density, and the bandwidth
//! feasibility sweep.

pub mod kernel;
pub mod nnls;
pub mod solve;

pub use kernel::{angular_tensor, kernel_m, GaussianPulseSpec};
pub use nnls::{nnls, NnlsOptions, NnlsSolution};
pub use solve::{
    assemble_g1_gaussian, assemble_kernel_matrix, assemble_kernel_matrix_seq,
    default_wavenumber_grid, default_weight_grid, feasibility_sweep, fwhm_thz_to_sigma,
    sigma_to_fwhm_thz, solve_weights, solve_weights_with, FeasibilitySweep, SolveOptions,
    SweepRow, WeightSolution,
};
