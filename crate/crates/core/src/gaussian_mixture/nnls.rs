//! Lawson–Hanson active-set solver for min ‖Ax − b‖₂ subject to x ≥ 0.
//!
//! The passive-set subproblems are solved by Householder QR
//! ([`crate::numerics::lstsq`]) with an optional tiny ridge that guards
//! against degenerate columns. Iteration order is fixed (ties broken by the
//! lowest index), so the solution is deterministic.

use crate::error::{Error, Result};
use crate::numerics::lstsq::{norm2, solve_least_squares_subset, DenseMatrix};

#[derive(Debug, Clone, Copy)]
pub struct NnlsOptions {
    /// Iteration budget as a multiple of the number of unknowns.
    pub max_iteration_factor: usize,
    /// Ridge parameter relative to the squared largest column norm.
    pub ridge: f64,
}

impl Default for NnlsOptions {
    fn default() -> Self {
        NnlsOptions { max_iteration_factor: 10, ridge: 1e-12 }
    }
}

#[derive(Debug, Clone)]
pub struct NnlsSolution {
    pub x: Vec<f64>,
    pub residual_norm: f64,
    pub iterations: usize,
}

pub fn nnls(a: &DenseMatrix, b: &[f64], options: &NnlsOptions) -> Result<NnlsSolution> {
    let m = a.rows();
    let n = a.cols();
    if b.len() != m {
        return Err(Error::domain(format!(
            "right-hand side has {} rows, matrix has {m}",
            b.len()
        )));
    }

    let col_scale = a.max_column_norm();
    let ridge = options.ridge * col_scale * col_scale;
    let max_iterations = options.max_iteration_factor.max(1) * n;
    // dual feasibility cutoff; zero right-hand sides exit immediately
    let dual_tol = 10.0 * f64::EPSILON * (m.max(n) as f64) * col_scale * norm2(b);

    let mut x = vec![0.0; n];
    let mut in_passive = vec![false; n];
    let mut passive: Vec<usize> = Vec::new();
    let mut residual = b.to_vec();
    let mut iterations = 0usize;

    loop {
        // dual vector w = Aᵀ(b − Ax); pick the most positive free component
        let w = a.mul_transposed_vec(&residual);
        let mut candidate: Option<(usize, f64)> = None;
        for (j, &wj) in w.iter().enumerate() {
            let improves = candidate.is_none_or(|(_, best)| wj > best);
            if !in_passive[j] && wj > dual_tol && improves {
                candidate = Some((j, wj));
            }
        }
        let Some((entering, _)) = candidate else {
            break;
        };
        passive.push(entering);
        in_passive[entering] = true;

        loop {
            iterations += 1;
            if iterations > max_iterations {
                return Err(Error::Solver(format!(
                    "nnls exceeded {max_iterations} iterations \
                     (passive set size {}, residual {:.3e})",
                    passive.len(),
                    norm2(&residual)
                )));
            }

            let z = solve_least_squares_subset(a, b, &passive, ridge)?;
            if z.iter().all(|&v| v > 0.0) {
                for (idx, &j) in passive.iter().enumerate() {
                    x[j] = z[idx];
                }
                break;
            }

            // interpolate toward z until the first passive coordinate hits 0
            let mut alpha = f64::INFINITY;
            let mut blocking = usize::MAX;
            for (idx, &j) in passive.iter().enumerate() {
                if z[idx] <= 0.0 {
                    let t = x[j] / (x[j] - z[idx]);
                    if t < alpha {
                        alpha = t;
                        blocking = j;
                    }
                }
            }
            for (idx, &j) in passive.iter().enumerate() {
                x[j] += alpha * (z[idx] - x[j]);
            }
            // move the blocking coordinate (and any rounded to ≤ 0) out
            for &j in passive.iter() {
                if j == blocking || x[j] <= 0.0 {
                    x[j] = 0.0;
                    in_passive[j] = false;
                }
            }
            passive.retain(|&j| in_passive[j]);
            if passive.is_empty() {
                break;
            }
        }

        residual = b.to_vec();
        let ax = a.mul_vec(&x);
        for (r, v) in residual.iter_mut().zip(&ax) {
            *r -= v;
        }
    }

    Ok(NnlsSolution { x, residual_norm: norm2(&residual), iterations })
}
