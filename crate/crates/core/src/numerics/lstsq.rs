//! Dense least squares via Householder QR, used by the nonnegative solver
//! for its passive-set subproblems.

#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};

/// Column-major dense matrix, sized at construction.
#[derive(Debug, Clone)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if nrows == 0 || ncols == 0 {
            return Err(Error::domain("matrix must have at least one row and column"));
        }
        let mut m = DenseMatrix::zeros(nrows, ncols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::domain("ragged rows"));
            }
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[j * self.rows + i]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[j * self.rows + i] = v;
    }

    pub fn column(&self, j: usize) -> &[f64] {
        &self.data[j * self.rows..(j + 1) * self.rows]
    }

    /// y = A x
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.cols);
        let mut y = vec![0.0; self.rows];
        for (j, &xj) in x.iter().enumerate() {
            if xj == 0.0 {
                continue;
            }
            let col = self.column(j);
            for (yi, &aij) in y.iter_mut().zip(col) {
                *yi += aij * xj;
            }
        }
        y
    }

    /// y = Aᵀ x
    pub fn mul_transposed_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.rows);
        (0..self.cols)
            .map(|j| self.column(j).iter().zip(x).map(|(&a, &b)| a * b).sum())
            .collect()
    }

    pub fn max_column_norm(&self) -> f64 {
        (0..self.cols)
            .map(|j| self.column(j).iter().map(|v| v * v).sum::<f64>().sqrt())
            .fold(0.0, f64::max)
    }
}

/// Minimizes ‖A_S x − b‖² + λ‖x‖² over the columns of `a` selected by
/// `support`, returning the coefficients in support order. The ridge enters
/// through √λ rows appended below the subproblem, so λ = 0 is the plain
/// least-squares solve.
pub fn solve_least_squares_subset(
    a: &DenseMatrix,
    b: &[f64],
    support: &[usize],
    ridge: f64,
) -> Result<Vec<f64>> {
    let m = a.rows();
    let p = support.len();
    if p == 0 {
        return Ok(Vec::new());
    }
    if ridge <= 0.0 && p > m {
        return Err(Error::Solver("underdetermined passive set requires a ridge".into()));
    }

    // augmented [A_S; sqrt(ridge) I], [b; 0]
    let nrows = m + if ridge > 0.0 { p } else { 0 };
    let mut work = DenseMatrix::zeros(nrows, p);
    for (jj, &j) in support.iter().enumerate() {
        for i in 0..m {
            work.set(i, jj, a.get(i, j));
        }
        if ridge > 0.0 {
            work.set(m + jj, jj, ridge.sqrt());
        }
    }
    let mut rhs = vec![0.0; nrows];
    rhs[..m].copy_from_slice(b);

    householder_solve(&mut work, &mut rhs)
}

/// In-place Householder QR of `a` with simultaneous application to `rhs`,
/// followed by back substitution. `a` must have at least as many rows as
/// columns.
fn householder_solve(a: &mut DenseMatrix, rhs: &mut [f64]) -> Result<Vec<f64>> {
    let m = a.rows();
    let n = a.cols();
    debug_assert!(m >= n);

    let mut diag = vec![0.0; n];
    for k in 0..n {
        // build the reflector for column k
        let mut norm = 0.0;
        for i in k..m {
            norm = f64::hypot(norm, a.get(i, k));
        }
        if norm == 0.0 {
            return Err(Error::Solver(format!("rank-deficient column {k} in least squares")));
        }
        let alpha = if a.get(k, k) > 0.0 { -norm } else { norm };
        diag[k] = alpha;
        let akk = a.get(k, k) - alpha;
        a.set(k, k, akk);
        // reflector application: x ← x − τ(vᵀx)v with τ = 2/(vᵀv) = −1/(α·v_k)
        let beta = 1.0 / (alpha * akk);

        for j in (k + 1)..n {
            let mut s = 0.0;
            for i in k..m {
                s += a.get(i, k) * a.get(i, j);
            }
            let s = s * beta;
            for i in k..m {
                let v = a.get(i, j) + s * a.get(i, k);
                a.set(i, j, v);
            }
        }
        let mut s = 0.0;
        for i in k..m {
            s += a.get(i, k) * rhs[i];
        }
        let s = s * beta;
        for i in k..m {
            rhs[i] += s * a.get(i, k);
        }
    }

    let mut x = vec![0.0; n];
    for k in (0..n).rev() {
        let mut s = rhs[k];
        for j in (k + 1)..n {
            s -= a.get(k, j) * x[j];
        }
        if diag[k] == 0.0 {
            return Err(Error::Solver("zero pivot in triangular solve".into()));
        }
        x[k] = s / diag[k];
    }
    Ok(x)
}

pub fn norm2(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}
