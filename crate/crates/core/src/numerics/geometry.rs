//! Small 3D vector/dyadic algebra and orthonormal propagation frames.

use std::ops::{Add, Index, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Cartesian 3-vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec3(pub [f64; 3]);

impl Vec3 {
    pub const ZERO: Vec3 = Vec3([0.0; 3]);

    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3([x, y, z])
    }

    pub fn dot(self, other: Vec3) -> f64 {
        self.0[0] * other.0[0] + self.0[1] * other.0[1] + self.0[2] * other.0[2]
    }

    pub fn cross(self, other: Vec3) -> Vec3 {
        let a = self.0;
        let b = other.0;
        Vec3([
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ])
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn normalized(self) -> Result<Vec3> {
        let n = self.norm();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::domain("cannot normalize a zero or non-finite vector"));
        }
        Ok(self * (1.0 / n))
    }

    /// Outer product a ⊗ b.
    pub fn outer(self, other: Vec3) -> Dyadic3 {
        let mut m = [[0.0; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = self.0[i] * other.0[j];
            }
        }
        Dyadic3(m)
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3([self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2]])
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3([self.0[0] * s, self.0[1] * s, self.0[2] * s])
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        self * -1.0
    }
}

impl Index<usize> for Vec3 {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

/// Real 3×3 dyadic, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dyadic3(pub [[f64; 3]; 3]);

impl Dyadic3 {
    pub const ZERO: Dyadic3 = Dyadic3([[0.0; 3]; 3]);

    pub fn identity() -> Self {
        let mut m = [[0.0; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        Dyadic3(m)
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0[i][j]
    }

    pub fn trace(&self) -> f64 {
        self.0[0][0] + self.0[1][1] + self.0[2][2]
    }

    /// Largest absolute deviation from symmetry; zero for dyadics built from
    /// variance computations.
    pub fn asymmetry(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            for j in (i + 1)..3 {
                worst = worst.max((self.0[i][j] - self.0[j][i]).abs());
            }
        }
        worst
    }

    pub fn apply(&self, v: Vec3) -> Vec3 {
        Vec3([
            Vec3(self.0[0]).dot(v),
            Vec3(self.0[1]).dot(v),
            Vec3(self.0[2]).dot(v),
        ])
    }
}

impl Add for Dyadic3 {
    type Output = Dyadic3;
    fn add(self, o: Dyadic3) -> Dyadic3 {
        let mut m = self.0;
        for (row, other) in m.iter_mut().zip(&o.0) {
            for (e, v) in row.iter_mut().zip(other) {
                *e += v;
            }
        }
        Dyadic3(m)
    }
}

impl Sub for Dyadic3 {
    type Output = Dyadic3;
    fn sub(self, o: Dyadic3) -> Dyadic3 {
        let mut m = self.0;
        for (row, other) in m.iter_mut().zip(&o.0) {
            for (e, v) in row.iter_mut().zip(other) {
                *e -= v;
            }
        }
        Dyadic3(m)
    }
}

impl Mul<f64> for Dyadic3 {
    type Output = Dyadic3;
    fn mul(self, s: f64) -> Dyadic3 {
        let mut m = self.0;
        for row in &mut m {
            for e in row.iter_mut() {
                *e *= s;
            }
        }
        Dyadic3(m)
    }
}

const FRAME_TOL: f64 = 1e-12;

/// Right-handed orthonormal triple (n̂, û, m̂) locating a pulse: m̂ is the
/// mean propagation direction, n̂ the direction along which the field has no
/// component, and û = m̂ × n̂ completes the frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagationFrame {
    m_hat: Vec3,
    n_hat: Vec3,
    u_hat: Vec3,
}

impl PropagationFrame {
    /// Builds the frame from the propagation direction and the
    /// polarization-null direction; both must be unit vectors orthogonal to
    /// each other within 1e-12. û is always computed as m̂ × n̂.
    pub fn new(m_hat: Vec3, n_hat: Vec3) -> Result<Self> {
        if (m_hat.norm() - 1.0).abs() > FRAME_TOL {
            return Err(Error::domain("m_hat must be a unit vector"));
        }
        if (n_hat.norm() - 1.0).abs() > FRAME_TOL {
            return Err(Error::domain("n_hat must be a unit vector"));
        }
        if m_hat.dot(n_hat).abs() > FRAME_TOL {
            return Err(Error::domain("m_hat and n_hat must be orthogonal"));
        }
        Ok(PropagationFrame { m_hat, n_hat, u_hat: m_hat.cross(n_hat) })
    }

    /// Frame built from arbitrary (non-degenerate) directions: `m` is
    /// normalized and the component of `n` along `m` is projected out.
    pub fn from_directions(m: Vec3, n: Vec3) -> Result<Self> {
        let m_hat = m.normalized()?;
        let n_perp = n - m_hat * n.dot(m_hat);
        let n_hat = n_perp.normalized().map_err(|_| {
            Error::domain("polarization direction is parallel to the propagation direction")
        })?;
        PropagationFrame::new(m_hat, n_hat)
    }

    /// m̂ = ẑ, n̂ = x̂, û = ŷ.
    pub fn canonical() -> Self {
        PropagationFrame {
            m_hat: Vec3::new(0.0, 0.0, 1.0),
            n_hat: Vec3::new(1.0, 0.0, 0.0),
            u_hat: Vec3::new(0.0, 1.0, 0.0),
        }
    }

    pub fn m_hat(&self) -> Vec3 {
        self.m_hat
    }

    pub fn n_hat(&self) -> Vec3 {
        self.n_hat
    }

    pub fn u_hat(&self) -> Vec3 {
        self.u_hat
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn cross_products() {
        let x = Vec3::new(1.0, 0.0, 0.0);
        let y = Vec3::new(0.0, 1.0, 0.0);
        assert_eq!(x.cross(y), Vec3::new(0.0, 0.0, 1.0));
    }

    #[test]
    fn canonical_frame_is_right_handed() {
        let f = PropagationFrame::canonical();
        assert_eq!(f.u_hat(), f.m_hat().cross(f.n_hat()));
        // (n̂, û, m̂) direct: n̂ × û = m̂
        assert_eq!(f.n_hat().cross(f.u_hat()), f.m_hat());
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(PropagationFrame::new(Vec3::new(0.0, 0.0, 2.0), Vec3::new(1.0, 0.0, 0.0)).is_err());
        assert!(PropagationFrame::new(Vec3::new(0.0, 0.0, 1.0), Vec3::new(0.0, 0.0, 1.0)).is_err());
    }

    #[test]
    fn dyadic_contraction() {
        let d = Vec3::new(1.0, 2.0, 3.0).outer(Vec3::new(4.0, 5.0, 6.0));
        assert_relative_eq!(d.trace(), 4.0 + 10.0 + 18.0);
        let v = d.apply(Vec3::new(1.0, 1.0, 1.0));
        assert_relative_eq!(v[0], 15.0);
        assert_relative_eq!(v[2], 45.0);
    }

    proptest! {
        #[test]
        fn frame_from_directions_is_orthonormal_right_handed(
            mx in -1.0f64..1.0, my in -1.0f64..1.0, mz in -1.0f64..1.0,
            nx in -1.0f64..1.0, ny in -1.0f64..1.0, nz in -1.0f64..1.0,
        ) {
            let m = Vec3::new(mx, my, mz);
            let n = Vec3::new(nx, ny, nz);
            prop_assume!(m.norm() > 1e-3);
            prop_assume!(m.cross(n).norm() > 1e-3 * m.norm() * n.norm().max(1e-12));
            let f = PropagationFrame::from_directions(m, n).unwrap();
            prop_assert!((f.m_hat().norm() - 1.0).abs() < 1e-12);
            prop_assert!((f.n_hat().norm() - 1.0).abs() < 1e-12);
            prop_assert!((f.u_hat().norm() - 1.0).abs() < 1e-12);
            prop_assert!(f.m_hat().dot(f.n_hat()).abs() < 1e-12);
            // û is exactly m̂ × n̂ by construction
            prop_assert_eq!(f.u_hat(), f.m_hat().cross(f.n_hat()));
            // right-handed: (m̂ × n̂) · û = +1
            prop_assert!((f.m_hat().cross(f.n_hat()).dot(f.u_hat()) - 1.0).abs() < 1e-10);
        }
    }
}
