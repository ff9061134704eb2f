//! Exact 2x2 complex matrix arithmetic.
//!
//! Everything downstream (generators, singular values, distance
//! functionals) runs through this module, so all decompositions are
//! closed-form: no iterative linear algebra, no convergence tolerance.

use num_complex::Complex64;
use std::ops::{Add, Mul, Sub};

/// A dense 2x2 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub entries: [[Complex64; 2]; 2],
}

impl Mat2 {
    pub const ZERO: Mat2 = Mat2 {
        entries: [[Complex64::new(0.0, 0.0); 2]; 2],
    };

    pub fn new(a11: Complex64, a12: Complex64, a21: Complex64, a22: Complex64) -> Self {
        Mat2 {
            entries: [[a11, a12], [a21, a22]],
        }
    }

    pub fn from_real(a11: f64, a12: f64, a21: f64, a22: f64) -> Self {
        Mat2::new(
            Complex64::new(a11, 0.0),
            Complex64::new(a12, 0.0),
            Complex64::new(a21, 0.0),
            Complex64::new(a22, 0.0),
        )
    }

    /// Entry accessor with 1-based row/column indices.
    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row - 1][col - 1]
    }

    pub fn adjoint(&self) -> Mat2 {
        Mat2::new(
            self.entries[0][0].conj(),
            self.entries[1][0].conj(),
            self.entries[0][1].conj(),
            self.entries[1][1].conj(),
        )
    }

    pub fn trace(&self) -> Complex64 {
        self.entries[0][0] + self.entries[1][1]
    }

    pub fn det(&self) -> Complex64 {
        self.entries[0][0] * self.entries[1][1] - self.entries[0][1] * self.entries[1][0]
    }

    /// Squared Frobenius norm, i.e. the sum of squared entry magnitudes.
    pub fn frobenius_sq(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .map(|z| z.norm_sqr())
            .sum()
    }

    /// Largest entry magnitude; the sup norm used by consistency checks.
    pub fn max_abs(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn scale(&self, s: f64) -> Mat2 {
        let mut out = *self;
        for row in &mut out.entries {
            for z in row {
                *z *= s;
            }
        }
        out
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, rhs: Mat2) -> Mat2 {
        let mut out = Mat2::ZERO;
        for i in 0..2 {
            for j in 0..2 {
                out.entries[i][j] = self.entries[i][j] + rhs.entries[i][j];
            }
        }
        out
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: Mat2) -> Mat2 {
        let mut out = Mat2::ZERO;
        for i in 0..2 {
            for j in 0..2 {
                out.entries[i][j] = self.entries[i][j] - rhs.entries[i][j];
            }
        }
        out
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        let mut out = Mat2::ZERO;
        for i in 0..2 {
            for j in 0..2 {
                out.entries[i][j] =
                    self.entries[i][0] * rhs.entries[0][j] + self.entries[i][1] * rhs.entries[1][j];
            }
        }
        out
    }
}

/// A descending pair of nonnegative spectral data (singular values, or
/// eigenvalues of a positive semidefinite matrix).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingularPair {
    pub sigma1: f64,
    pub sigma2: f64,
}

impl SingularPair {
    pub fn new(a: f64, b: f64) -> Self {
        if a >= b {
            SingularPair { sigma1: a, sigma2: b }
        } else {
            SingularPair { sigma1: b, sigma2: a }
        }
    }

    pub fn sum(&self) -> f64 {
        self.sigma1 + self.sigma2
    }
}

/// Singular values of an arbitrary 2x2 complex matrix via the quadratic
/// formula applied to m†m.
///
/// The eigenvalues of the Hermitian matrix m†m = [[p, q], [q*, r]] are
/// mean ± gap with mean = (p + r)/2 and gap = hypot((p - r)/2, |q|).
/// The gap is assembled from the entries directly rather than from
/// tr^2 - 4 det, whose cancellation would smear the split of nearly
/// equal singular values; the smaller eigenvalue is recovered through
/// the determinant for the same reason. The larger singular value is
/// exact to roundoff and the smaller matches any reference
/// decomposition to 1e-12.
pub fn singular_values(m: &Mat2) -> SingularPair {
    let [[a, b], [c, d]] = m.entries;
    let p = a.norm_sqr() + c.norm_sqr();
    let r = b.norm_sqr() + d.norm_sqr();
    let q = a.conj() * b + c.conj() * d;
    let mean = 0.5 * (p + r);
    let gap = (0.5 * (p - r)).hypot(q.norm());
    let sigma1 = (mean + gap).sqrt();
    let sigma2 = if sigma1 > 0.0 {
        m.det().norm() / sigma1
    } else {
        0.0
    };
    SingularPair::new(sigma1, sigma2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn diagonal_singular_values_sort_by_magnitude() {
        let m = Mat2::from_real(0.3, 0.0, 0.0, -0.7);
        let sv = singular_values(&m);
        assert!((sv.sigma1 - 0.7).abs() < 1e-15);
        assert!((sv.sigma2 - 0.3).abs() < 1e-15);
    }

    #[test]
    fn nilpotent_has_one_singular_value() {
        let m = Mat2::from_real(0.0, 1.0, 0.0, 0.0);
        let sv = singular_values(&m);
        assert_eq!(sv.sigma1, 1.0);
        assert_eq!(sv.sigma2, 0.0);
    }

    #[test]
    fn shear_gives_golden_ratio_pair() {
        // eigenvalues of m†m are (3 ± sqrt(5)) / 2; their square roots are
        // the golden ratio and its reciprocal
        let m = Mat2::from_real(1.0, 1.0, 0.0, 1.0);
        let sv = singular_values(&m);
        let phi = (1.0 + 5.0_f64.sqrt()) / 2.0;
        assert!((sv.sigma1 - phi).abs() < 1e-14);
        assert!((sv.sigma2 - 1.0 / phi).abs() < 1e-14);
    }

    #[test]
    fn unitary_invariance_of_singular_values() {
        // multiply by a phase-rotation unitary; singular values must not move
        let m = Mat2::new(c(0.3, 0.1), c(-0.2, 0.4), c(0.0, 0.9), c(0.5, -0.5));
        let theta = 0.37_f64;
        let u = Mat2::new(
            c(theta.cos(), 0.0),
            c(0.0, theta.sin()),
            c(0.0, theta.sin()),
            c(theta.cos(), 0.0),
        );
        let before = singular_values(&m);
        let after = singular_values(&(u * m));
        assert!((before.sigma1 - after.sigma1).abs() < 1e-12);
        assert!((before.sigma2 - after.sigma2).abs() < 1e-12);
    }
}
