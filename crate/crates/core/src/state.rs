//! Single-qubit states: Bloch vectors and 2x2 density matrices.
//!
//! Basis convention used throughout the crate: basis vector 1 is the
//! ground state |0>, basis vector 2 the excited state |1>, and the
//! lowering operator maps excited to ground. Density matrices store the
//! real diagonal and the upper off-diagonal entry, so Hermiticity holds
//! by construction rather than by symmetrization.

use crate::error::{Error, Result};
use crate::mat2::{Mat2, SingularPair};
use num_complex::Complex64;

const TRACE_TOL: f64 = 1e-12;
const EIGEN_TOL: f64 = 1e-12;
const BLOCH_TOL: f64 = 1e-9;

/// A Bloch vector (r1, r2, r3); physical states satisfy |r| <= 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    pub r1: f64,
    pub r2: f64,
    pub r3: f64,
}

impl BlochVector {
    pub fn new(r1: f64, r2: f64, r3: f64) -> Self {
        BlochVector { r1, r2, r3 }
    }

    pub fn norm(&self) -> f64 {
        (self.r1 * self.r1 + self.r2 * self.r2 + self.r3 * self.r3).sqrt()
    }

    /// Length of the equatorial component, sqrt(r1^2 + r2^2). This is the
    /// l1 coherence of the state the vector generates.
    pub fn transverse_norm(&self) -> f64 {
        self.r1.hypot(self.r2)
    }
}

/// A valid single-qubit density matrix: Hermitian, unit trace, positive
/// semidefinite (within 1e-12).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitState {
    /// Ground-state population, entry (1,1).
    rho11: f64,
    /// Excited-state population, entry (2,2).
    rho22: f64,
    /// Upper off-diagonal entry (1,2); entry (2,1) is its conjugate.
    rho12: Complex64,
}

impl QubitState {
    /// Builds a state from its matrix data, validating trace and
    /// positivity. Hermiticity is structural: the caller supplies only the
    /// upper triangle.
    pub fn new(rho11: f64, rho12: Complex64, rho22: f64) -> Result<Self> {
        let trace = rho11 + rho22;
        if (trace - 1.0).abs() > TRACE_TOL {
            return Err(Error::NonUnitTrace { trace });
        }
        let state = QubitState { rho11, rho22, rho12 };
        let low = state.eigenvalues().sigma2;
        if low < -EIGEN_TOL {
            return Err(Error::NotPositive { eigenvalue: low });
        }
        Ok(state)
    }

    /// State generated by a Bloch vector: (I + r1 s1 + r2 s2 + r3 s3) / 2
    /// in the Pauli basis.
    ///
    /// Vectors marginally outside the unit ball (norm within 1e-9 of 1)
    /// are rescaled onto it so the positivity invariant survives
    /// downstream arithmetic; anything farther out is rejected.
    pub fn from_bloch(b: &BlochVector) -> Result<Self> {
        let norm = b.norm();
        if norm > 1.0 + BLOCH_TOL {
            return Err(Error::UnphysicalBloch { norm });
        }
        let scale = if norm > 1.0 { 1.0 / norm } else { 1.0 };
        let (r1, r2, r3) = (b.r1 * scale, b.r2 * scale, b.r3 * scale);
        Ok(QubitState {
            rho11: 0.5 * (1.0 + r3),
            rho22: 0.5 * (1.0 - r3),
            rho12: Complex64::new(0.5 * r1, -0.5 * r2),
        })
    }

    pub fn maximally_mixed() -> Self {
        QubitState {
            rho11: 0.5,
            rho22: 0.5,
            rho12: Complex64::new(0.0, 0.0),
        }
    }

    /// Ground-state population (entry 1,1).
    pub fn rho11(&self) -> f64 {
        self.rho11
    }

    /// Excited-state population (entry 2,2).
    pub fn rho22(&self) -> f64 {
        self.rho22
    }

    /// Upper off-diagonal entry (1,2).
    pub fn rho12(&self) -> Complex64 {
        self.rho12
    }

    pub fn to_matrix(&self) -> Mat2 {
        Mat2::new(
            Complex64::new(self.rho11, 0.0),
            self.rho12,
            self.rho12.conj(),
            Complex64::new(self.rho22, 0.0),
        )
    }

    /// tr(rho^2), between 1/2 (maximally mixed) and 1 (pure).
    pub fn purity(&self) -> f64 {
        self.rho11 * self.rho11 + self.rho22 * self.rho22 + 2.0 * self.rho12.norm_sqr()
    }

    /// tr(rho sigma) for two Hermitian states; always real.
    pub fn overlap(&self, other: &QubitState) -> f64 {
        self.rho11 * other.rho11
            + self.rho22 * other.rho22
            + 2.0 * (self.rho12 * other.rho12.conj()).re
    }

    /// Relative purity tr(self * target) / tr(self^2), the distance
    /// functional the speed-limit bounds are built on.
    pub fn relative_purity(&self, target: &QubitState) -> f64 {
        self.overlap(target) / self.purity()
    }

    /// l1 coherence: the summed magnitude of the off-diagonal entries,
    /// 2 |rho12|. Equals sqrt(r1^2 + r2^2) for a Bloch-generated state.
    pub fn l1_coherence(&self) -> f64 {
        2.0 * self.rho12.norm()
    }

    /// Eigenvalues (1 ± |r|) / 2, sorted descending. For a positive
    /// semidefinite matrix these coincide with the singular values.
    pub fn eigenvalues(&self) -> SingularPair {
        let mean = 0.5 * (self.rho11 + self.rho22);
        let half_gap = 0.5 * (self.rho11 - self.rho22).hypot(2.0 * self.rho12.norm());
        SingularPair::new(mean + half_gap, mean - half_gap)
    }

    /// The Bloch vector whose state this is.
    pub fn bloch(&self) -> BlochVector {
        BlochVector {
            r1: 2.0 * self.rho12.re,
            r2: -2.0 * self.rho12.im,
            r3: self.rho11 - self.rho22,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat2::singular_values;
    use proptest::prelude::*;

    #[test]
    fn bloch_origin_is_maximally_mixed() {
        let rho = QubitState::from_bloch(&BlochVector::new(0.0, 0.0, 0.0)).unwrap();
        assert_eq!(rho.rho11(), 0.5);
        assert_eq!(rho.rho22(), 0.5);
        assert_eq!(rho.rho12(), Complex64::new(0.0, 0.0));
        assert_eq!(rho.purity(), 0.5);
    }

    #[test]
    fn bloch_x_axis_is_plus_state() {
        let rho = QubitState::from_bloch(&BlochVector::new(1.0, 0.0, 0.0)).unwrap();
        assert_eq!(rho.rho11(), 0.5);
        assert_eq!(rho.rho22(), 0.5);
        assert_eq!(rho.rho12(), Complex64::new(0.5, 0.0));
        assert!((rho.purity() - 1.0).abs() < 1e-15);
        assert!((rho.l1_coherence() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn bloch_pole_is_projector() {
        let rho = QubitState::from_bloch(&BlochVector::new(0.0, 0.0, 1.0)).unwrap();
        assert_eq!(rho.rho11(), 1.0);
        assert_eq!(rho.rho22(), 0.0);
        assert_eq!(rho.rho12(), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn purity_of_partial_x_state() {
        // tr(rho^2) = (1 + |r|^2) / 2 evaluated by direct matrix arithmetic
        let rho = QubitState::from_bloch(&BlochVector::new(0.6, 0.0, 0.0)).unwrap();
        assert!((rho.purity() - 0.68).abs() < 1e-15);
    }

    #[test]
    fn coherence_of_tilted_equatorial_state() {
        let rho = QubitState::from_bloch(&BlochVector::new(0.6, 0.8, 0.0)).unwrap();
        assert!((rho.l1_coherence() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn relative_purity_identity_and_orthogonality() {
        let up = QubitState::from_bloch(&BlochVector::new(0.0, 0.0, 1.0)).unwrap();
        let down = QubitState::from_bloch(&BlochVector::new(0.0, 0.0, -1.0)).unwrap();
        let mixed = QubitState::maximally_mixed();
        assert_eq!(up.relative_purity(&up), 1.0);
        assert_eq!(up.relative_purity(&down), 0.0);
        // tr(rho/2) / tr(I/4) = 1 for any rho
        assert!((mixed.relative_purity(&up) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn eigenvalues_of_mixed_states() {
        let mixed = QubitState::maximally_mixed();
        let ev = mixed.eigenvalues();
        assert_eq!((ev.sigma1, ev.sigma2), (0.5, 0.5));

        let rho = QubitState::from_bloch(&BlochVector::new(0.6, 0.0, 0.0)).unwrap();
        let ev = rho.eigenvalues();
        assert!((ev.sigma1 - 0.8).abs() < 1e-15);
        assert!((ev.sigma2 - 0.2).abs() < 1e-15);

        let pure = QubitState::from_bloch(&BlochVector::new(0.0, 1.0, 0.0)).unwrap();
        let ev = pure.eigenvalues();
        assert!((ev.sigma1 - 1.0).abs() < 1e-15);
        assert!(ev.sigma2.abs() < 1e-15);
    }

    #[test]
    fn rejects_unphysical_bloch_vector() {
        assert!(QubitState::from_bloch(&BlochVector::new(1.1, 0.0, 0.0)).is_err());
    }

    #[test]
    fn marginal_overshoot_is_rescaled() {
        let rho = QubitState::from_bloch(&BlochVector::new(1.0 + 5e-10, 0.0, 0.0)).unwrap();
        assert!(rho.eigenvalues().sigma2 >= -1e-12);
    }

    #[test]
    fn rejects_bad_trace_and_negative_matrix() {
        assert!(QubitState::new(0.6, Complex64::new(0.0, 0.0), 0.5).is_err());
        assert!(QubitState::new(0.5, Complex64::new(0.51, 0.0), 0.5).is_err());
    }

    fn arbitrary_bloch() -> impl Strategy<Value = BlochVector> {
        // uniform in the cube, rejected to the ball
        (-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64)
            .prop_map(|(r1, r2, r3)| BlochVector::new(r1, r2, r3))
            .prop_filter("inside unit ball", |b| b.norm() <= 1.0)
    }

    proptest! {
        #[test]
        fn purity_matches_bloch_norm(b in arbitrary_bloch()) {
            let rho = QubitState::from_bloch(&b).unwrap();
            let expected = 0.5 * (1.0 + b.norm() * b.norm());
            prop_assert!((rho.purity() - expected).abs() < 1e-12);
        }

        #[test]
        fn relative_purity_is_one_on_the_diagonal(b in arbitrary_bloch()) {
            let rho = QubitState::from_bloch(&b).unwrap();
            prop_assert!((rho.relative_purity(&rho) - 1.0).abs() < 1e-12);
        }

        #[test]
        fn coherence_matches_transverse_norm(b in arbitrary_bloch()) {
            let rho = QubitState::from_bloch(&b).unwrap();
            prop_assert!((rho.l1_coherence() - b.transverse_norm()).abs() < 1e-12);
        }

        #[test]
        fn hermitian_singular_values_equal_eigenvalues(b in arbitrary_bloch()) {
            let rho = QubitState::from_bloch(&b).unwrap();
            let sv = singular_values(&rho.to_matrix());
            let ev = rho.eigenvalues();
            prop_assert!((sv.sigma1 - ev.sigma1).abs() < 1e-12);
            prop_assert!((sv.sigma2 - ev.sigma2).abs() < 1e-12);
        }

        #[test]
        fn bloch_round_trip(b in arbitrary_bloch()) {
            let rho = QubitState::from_bloch(&b).unwrap();
            let back = rho.bloch();
            prop_assert!((back.r1 - b.r1).abs() < 1e-12);
            prop_assert!((back.r2 - b.r2).abs() < 1e-12);
            prop_assert!((back.r3 - b.r3).abs() < 1e-12);
        }
    }
}
