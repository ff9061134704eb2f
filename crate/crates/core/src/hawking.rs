//! Horizon dressing of a hovering qubit.
//!
//! A static observer at relative distance R0 = r0/r_h from a Schwarzschild
//! horizon sees the free-faller vacuum as a thermal mix of its own modes.
//! For a Dirac mode of dimensionless frequency Omega (frequency over the
//! Hawking temperature) the mixing is carried by two coefficients
//!
//! ```text
//! j_minus = [1 + exp(-x)]^(-1/2),   j_plus = [1 + exp(x)]^(-1/2),
//! x = Omega * sqrt(1 - 1/R0),
//! ```
//!
//! which satisfy j_minus^2 + j_plus^2 = 1. Tracing out the modes behind
//! the horizon turns an initial Bloch state into the dressed state built
//! by [`horizon_state`]; its l1 coherence shrinks by exactly j_minus.

use crate::error::{Error, Result};
use crate::state::{BlochVector, QubitState};
use num_complex::Complex64;

/// Largest relative distance at which the near-horizon (Rindler)
/// approximation behind these coefficients is considered trustworthy.
pub const RINDLER_WINDOW: f64 = 1.05;

/// Mode-mixing coefficients for a qubit hovering at `r0_rel` >= 1 with
/// dimensionless mode frequency `omega` > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HawkingFactors {
    omega: f64,
    r0_rel: f64,
    j_minus: f64,
    j_plus: f64,
}

impl HawkingFactors {
    /// Evaluates the two coefficients. Distances beyond
    /// [`RINDLER_WINDOW`] are accepted but logged as a warning, since the
    /// near-horizon approximation degrades there.
    pub fn new(omega: f64, r0_rel: f64) -> Result<Self> {
        if omega <= 0.0 {
            return Err(Error::NonPositive {
                name: "omega",
                value: omega,
            });
        }
        if r0_rel < 1.0 {
            return Err(Error::InsideHorizon(r0_rel));
        }
        if r0_rel > RINDLER_WINDOW {
            log::warn!(
                "r0_rel = {r0_rel} exceeds the near-horizon validity window ({RINDLER_WINDOW}); \
                 coefficients are extrapolated"
            );
        }
        let x = omega * (1.0 - 1.0 / r0_rel).sqrt();
        let w = (-x).exp();
        // j_plus is written overflow-safe: (1 + e^x)^(-1/2) = e^(-x/2) / sqrt(1 + e^(-x))
        let j_minus = (1.0 + w).sqrt().recip();
        let j_plus = (-0.5 * x).exp() / (1.0 + w).sqrt();
        Ok(HawkingFactors {
            omega,
            r0_rel,
            j_minus,
            j_plus,
        })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn r0_rel(&self) -> f64 {
        self.r0_rel
    }

    /// Weight of the observer-vacuum component; the coherence survival
    /// factor. Lies in [1/sqrt(2), 1).
    pub fn j_minus(&self) -> f64 {
        self.j_minus
    }

    /// Weight of the pair-excitation component. Lies in (0, 1/sqrt(2)].
    pub fn j_plus(&self) -> f64 {
        self.j_plus
    }
}

/// Dressed state of a qubit prepared in the Bloch state `b` and then held
/// at the distance encoded in `h`:
///
/// ```text
/// 1/2 * [ j-^2 (1+r3)          j- (r1 - i r2)            ]
///       [ j- (r1 + i r2)       (1-r3) + j+^2 (1+r3)      ]
/// ```
///
/// Unit trace follows from j-^2 + j+^2 = 1; positivity holds for every
/// Bloch vector in the unit ball.
pub fn horizon_state(b: &BlochVector, h: &HawkingFactors) -> Result<QubitState> {
    // validate the Bloch vector through the same gate as a bare state
    let base = QubitState::from_bloch(b)?;
    let r = base.bloch();
    let jm2 = h.j_minus * h.j_minus;
    let jp2 = h.j_plus * h.j_plus;
    let top = 0.5 * jm2 * (1.0 + r.r3);
    let bottom = 0.5 * ((1.0 - r.r3) + jp2 * (1.0 + r.r3));
    let off = Complex64::new(0.5 * h.j_minus * r.r1, -0.5 * h.j_minus * r.r2);
    QubitState::new(top, off, bottom)
}

/// Coherence of the dressed state without building it:
/// j_minus * sqrt(r1^2 + r2^2). Agrees with
/// `horizon_state(b, h).l1_coherence()` to 1e-12.
pub fn coherence_after_dressing(b: &BlochVector, h: &HawkingFactors) -> f64 {
    h.j_minus * b.transverse_norm()
}
