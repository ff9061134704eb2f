//! Speed-limit times for a qubit hovering near a Schwarzschild horizon.
//!
//! A qubit held at a small relative distance above an event horizon sees
//! the free-faller vacuum as a thermal mode mixture; its coherence is
//! rescaled by a dressing coefficient before any open-system dynamics
//! starts ([`hawking`]). Two exactly solvable channels then evolve the
//! dressed state: damped Jaynes-Cummings relaxation in a Lorentzian
//! cavity ([`jc`]) and pure dephasing in an Ohmic-family bath
//! ([`dephasing`]). For both, the crate evaluates the minimal evolution
//! time between the state at some window start and the state a driving
//! time later, in two independent ways:
//!
//! * closed forms specialized to each channel ([`jc::qsl`],
//!   [`dephasing::qsl`]);
//! * a model-agnostic numeric bound built from singular values and
//!   adaptive quadrature ([`bounds`]), which acts as the ground-truth
//!   oracle for the closed forms.
//!
//! [`figures`] turns the bounds into deterministic CSV sweeps, and
//! [`validate`] bundles the cross-checks into a runnable battery.
//!
//! ```
//! use qsl_horizon::hawking::HawkingFactors;
//! use qsl_horizon::jc::{self, JcParams};
//! use qsl_horizon::state::BlochVector;
//!
//! let b = BlochVector::new(1.0, 0.0, 0.0);
//! let h = HawkingFactors::new(10.0, 1.02)?;
//! let p = JcParams::new(0.1, 1.0)?;
//! let r = jc::qsl(&b, &h, &p, 0.0, 1.0)?;
//! assert!(r.tau_qsl > 0.0 && r.ratio <= 1.0 + 1e-9);
//! # Ok::<(), qsl_horizon::Error>(())
//! ```

pub mod bounds;
pub mod dephasing;
mod error;
pub mod figures;
pub mod hawking;
pub mod jc;
pub mod mat2;
pub mod numerics;
pub mod state;
pub mod validate;

pub use error::{Error, Result};
pub use mat2::{Mat2, SingularPair};
pub use state::{BlochVector, QubitState};
