use thiserror::Error;

/// Error type shared by every module of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("Bloch vector norm {norm} lies outside the unit ball")]
    UnphysicalBloch { norm: f64 },

    #[error("density matrix trace {trace} differs from 1 by more than 1e-12")]
    NonUnitTrace { trace: f64 },

    #[error("density matrix eigenvalue {eigenvalue} is negative beyond tolerance")]
    NotPositive { eigenvalue: f64 },

    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    #[error("{name} must be nonnegative, got {value}")]
    Negative { name: &'static str, value: f64 },

    #[error("time must be nonnegative, got {0}")]
    NegativeTime(f64),

    #[error("driving time must be positive, got {0}")]
    NonPositiveDrivingTime(f64),

    #[error("relative distance {0} lies inside the horizon (must be >= 1)")]
    InsideHorizon(f64),

    #[error("gamma function pole: argument {0} is within 1e-6 of a nonpositive integer")]
    GammaPole(f64),

    #[error(
        "quadrature did not converge: best value {value}, \
         error estimate {error_estimate} after {evaluations} evaluations"
    )]
    QuadratureNoConvergence {
        value: f64,
        error_estimate: f64,
        evaluations: usize,
    },

    #[error("integration bounds are reversed: [{a}, {b}]")]
    ReversedBounds { a: f64, b: f64 },

    #[error("requested interval [{tau}, {end}] exceeds the trajectory domain [0, {domain_end}]")]
    OutsideDomain { tau: f64, end: f64, domain_end: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
