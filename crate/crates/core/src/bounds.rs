//! Model-agnostic speed-limit bounds evaluated numerically from a state
//! trajectory and its generator.
//!
//! Given the relative purity f between the state at time tau and the
//! state at tau + tau_d, every bound here has the shape
//!
//! ```text
//! tau_qsl = |f - 1| * tr(rho_tau^2) / time-average of a generator norm,
//! ```
//!
//! where the time average runs over [tau, tau + tau_d]. The overlap-type
//! bound weighs the generator's singular values by the eigenvalues of the
//! frozen rho_tau; the norm-type bound uses the root of the summed
//! squared singular values. Their maximum is the unified bound. All three
//! are evaluated by adaptive quadrature, which makes this module the
//! ground-truth oracle for the closed forms in the model modules.

use crate::error::{Error, Result};
use crate::mat2::{singular_values, Mat2};
use crate::numerics::{integrate_with_breakpoints, QuadOptions};
use crate::state::QubitState;

/// Below this time-averaged generator norm a trajectory is reported as
/// stationary instead of dividing by noise.
pub const STATIONARY_EPS: f64 = 1e-14;

/// Quadrature settings shared by the numeric bounds and the closed-form
/// evaluators, so both sides of an oracle comparison converge alike. The
/// relative target stays an order of magnitude above the level a
/// 15-point error estimator can certify on smooth data, where the
/// estimate floors out on roundoff and subdivision stops helping.
pub(crate) const BOUND_QUAD: QuadOptions = QuadOptions {
    abs_tol: 1e-14,
    rel_tol: 5e-11,
    max_intervals: 4000,
};

/// A state history rho(t) together with the generator driving it.
///
/// Implementations must keep `state(t)` a valid density matrix and
/// `generator(t)` traceless over the queried domain. `kinks` may list
/// times where the generator norm is not smooth (sign changes under an
/// absolute value); the integrator splits there.
pub trait Trajectory {
    fn state(&self, t: f64) -> QubitState;
    fn generator(&self, t: f64) -> Mat2;

    fn domain_end(&self) -> f64 {
        f64::INFINITY
    }

    fn kinks(&self, _a: f64, _b: f64) -> Vec<f64> {
        Vec::new()
    }
}

/// Which of the bound families produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// Overlap-weighted bound (singular values against frozen-state
    /// eigenvalues). Tight for the models in this crate.
    Ml,
    /// Generator-norm bound.
    Mt,
    /// Pointwise maximum of the two.
    Unified,
}

/// Denominator convention for the norm-type bound. `RootSumSquares` is
/// canonical (it keeps the bound a time and below the driving time);
/// `SumSquares` drops the root and is exposed only for comparison, since
/// it is not dimensionally a rate and can exceed the driving time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MtDenominator {
    RootSumSquares,
    SumSquares,
}

/// A speed-limit evaluation.
#[derive(Debug, Clone, Copy)]
pub struct QslResult {
    pub bound: BoundKind,
    /// The bound value: a minimal evolution time.
    pub tau_qsl: f64,
    /// tau_qsl / tau_d.
    pub ratio: f64,
    /// |f(tau + tau_d) - 1| * tr(rho_tau^2).
    pub numerator: f64,
    /// Time-averaged generator norm in the chosen convention.
    pub denominator_avg: f64,
    /// True when the trajectory does not move on the window; tau_qsl is
    /// zero in that case.
    pub stationary: bool,
}

impl QslResult {
    pub(crate) fn stationary(bound: BoundKind, numerator: f64, denominator_avg: f64) -> Self {
        QslResult {
            bound,
            tau_qsl: 0.0,
            ratio: 0.0,
            numerator,
            denominator_avg,
            stationary: true,
        }
    }

    pub(crate) fn from_parts(
        bound: BoundKind,
        numerator: f64,
        denominator_avg: f64,
        tau_d: f64,
    ) -> Self {
        if denominator_avg < STATIONARY_EPS {
            return QslResult::stationary(bound, numerator, denominator_avg);
        }
        let tau_qsl = numerator / denominator_avg;
        QslResult {
            bound,
            tau_qsl,
            ratio: tau_qsl / tau_d,
            numerator,
            denominator_avg,
            stationary: false,
        }
    }
}

struct Window {
    tau: f64,
    tau_d: f64,
    rho_tau: QubitState,
    numerator: f64,
}

impl Window {
    fn open<T: Trajectory + ?Sized>(traj: &T, tau: f64, tau_d: f64) -> Result<Self> {
        if tau < 0.0 {
            return Err(Error::NegativeTime(tau));
        }
        if tau_d <= 0.0 {
            return Err(Error::NonPositiveDrivingTime(tau_d));
        }
        let end = tau + tau_d;
        if end > traj.domain_end() {
            return Err(Error::OutsideDomain {
                tau,
                end,
                domain_end: traj.domain_end(),
            });
        }
        let rho_tau = traj.state(tau);
        let rho_end = traj.state(end);
        // |f - 1| * tr(rho_tau^2) = |tr(rho_tau (rho_end - rho_tau))|,
        // evaluated against the entrywise difference: subtracting the two
        // overlap traces instead would bury small numerators under the
        // roundoff of their shared O(1) diagonal terms
        let d11 = rho_end.rho11() - rho_tau.rho11();
        let d22 = rho_end.rho22() - rho_tau.rho22();
        let d12 = rho_end.rho12() - rho_tau.rho12();
        let numerator = (rho_tau.rho11() * d11
            + rho_tau.rho22() * d22
            + 2.0 * (rho_tau.rho12() * d12.conj()).re)
            .abs();
        Ok(Window {
            tau,
            tau_d,
            rho_tau,
            numerator,
        })
    }

    /// The shared time average (1/tau_d) * integral over the window.
    fn average<T: Trajectory + ?Sized, F: Fn(f64) -> f64>(&self, traj: &T, f: F) -> Result<f64> {
        let end = self.tau + self.tau_d;
        let kinks = traj.kinks(self.tau, end);
        let q = integrate_with_breakpoints(f, self.tau, end, &kinks, &BOUND_QUAD)?;
        Ok(q.value / self.tau_d)
    }
}

/// Overlap-weighted bound: denominator averages
/// sigma1 * e1 + sigma2 * e2, with sigma_i the singular values of the
/// generator and e_i the eigenvalues of the frozen rho_tau.
pub fn ml_bound<T: Trajectory + ?Sized>(traj: &T, tau: f64, tau_d: f64) -> Result<QslResult> {
    let w = Window::open(traj, tau, tau_d)?;
    let eigs = w.rho_tau.eigenvalues();
    let avg = w.average(traj, |t| {
        let sv = singular_values(&traj.generator(t));
        sv.sigma1 * eigs.sigma1 + sv.sigma2 * eigs.sigma2
    })?;
    Ok(QslResult::from_parts(BoundKind::Ml, w.numerator, avg, tau_d))
}

/// Norm-type bound in the canonical root-sum-squares convention.
pub fn mt_bound<T: Trajectory + ?Sized>(traj: &T, tau: f64, tau_d: f64) -> Result<QslResult> {
    mt_bound_with(traj, tau, tau_d, MtDenominator::RootSumSquares)
}

/// Norm-type bound with an explicit denominator convention.
pub fn mt_bound_with<T: Trajectory + ?Sized>(
    traj: &T,
    tau: f64,
    tau_d: f64,
    denominator: MtDenominator,
) -> Result<QslResult> {
    let w = Window::open(traj, tau, tau_d)?;
    let avg = w.average(traj, |t| {
        let sv = singular_values(&traj.generator(t));
        let sum_sq = sv.sigma1 * sv.sigma1 + sv.sigma2 * sv.sigma2;
        match denominator {
            MtDenominator::RootSumSquares => sum_sq.sqrt(),
            MtDenominator::SumSquares => sum_sq,
        }
    })?;
    Ok(QslResult::from_parts(BoundKind::Mt, w.numerator, avg, tau_d))
}

/// Unified bound: the larger of the overlap-weighted and norm-type
/// bounds, sharing one numerator evaluation. Equivalently it divides by
/// the smaller of the two averaged denominators.
pub fn unified_bound<T: Trajectory + ?Sized>(traj: &T, tau: f64, tau_d: f64) -> Result<QslResult> {
    let w = Window::open(traj, tau, tau_d)?;
    let eigs = w.rho_tau.eigenvalues();
    let ml_avg = w.average(traj, |t| {
        let sv = singular_values(&traj.generator(t));
        sv.sigma1 * eigs.sigma1 + sv.sigma2 * eigs.sigma2
    })?;
    let mt_avg = w.average(traj, |t| {
        let sv = singular_values(&traj.generator(t));
        (sv.sigma1 * sv.sigma1 + sv.sigma2 * sv.sigma2).sqrt()
    })?;
    let denominator = ml_avg.min(mt_avg);
    Ok(QslResult::from_parts(
        BoundKind::Unified,
        w.numerator,
        denominator,
        tau_d,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::{BlochVector, QubitState};

    /// A frozen trajectory: any state, zero generator.
    struct Frozen(QubitState);

    impl Trajectory for Frozen {
        fn state(&self, _t: f64) -> QubitState {
            self.0
        }
        fn generator(&self, _t: f64) -> Mat2 {
            Mat2::ZERO
        }
    }

    #[test]
    fn stationary_trajectory_is_flagged() {
        let rho = QubitState::from_bloch(&BlochVector::new(0.3, 0.2, 0.1)).unwrap();
        let traj = Frozen(rho);
        let r = ml_bound(&traj, 1.0, 1.0).unwrap();
        assert!(r.stationary);
        assert_eq!(r.tau_qsl, 0.0);
        let r = mt_bound(&traj, 1.0, 1.0).unwrap();
        assert!(r.stationary);
        let r = unified_bound(&traj, 1.0, 1.0).unwrap();
        assert!(r.stationary);
    }

    #[test]
    fn window_validation() {
        let traj = Frozen(QubitState::maximally_mixed());
        assert!(ml_bound(&traj, -0.1, 1.0).is_err());
        assert!(ml_bound(&traj, 0.0, 0.0).is_err());
        assert!(ml_bound(&traj, 0.0, -1.0).is_err());
    }
}
