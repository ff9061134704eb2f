//! Damped Jaynes-Cummings dynamics for a qubit coupled to a leaky cavity
//! mode with a Lorentzian spectral profile.
//!
//! The excited-state population decays by a survival factor
//! p(t) = a(t)^2 built from the amplitude
//!
//! ```text
//! a(t) = exp(-lambda t / 2) * [cosh(d t / 2) + (lambda / d) sinh(d t / 2)],
//! d = sqrt(lambda^2 - 2 gamma0 lambda),
//! ```
//!
//! where `lambda` is the spectral width and `gamma0` the coupling
//! strength. For strong coupling (lambda < 2 gamma0) the argument d turns
//! imaginary and the hyperbolic functions continue to trigonometric ones;
//! the decay rate then oscillates, turns negative in stretches
//! (information backflow), and diverges at the isolated times where p(t)
//! touches zero. The evolved state scales its excited population by p(t)
//! and its coherences by sqrt(p(t)).

use crate::bounds::{BoundKind, QslResult, Trajectory, BOUND_QUAD, STATIONARY_EPS};
use crate::error::{Error, Result};
use crate::hawking::{horizon_state, HawkingFactors};
use crate::mat2::Mat2;
use crate::numerics::integrate_with_breakpoints;
use crate::state::{BlochVector, QubitState};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Sign of d^2 = lambda (lambda - 2 gamma0).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CouplingRegime {
    /// lambda > 2 gamma0: monotone decay, nonnegative rate.
    Weak,
    /// lambda = 2 gamma0: the degenerate boundary case.
    Critical,
    /// lambda < 2 gamma0: oscillatory, non-Markovian decay.
    Strong,
}

/// Coupling strength and spectral width, with the derived branch data.
#[derive(Debug, Clone, Copy)]
pub struct JcParams {
    gamma0: f64,
    lambda: f64,
    /// |d| = sqrt(|lambda^2 - 2 gamma0 lambda|).
    d_abs: f64,
    regime: CouplingRegime,
}

impl JcParams {
    pub fn new(gamma0: f64, lambda: f64) -> Result<Self> {
        if gamma0 <= 0.0 {
            return Err(Error::NonPositive {
                name: "gamma0",
                value: gamma0,
            });
        }
        if lambda <= 0.0 {
            return Err(Error::NonPositive {
                name: "lambda",
                value: lambda,
            });
        }
        let disc = lambda * (lambda - 2.0 * gamma0);
        let regime = if disc > 0.0 {
            CouplingRegime::Weak
        } else if disc < 0.0 {
            CouplingRegime::Strong
        } else {
            CouplingRegime::Critical
        };
        Ok(JcParams {
            gamma0,
            lambda,
            d_abs: disc.abs().sqrt(),
            regime,
        })
    }

    pub fn gamma0(&self) -> f64 {
        self.gamma0
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Magnitude of d = sqrt(lambda^2 - 2 gamma0 lambda); a relaxation
    /// rate in the weak regime, an oscillation frequency in the strong.
    pub fn d_abs(&self) -> f64 {
        self.d_abs
    }

    pub fn regime(&self) -> CouplingRegime {
        self.regime
    }
}

/// Lorentzian spectral density of the cavity environment, peaked at the
/// qubit frequency `omega0` with half width `lambda`:
/// gamma0 lambda / (2 pi [(omega0 - omega)^2 + lambda^2]).
pub fn spectral_density(omega: f64, p: &JcParams, omega0: f64) -> f64 {
    let detuning = omega0 - omega;
    p.gamma0 * p.lambda / (2.0 * PI * (detuning * detuning + p.lambda * p.lambda))
}

/// Time-dependent decay rate.
///
/// Weak regime: 2 gamma0 lambda sinh(dt/2) / [d cosh(dt/2) + lambda sinh(dt/2)],
/// with the trigonometric continuation in the strong regime and the
/// d -> 0 limit 2 gamma0 lambda t / (2 + lambda t) on the critical line.
/// In the strong regime the rate is negative on backflow stretches and
/// diverges where the survival factor touches zero.
pub fn decay_rate(t: f64, p: &JcParams) -> Result<f64> {
    if t < 0.0 {
        return Err(Error::NegativeTime(t));
    }
    let u = 0.5 * p.d_abs * t;
    Ok(match p.regime {
        CouplingRegime::Weak => {
            // rewritten with e^{-2u} so large arguments cannot overflow
            let e = (-2.0 * u).exp();
            2.0 * p.gamma0 * p.lambda * (1.0 - e)
                / ((p.d_abs + p.lambda) + (p.d_abs - p.lambda) * e)
        }
        CouplingRegime::Strong => {
            2.0 * p.gamma0 * p.lambda * u.sin() / (p.d_abs * u.cos() + p.lambda * u.sin())
        }
        CouplingRegime::Critical => {
             2.0 * p.gamma0 * p.lambda * t / (2.0 + p.lambda * t)
        }
    })
}

/// Signed coherence amplitude a(t) with a(0) = 1 and p(t) = a(t)^2.
/// Strictly positive in the weak and critical regimes; oscillates through
/// zero in the strong regime.
pub fn amplitude(t: f64, p: &JcParams) -> Result<f64> {
    if t < 0.0 {
        return Err(Error::NegativeTime(t));
    }
    Ok(amplitude_unchecked(t, p))
}

fn amplitude_unchecked(t: f64, p: &JcParams) -> f64 {
    let u = 0.5 * p.d_abs * t;
    match p.regime {
        CouplingRegime::Weak => {
            // exp(-lambda t/2) [cosh u + (lambda/d) sinh u] regrouped into
            // pure decaying exponentials
            let r = p.lambda / p.d_abs;
            0.5 * ((1.0 + r) * (u - 0.5 * p.lambda * t).exp()
                + (1.0 - r) * (-u - 0.5 * p.lambda * t).exp())
        }
        CouplingRegime::Strong => {
            (-0.5 * p.lambda * t).exp() * (u.cos() + (p.lambda / p.d_abs) * u.sin())
        }
        CouplingRegime::Critical => (-0.5 * p.lambda * t).exp() * (1.0 + 0.5 * p.lambda * t),
    }
}

/// d/dt of the amplitude: -(gamma0 lambda / d) exp(-lambda t/2) sinh(dt/2)
/// and its strong/critical continuations.
fn amplitude_derivative_unchecked(t: f64, p: &JcParams) -> f64 {
    let u = 0.5 * p.d_abs * t;
    match p.regime {
        CouplingRegime::Weak => {
            let k = p.gamma0 * p.lambda / p.d_abs;
            -k * 0.5 * ((u - 0.5 * p.lambda * t).exp() - (-u - 0.5 * p.lambda * t).exp())
        }
        CouplingRegime::Strong => {
            -(p.gamma0 * p.lambda / p.d_abs) * (-0.5 * p.lambda * t).exp() * u.sin()
        }
        CouplingRegime::Critical => {
            -0.5 * p.gamma0 * p.lambda * t * (-0.5 * p.lambda * t).exp()
        }
    }
}

/// Survival factor p(t) = exp(-integral of the decay rate) in closed
/// form; equals the squared amplitude. Lies in [0, 1] with p(0) = 1.
pub fn survival(t: f64, p: &JcParams) -> Result<f64> {
    let a = amplitude(t, p)?;
    Ok(a * a)
}

/// d/dt of the survival factor, equal to -rate * p(t) but free of the
/// rate's poles.
pub fn survival_derivative(t: f64, p: &JcParams) -> Result<f64> {
    let a = amplitude(t, p)?;
    Ok(2.0 * a * amplitude_derivative_unchecked(t, p))
}

/// Times in (a, b) where the survival factor touches zero (strong
/// coupling only): the coherence amplitude changes sign there and the
/// decay rate diverges.
pub fn survival_zeros(p: &JcParams, a: f64, b: f64) -> Vec<f64> {
    if p.regime != CouplingRegime::Strong {
        return Vec::new();
    }
    let phase = (p.d_abs / p.lambda).atan();
    let mut zeros = Vec::new();
    let mut k = 1;
    loop {
        let t = 2.0 * (k as f64 * PI - phase) / p.d_abs;
        if t >= b {
            break;
        }
        if t > a {
            zeros.push(t);
        }
        k += 1;
    }
    zeros
}

/// Times in (a, b) where the amplitude derivative vanishes (strong
/// coupling only); the speed integrand has corners there.
fn derivative_zeros(p: &JcParams, a: f64, b: f64) -> Vec<f64> {
    if p.regime != CouplingRegime::Strong {
        return Vec::new();
    }
    let mut zeros = Vec::new();
    let mut k = 1;
    loop {
        let t = 2.0 * PI * k as f64 / p.d_abs;
        if t >= b {
            break;
        }
        if t > a {
            zeros.push(t);
        }
        k += 1;
    }
    zeros
}

/// State at time t for the initial state `rho0`:
///
/// ```text
/// [ 1 - p(t) (1 - rho11)     sqrt(p(t)) rho12 ]
/// [ sqrt(p(t)) rho21         p(t) rho22       ]
/// ```
pub fn evolve(rho0: &QubitState, t: f64, p: &JcParams) -> Result<QubitState> {
    let surv = survival(t, p)?;
    let root = surv.sqrt();
    QubitState::new(
        1.0 - surv * (1.0 - rho0.rho11()),
        rho0.rho12() * root,
        surv * rho0.rho22(),
    )
}

/// Generator action rate * (s- rho s+ - {s+ s-, rho} / 2) with the
/// lowering operator s- = |ground><excited|; traceless by construction.
pub fn generator(rho: &QubitState, t: f64, p: &JcParams) -> Result<Mat2> {
    let rate = decay_rate(t, p)?;
    let diag = rate * rho.rho22();
    let off = rho.rho12() * (-0.5 * rate);
    Ok(Mat2::new(
        Complex64::new(diag, 0.0),
        off,
        off.conj(),
        Complex64::new(-diag, 0.0),
    ))
}

/// Integrand of the bound denominator, sigma1 e1 + sigma2 e2 evaluated in
/// closed form: |a'(t)| sqrt(4 p(t) B^2 + |c|^2) with B the initial
/// excited population and c the initial coherence entry. Written as this
/// product it stays bounded through the strong-regime rate divergences.
fn speed_integrand(t: f64, p: &JcParams, excited0: f64, coh_sq: f64) -> f64 {
    let a = amplitude_unchecked(t, p);
    let da = amplitude_derivative_unchecked(t, p);
    da.abs() * (4.0 * a * a * excited0 * excited0 + coh_sq).sqrt()
}

/// Closed-form speed-limit time for the damped Jaynes-Cummings channel
/// applied to the horizon-dressed state of `b`.
///
/// The numerator |f - 1| tr(rho_tau^2) reduces to
///
/// ```text
/// | (p_tau - p_end) B (1 - 2 p_tau B)
///   - 2 |c|^2 sqrt(p_tau) (sqrt(p_tau) - sqrt(p_end)) |
/// ```
///
/// and the denominator averages the integrand above; both agree with the
/// generic numeric bound to the quadrature tolerance. Note the coherence
/// term enters with the squared dressing weight |c|^2.
pub fn qsl(
    b: &BlochVector,
    h: &HawkingFactors,
    p: &JcParams,
    tau: f64,
    tau_d: f64,
) -> Result<QslResult> {
    if tau < 0.0 {
        return Err(Error::NegativeTime(tau));
    }
    if tau_d <= 0.0 {
        return Err(Error::NonPositiveDrivingTime(tau_d));
    }
    let rho0 = horizon_state(b, h)?;
    let excited0 = rho0.rho22();
    let coh_sq = rho0.rho12().norm_sqr();

    let a_tau = amplitude_unchecked(tau, p).abs();
    let a_end = amplitude_unchecked(tau + tau_d, p).abs();
    let (p_tau, p_end) = (a_tau * a_tau, a_end * a_end);
    let numerator = ((p_tau - p_end) * excited0 * (1.0 - 2.0 * p_tau * excited0)
        - 2.0 * coh_sq * a_tau * (a_tau - a_end))
        .abs();

    let end = tau + tau_d;
    let breaks = derivative_zeros(p, tau, end);
    let quad = integrate_with_breakpoints(
        |t| speed_integrand(t, p, excited0, coh_sq),
        tau,
        end,
        &breaks,
        &BOUND_QUAD,
    )?;
    let avg = quad.value / tau_d;
    if avg < STATIONARY_EPS {
        return Ok(QslResult::stationary(BoundKind::Ml, numerator, avg));
    }
    Ok(QslResult::from_parts(BoundKind::Ml, numerator, avg, tau_d))
}

/// Trajectory view of the channel for the numeric bounds.
#[derive(Debug, Clone, Copy)]
pub struct JcTrajectory {
    rho0: QubitState,
    params: JcParams,
}

impl JcTrajectory {
    pub fn new(rho0: QubitState, params: JcParams) -> Self {
        JcTrajectory { rho0, params }
    }

    pub fn initial_state(&self) -> &QubitState {
        &self.rho0
    }
}

impl Trajectory for JcTrajectory {
    fn state(&self, t: f64) -> QubitState {
        evolve(&self.rho0, t, &self.params).expect("time within trajectory domain")
    }

    /// Same operator as [`generator`] applied to the evolved state, but
    /// assembled from the amplitude products -2 a a' rho22 and
    /// a' sign(a) rho12. The explicit rate diverges at survival zeros
    /// while the state entries vanish there; multiplying the two rounded
    /// halves injects noise exactly where the bound quadrature needs
    /// smoothness, so the trajectory view keeps the products closed.
    fn generator(&self, t: f64) -> Mat2 {
        let a = amplitude_unchecked(t, &self.params);
        let da = amplitude_derivative_unchecked(t, &self.params);
        let diag = -2.0 * a * da * self.rho0.rho22();
        let off = self.rho0.rho12() * (da * a.signum());
        Mat2::new(
            Complex64::new(diag, 0.0),
            off,
            off.conj(),
            Complex64::new(-diag, 0.0),
        )
    }

    fn kinks(&self, a: f64, b: f64) -> Vec<f64> {
        derivative_zeros(&self.params, a, b)
    }
}
