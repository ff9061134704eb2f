//! Pure dephasing of a qubit in an Ohmic-family bosonic bath.
//!
//! The bath spectral density is J(w) = eta w^s / w_c^(s-1) * exp(-w/w_c)
//! with coupling `eta`, Ohmicity exponent `s` and cutoff `w_c`. The
//! off-diagonal entries of the state decay by q(t) = exp(-G(t)) where the
//! decoherence function is
//!
//! ```text
//! G(t) = 2 * integral over w of J(w) coth(w / 2T) (1 - cos wt) / w^2.
//! ```
//!
//! At zero temperature the integral closes to
//!
//! ```text
//! G(t) = 2 eta Gamma(s-1) [1 - cos((s-1) arctan(w_c t))
//!                              / (1 + w_c^2 t^2)^((s-1)/2)],
//! ```
//!
//! with the s -> 1 limit eta ln(1 + w_c^2 t^2). The overall factor of two
//! is fixed by that limit: it is exactly what makes the closed form, the
//! defining integral and the logarithmic special case one consistent
//! family, and the crate's continuity checks enforce the agreement.
//!
//! For s > 2 the derivative of G changes sign at finite times: coherence
//! partially rebuilds (information backflow), which is what produces the
//! bump structure in the speed-limit sweeps.

use crate::bounds::{BoundKind, QslResult, Trajectory, BOUND_QUAD, STATIONARY_EPS};
use crate::error::{Error, Result};
use crate::hawking::{horizon_state, HawkingFactors};
use crate::mat2::Mat2;
use crate::numerics::{
    gamma_function, integrate_semi_infinite, integrate_with_breakpoints, QuadOptions,
};
use crate::state::{BlochVector, QubitState};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Below this distance from s = 1 the closed form switches to its
/// logarithmic limit; the gamma-function prefactor is too ill-conditioned
/// closer to the pole.
const OHMIC_SWITCH: f64 = 1e-6;

/// Bath family classification by the Ohmicity exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OhmicClass {
    SubOhmic,
    Ohmic,
    SuperOhmic,
}

/// Coupling, Ohmicity exponent and cutoff frequency of the bath.
#[derive(Debug, Clone, Copy)]
pub struct DephasingParams {
    eta: f64,
    s: f64,
    omega_c: f64,
}

impl DephasingParams {
    pub fn new(eta: f64, s: f64, omega_c: f64) -> Result<Self> {
        if eta <= 0.0 {
            return Err(Error::NonPositive {
                name: "eta",
                value: eta,
            });
        }
        if s <= 0.0 {
            return Err(Error::NonPositive { name: "s", value: s });
        }
        if omega_c <= 0.0 {
            return Err(Error::NonPositive {
                name: "omega_c",
                value: omega_c,
            });
        }
        Ok(DephasingParams { eta, s, omega_c })
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn omega_c(&self) -> f64 {
        self.omega_c
    }

    /// Sub-Ohmic below s = 1, Ohmic at s = 1, super-Ohmic above.
    pub fn classify(&self) -> OhmicClass {
        if self.s < 1.0 {
            OhmicClass::SubOhmic
        } else if self.s > 1.0 {
            OhmicClass::SuperOhmic
        } else {
            OhmicClass::Ohmic
        }
    }
}

/// Spectral density eta w^s w_c^(1-s) exp(-w/w_c); zero for w <= 0.
pub fn spectral_density(omega: f64, p: &DephasingParams) -> f64 {
    if omega <= 0.0 {
        return 0.0;
    }
    p.eta * omega.powf(p.s) * p.omega_c.powf(1.0 - p.s) * (-omega / p.omega_c).exp()
}

/// Zero-temperature decoherence function via the closed form above.
/// Nonnegative for all t >= 0, with G(0) = 0.
pub fn decoherence_function(t: f64, p: &DephasingParams) -> Result<f64> {
    decoherence_function_with_gamma(t, p, gamma_function)
}

/// Closed-form evaluator with a caller-supplied gamma implementation.
/// Exists so validation harnesses can demonstrate that a perturbed gamma
/// breaks the continuity checks; library code should call
/// [`decoherence_function`].
pub fn decoherence_function_with_gamma<G>(t: f64, p: &DephasingParams, gamma: G) -> Result<f64>
where
    G: Fn(f64) -> Result<f64>,
{
    if t < 0.0 {
        return Err(Error::NegativeTime(t));
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    let x = p.omega_c * t;
    let log1p_x2 = x.mul_add(x, 0.0).ln_1p();
    if (p.s - 1.0).abs() <= OHMIC_SWITCH {
        return Ok(p.eta * log1p_x2);
    }
    let sm1 = p.s - 1.0;
    let prefactor = gamma(sm1)?;
    let bracket = 1.0 - (sm1 * x.atan()).cos() * (-0.5 * sm1 * log1p_x2).exp();
    // the product is nonnegative (both factors flip sign together at
    // s = 1); clamp the roundoff dust at t near 0
    Ok((2.0 * p.eta * prefactor * bracket).max(0.0))
}

/// Decoherence function at temperature T >= 0 by adaptive quadrature of
/// the defining bath integral, with coth(w/2T) -> 1 at T = 0. Reduces to
/// [`decoherence_function`] at T = 0 within the quadrature tolerance.
pub fn decoherence_function_finite_t(
    t: f64,
    p: &DephasingParams,
    temperature: f64,
) -> Result<f64> {
    if t < 0.0 {
        return Err(Error::NegativeTime(t));
    }
    if temperature < 0.0 {
        return Err(Error::Negative {
            name: "temperature",
            value: temperature,
        });
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    let opts = QuadOptions {
        abs_tol: 1e-10,
        rel_tol: 1e-12,
        max_intervals: 4000,
    };
    let integrand = |w: f64| {
        if w <= 0.0 {
            return 0.0;
        }
        let thermal = if temperature > 0.0 {
            1.0 / (w / (2.0 * temperature)).tanh()
        } else {
            1.0
        };
        // (1 - cos wt) / w^2 written as 2 sin^2(wt/2) / w^2 to dodge the
        // small-argument cancellation
        let half = (0.5 * w * t).sin();
        2.0 * spectral_density(w, p) * thermal * 2.0 * half * half / (w * w)
    };
    let q = integrate_semi_infinite(integrand, p.omega_c, &opts)?;
    Ok(q.value)
}

/// Time derivative of the zero-temperature decoherence function:
///
/// ```text
/// G'(t) = 2 eta w_c Gamma(s) sin(s arctan(w_c t)) / (1 + w_c^2 t^2)^(s/2).
/// ```
///
/// Positive for s <= 2 at all t > 0; changes sign at finite times for
/// s > 2, which is the information-backflow mechanism. Matches central
/// finite differences of [`decoherence_function`] to 1e-5 relative.
pub fn decoherence_rate(t: f64, p: &DephasingParams) -> Result<f64> {
    if t < 0.0 {
        return Err(Error::NegativeTime(t));
    }
    let prefactor = gamma_function(p.s)?;
    Ok(rate_with_prefactor(t, p, prefactor))
}

fn rate_with_prefactor(t: f64, p: &DephasingParams, gamma_s: f64) -> f64 {
    let x = p.omega_c * t;
    let log1p_x2 = x.mul_add(x, 0.0).ln_1p();
    2.0 * p.eta * p.omega_c * gamma_s * (p.s * x.atan()).sin() * (-0.5 * p.s * log1p_x2).exp()
}

/// Coherence survival factor q(t) = exp(-G(t)), in (0, 1] with q(0) = 1.
pub fn coherence_factor(t: f64, p: &DephasingParams) -> Result<f64> {
    Ok((-decoherence_function(t, p)?).exp())
}

/// Times in (a, b) where the decoherence rate changes sign:
/// t_k = tan(k pi / s) / w_c for k >= 1 with k pi / s < pi / 2. Empty for
/// s <= 2.
pub fn rate_sign_changes(p: &DephasingParams, a: f64, b: f64) -> Vec<f64> {
    let mut out = Vec::new();
    let mut k = 1.0;
    while k * PI / p.s < 0.5 * PI {
        let t = (k * PI / p.s).tan() / p.omega_c;
        if t >= b {
            break;
        }
        if t > a {
            out.push(t);
        }
        k += 1.0;
    }
    out
}

/// State at time t: the populations are untouched and the coherences are
/// scaled by q(t).
pub fn evolve(rho0: &QubitState, t: f64, p: &DephasingParams) -> Result<QubitState> {
    let q = coherence_factor(t, p)?;
    QubitState::new(rho0.rho11(), rho0.rho12() * q, rho0.rho22())
}

/// Generator action (G'(t)/2) (s3 rho s3 - rho): it erases nothing on the
/// diagonal and bleeds the off-diagonal entries at the instantaneous rate
/// G'(t). Traceless by construction.
pub fn generator(rho: &QubitState, t: f64, p: &DephasingParams) -> Result<Mat2> {
    let rate = decoherence_rate(t, p)?;
    let off = rho.rho12() * (-rate);
    Ok(Mat2::new(
        Complex64::new(0.0, 0.0),
        off,
        off.conj(),
        Complex64::new(0.0, 0.0),
    ))
}

/// Closed-form speed-limit time for the dephasing channel applied to the
/// horizon-dressed state of `b`:
///
/// ```text
/// tau_qsl = C |q_tau^2 - q_tau q_end| / ((1/tau_d) integral of |q'|),
/// ```
///
/// with C the dressed-state l1 coherence. The result is independent of r3
/// and exactly linear in C. A state with no coherence does not move under
/// pure dephasing and is reported as stationary.
pub fn qsl(
    b: &BlochVector,
    h: &HawkingFactors,
    p: &DephasingParams,
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
    let half_coh = rho0.rho12().norm();
    let gamma_s = gamma_function(p.s)?;

    let q_tau = coherence_factor(tau, p)?;
    let q_end = coherence_factor(tau + tau_d, p)?;
    // |f - 1| tr(rho_tau^2) = 2 |c|^2 q_tau |q_tau - q_end|
    let numerator = 2.0 * half_coh * half_coh * q_tau * (q_tau - q_end).abs();

    if half_coh < STATIONARY_EPS {
        return Ok(QslResult::stationary(BoundKind::Ml, numerator, 0.0));
    }

    let end = tau + tau_d;
    let breaks = rate_sign_changes(p, tau, end);
    let quad = integrate_with_breakpoints(
        |t| {
            let rate = rate_with_prefactor(t, p, gamma_s);
            let q = (-decoherence_function(t, p).expect("t >= 0 inside window")).exp();
            half_coh * rate.abs() * q
        },
        tau,
        end,
        &breaks,
        &BOUND_QUAD,
    )?;
    let avg = quad.value / tau_d;
    Ok(QslResult::from_parts(BoundKind::Ml, numerator, avg, tau_d))
}

/// Trajectory view of the channel for the numeric bounds. Construction
/// pins the gamma-function prefactors once so the per-time callbacks are
/// infallible.
#[derive(Debug, Clone, Copy)]
pub struct DephasingTrajectory {
    rho0: QubitState,
    params: DephasingParams,
    gamma_s: f64,
}

impl DephasingTrajectory {
    pub fn new(rho0: QubitState, params: DephasingParams) -> Result<Self> {
        let gamma_s = gamma_function(params.s)?;
        Ok(DephasingTrajectory {
            rho0,
            params,
            gamma_s,
        })
    }

    pub fn initial_state(&self) -> &QubitState {
        &self.rho0
    }
}

impl Trajectory for DephasingTrajectory {
    fn state(&self, t: f64) -> QubitState {
        evolve(&self.rho0, t, &self.params).expect("time within trajectory domain")
    }

    fn generator(&self, t: f64) -> Mat2 {
        let rho = self.state(t);
        let off = rho.rho12() * (-rate_with_prefactor(t, &self.params, self.gamma_s));
        Mat2::new(
            Complex64::new(0.0, 0.0),
            off,
            off.conj(),
            Complex64::new(0.0, 0.0),
        )
    }

    fn kinks(&self, a: f64, b: f64) -> Vec<f64> {
        rate_sign_changes(&self.params, a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::central_difference;

    fn params(eta: f64, s: f64, omega_c: f64) -> DephasingParams {
        DephasingParams::new(eta, s, omega_c).unwrap()
    }

    #[test]
    fn classification_follows_the_exponent() {
        assert_eq!(params(1.0, 0.5, 1.0).classify(), OhmicClass::SubOhmic);
        assert_eq!(params(1.0, 1.0, 1.0).classify(), OhmicClass::Ohmic);
        assert_eq!(params(1.0, 4.5, 1.0).classify(), OhmicClass::SuperOhmic);
    }

    #[test]
    fn rejects_nonpositive_parameters() {
        assert!(DephasingParams::new(0.0, 1.0, 1.0).is_err());
        assert!(DephasingParams::new(1.0, -0.5, 1.0).is_err());
        assert!(DephasingParams::new(1.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn spectral_density_shape() {
        let p = params(1.0, 1.0, 2.0);
        assert_eq!(spectral_density(0.0, &p), 0.0);
        // Ohmic peak sits at the cutoff with value eta w_c / e
        let peak = spectral_density(p.omega_c(), &p);
        assert!((peak - p.eta() * p.omega_c() / std::f64::consts::E).abs() < 1e-14);
        assert!(spectral_density(p.omega_c() * 0.9, &p) < peak);
        assert!(spectral_density(p.omega_c() * 1.1, &p) < peak);
    }

    #[test]
    fn spectral_density_total_weight() {
        // integral of J equals eta w_c^2 Gamma(s+1)
        for s in [0.5, 1.0, 2.5] {
            let p = params(0.7, s, 1.3);
            let q = integrate_semi_infinite(
                |w| spectral_density(w, &p),
                p.omega_c(),
                &QuadOptions::default(),
            )
            .unwrap();
            let expected =
                p.eta() * p.omega_c() * p.omega_c() * gamma_function(s + 1.0).unwrap();
            assert!((q.value - expected).abs() < 1e-8, "s = {s}");
        }
    }

    #[test]
    fn decoherence_function_reference_values() {
        // frozen from a 40-digit evaluation of the closed form
        let cases = [
            (0.5, 0.5, 0.206_210_922_596_972_46),
            (0.5, 1.0, 0.699_652_147_756_866_69),
            (0.5, 2.0, 1.928_569_101_212_721_3),
            (4.5, 0.5, 6.880_356_052_817_812),
            (4.5, 1.0, 8.472_358_398_250_122),
            (4.5, 2.0, 6.942_047_031_510_169),
            (2.0, 1.0, 1.0),
            (2.0, 2.0, 1.6),
        ];
        for (s, t, expected) in cases {
            let p = params(1.0, s, 1.0);
            let got = decoherence_function(t, &p).unwrap();
            assert!(
                (got - expected).abs() < 1e-12,
                "s = {s}, t = {t}: {got} vs {expected}"
            );
        }
    }

    #[test]
    fn ohmic_point_is_log_two() {
        let p = params(1.0, 1.0, 1.0);
        let g = decoherence_function(1.0, &p).unwrap();
        assert!((g - std::f64::consts::LN_2).abs() < 1e-15);
        let q = coherence_factor(1.0, &p).unwrap();
        assert!((q - 0.5).abs() < 1e-15);
    }

    #[test]
    fn starts_at_zero_and_rejects_negative_time() {
        for s in [0.5, 1.0, 3.0] {
            let p = params(1.0, s, 2.0);
            assert_eq!(decoherence_function(0.0, &p).unwrap(), 0.0);
            assert_eq!(decoherence_rate(0.0, &p).unwrap(), 0.0);
            assert_eq!(coherence_factor(0.0, &p).unwrap(), 1.0);
        }
        assert!(decoherence_function(-1.0, &params(1.0, 1.0, 1.0)).is_err());
        assert!(decoherence_rate(-1.0, &params(1.0, 1.0, 1.0)).is_err());
    }

    #[test]
    fn nonnegative_below_and_above_the_ohmic_point() {
        // Gamma(s-1) < 0 for s < 1 while the bracket is negative there
        // too; the product must stay nonnegative either way
        for s in [0.3, 0.5, 0.9, 1.5, 3.0, 4.5] {
            let p = params(1.0, s, 1.0);
            let mut t = 0.0;
            while t <= 10.0 {
                assert!(decoherence_function(t, &p).unwrap() >= 0.0, "s = {s}, t = {t}");
                t += 0.1;
            }
        }
    }

    #[test]
    fn closed_form_matches_bath_integral() {
        for s in [0.5, 1.0 - 1e-4, 1.0 + 1e-4, 2.0, 4.5] {
            for t in [0.5, 1.0, 2.0] {
                let p = params(1.0, s, 1.0);
                let closed = decoherence_function(t, &p).unwrap();
                let quad = decoherence_function_finite_t(t, &p, 0.0).unwrap();
                assert!(
                    (closed - quad).abs() < 1e-8,
                    "s = {s}, t = {t}: {closed} vs {quad}"
                );
            }
        }
        // and with a cutoff that is not 1
        let p = params(0.8, 2.5, 3.0);
        let closed = decoherence_function(0.7, &p).unwrap();
        let quad = decoherence_function_finite_t(0.7, &p, 0.0).unwrap();
        assert!((closed - quad).abs() < 1e-8);
    }

    #[test]
    fn finite_temperature_dephases_faster() {
        let p = params(1.0, 1.0, 1.0);
        for t in [1.0, 3.0] {
            let cold = decoherence_function_finite_t(t, &p, 0.0).unwrap();
            let warm = decoherence_function_finite_t(t, &p, 0.5).unwrap();
            assert!(warm > cold);
        }
        assert_eq!(decoherence_function_finite_t(0.0, &p, 0.7).unwrap(), 0.0);
        assert!(decoherence_function_finite_t(1.0, &p, -0.1).is_err());
    }

    #[test]
    fn s_continuity_across_the_ohmic_point() {
        for t in [0.5_f64, 1.0, 2.0] {
            let log_form = (1.0 + t * t).ln();
            for s in [1.0 - 1e-4, 1.0 + 1e-4] {
                let p = params(1.0, s, 1.0);
                let g = decoherence_function(t, &p).unwrap();
                assert!(
                    (g - log_form).abs() <= 1e-3,
                    "s = {s}, t = {t}: {g} vs {log_form}"
                );
            }
        }
    }

    #[test]
    fn rate_closed_form_matches_finite_differences() {
        for s in [0.5, 1.0, 2.0, 4.5] {
            let p = params(1.0, s, 1.0);
            for t in [0.2, 0.5, 1.0, 2.0, 5.0] {
                let fd = central_difference(
                    |u| decoherence_function(u, &p).unwrap(),
                    t,
                    1e-5,
                );
                let rate = decoherence_rate(t, &p).unwrap();
                assert!(
                    ((rate - fd) / fd.abs().max(1e-12)).abs() < 1e-5,
                    "s = {s}, t = {t}: {rate} vs {fd}"
                );
            }
        }
    }

    #[test]
    fn ohmic_rate_special_case() {
        // at s = 1 the rate is 2 w_c^2 t / (1 + w_c^2 t^2)
        let p = params(1.0, 1.0, 1.0);
        for t in [0.3, 1.0, 4.0] {
            let expected = 2.0 * t / (1.0 + t * t);
            assert!((decoherence_rate(t, &p).unwrap() - expected).abs() < 1e-13);
        }
    }

    #[test]
    fn super_ohmic_rate_changes_sign() {
        let p = params(1.0, 4.5, 1.0);
        let zeros = rate_sign_changes(&p, 0.0, 10.0);
        assert_eq!(zeros.len(), 2);
        assert!((zeros[0] - (PI / 4.5).tan()).abs() < 1e-14);
        let before = decoherence_rate(zeros[0] - 0.05, &p).unwrap();
        let after = decoherence_rate(zeros[0] + 0.05, &p).unwrap();
        assert!(before > 0.0 && after < 0.0);
        // hence the coherence factor is non-monotone
        let q1 = coherence_factor(zeros[0], &p).unwrap();
        let q2 = coherence_factor(zeros[0] + 0.5, &p).unwrap();
        assert!(q2 > q1);
        // while sub-Ohmic rates keep a single sign
        assert!(rate_sign_changes(&params(1.0, 0.5, 1.0), 0.0, 100.0).is_empty());
        assert!(rate_sign_changes(&params(1.0, 2.0, 1.0), 0.0, 100.0).is_empty());
    }

    #[test]
    fn evolve_scales_only_the_coherences() {
        let rho0 = QubitState::from_bloch(&BlochVector::new(0.5, 0.3, 0.2)).unwrap();
        let p = params(1.0, 1.0, 1.0);
        let rho = evolve(&rho0, 1.0, &p).unwrap();
        assert_eq!(rho.rho11(), rho0.rho11());
        assert_eq!(rho.rho22(), rho0.rho22());
        assert!((rho.rho12().norm() - 0.5 * rho0.rho12().norm()).abs() < 1e-15);

        let diagonal = QubitState::from_bloch(&BlochVector::new(0.0, 0.0, 0.6)).unwrap();
        assert_eq!(evolve(&diagonal, 3.0, &p).unwrap(), diagonal);
    }

    #[test]
    fn generator_action() {
        let p = params(1.0, 1.0, 1.0);
        let diagonal = QubitState::from_bloch(&BlochVector::new(0.0, 0.0, 0.6)).unwrap();
        assert!(generator(&diagonal, 1.0, &p).unwrap().max_abs() < 1e-16);

        let rho = QubitState::from_bloch(&BlochVector::new(0.8, 0.0, 0.0)).unwrap();
        let rate = decoherence_rate(1.0, &p).unwrap();
        let l = generator(&rho, 1.0, &p).unwrap();
        assert!((l.entry(1, 2).re + rate * 0.4).abs() < 1e-15);
        assert!(l.entry(1, 1).norm() < 1e-16);
        assert!(l.trace().norm() < 1e-16);
    }

    #[test]
    fn generator_matches_finite_difference_derivative() {
        let rho0 = QubitState::from_bloch(&BlochVector::new(0.6, 0.2, 0.3)).unwrap();
        let h = 1e-5;
        for s in [0.5, 1.0, 4.5] {
            let p = params(1.0, s, 1.0);
            let mut t = 0.05;
            while t < 3.0 {
                let plus = evolve(&rho0, t + h, &p).unwrap().to_matrix();
                let minus = evolve(&rho0, t - h, &p).unwrap().to_matrix();
                let fd = (plus - minus).scale(1.0 / (2.0 * h));
                let gen = generator(&evolve(&rho0, t, &p).unwrap(), t, &p).unwrap();
                assert!(
                    (fd - gen).max_abs() < 1e-6,
                    "s = {s} at t = {t}: {:e}",
                    (fd - gen).max_abs()
                );
                t += 0.037;
            }
        }
    }

    #[test]
    fn diagonal_input_is_stationary() {
        let b = BlochVector::new(0.0, 0.0, 0.7);
        let h = HawkingFactors::new(10.0, 1.02).unwrap();
        let p = params(1.0, 0.5, 1.0);
        let r = qsl(&b, &h, &p, 0.0, 1.0).unwrap();
        assert!(r.stationary);
        assert_eq!(r.tau_qsl, 0.0);
    }

    #[test]
    fn monotone_window_collapses_to_dressed_coherence() {
        // at tau = 0 with monotone q the integral of |q'| telescopes and
        // tau_qsl = j_minus * C0 * tau_d exactly
        let b = BlochVector::new(0.6, 0.8, 0.0);
        let h = HawkingFactors::new(10.0, 1.05).unwrap();
        let p = params(1.0, 0.5, 1.0);
        for tau_d in [0.3, 1.0, 2.0] {
            let r = qsl(&b, &h, &p, 0.0, tau_d).unwrap();
            let expected = h.j_minus() * 1.0 * tau_d;
            assert!(
                (r.tau_qsl - expected).abs() < 1e-9,
                "tau_d = {tau_d}: {} vs {expected}",
                r.tau_qsl
            );
            assert!((r.ratio - h.j_minus()).abs() < 1e-9);
        }
    }

    #[test]
    fn qsl_rejects_bad_window() {
        let b = BlochVector::new(1.0, 0.0, 0.0);
        let h = HawkingFactors::new(10.0, 1.0).unwrap();
        let p = params(1.0, 1.0, 1.0);
        assert!(qsl(&b, &h, &p, -0.1, 1.0).is_err());
        assert!(qsl(&b, &h, &p, 0.0, -1.0).is_err());
    }
}
