//! Cross-module validation battery.
//!
//! Each check exercises one of the crate's correctness contracts: the
//! closed forms against the generic numeric bound, the closed survival
//! and decoherence functions against direct quadrature of their defining
//! expressions, the evolved states against their generators, and the
//! qualitative ordering of the stock figure sweeps. The battery is
//! deterministic (fixed RNG seed) so failures reproduce.

use crate::bounds::{ml_bound, mt_bound, unified_bound};
use crate::dephasing::{self, DephasingParams, DephasingTrajectory};
use crate::error::Result;
use crate::figures::{self, FigureId, SweepTable};
use crate::hawking::{coherence_after_dressing, horizon_state, HawkingFactors};
use crate::jc::{self, JcParams, JcTrajectory};
use crate::mat2::Mat2;
use crate::numerics::{integrate_with_breakpoints, QuadOptions};
use crate::state::{BlochVector, QubitState};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Result of one validation check.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn from_bound(name: &'static str, worst: f64, tolerance: f64, what: &str) -> Self {
        CheckOutcome {
            name,
            passed: worst <= tolerance,
            detail: format!("worst {what} {worst:.3e} (tolerance {tolerance:.1e})"),
        }
    }

    fn from_error(name: &'static str, e: impl std::fmt::Display) -> Self {
        CheckOutcome {
            name,
            passed: false,
            detail: format!("error: {e}"),
        }
    }
}

/// Runs every check in a fixed order.
pub fn run_all() -> Vec<CheckOutcome> {
    vec![
        check_dephasing_oracle_equivalence(),
        check_jc_oracle_equivalence(),
        check_master_equation_consistency(),
        check_jc_survival_quadrature(),
        check_dephasing_closed_form(),
        check_hawking_invariants(),
        check_figure_trends(),
        check_exact_cancellation(),
        check_speed_limit_ratio(),
        check_r3_independence_and_linearity(),
    ]
}

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5151_0001)
}

/// Random Bloch vector with equatorial component at least `min_coh`, so
/// the sampled states carry usable coherence.
fn random_bloch(rng: &mut ChaCha8Rng, min_coh: f64) -> BlochVector {
    let r3: f64 = rng.gen_range(-0.8..0.8);
    let cap = ((1.0 - r3 * r3).sqrt() * 0.995).max(min_coh + 1e-3);
    let c: f64 = rng.gen_range(min_coh..cap);
    let phase: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    BlochVector::new(c * phase.cos(), c * phase.sin(), r3)
}

/// Relative deviation with a scale floor: values below `floor` are
/// measured against `floor` itself, turning the comparison absolute
/// there. With tolerance tol this accepts |a - b| <= tol * max(|a|, |b|)
/// or |a - b| <= tol * floor, whichever is weaker; the floors below keep
/// the absolute cushion at 1e-13 time units, under the f64 noise of the
/// state-level arithmetic the oracle path is made of.
fn relative_deviation(a: f64, b: f64, floor: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(floor)
}

/// Closed-form dephasing bound against the generic numeric bound on 200
/// random parameter tuples; must agree to 1e-9 relative.
pub fn check_dephasing_oracle_equivalence() -> CheckOutcome {
    let name = "dephasing closed form vs numeric bound";
    match dephasing_oracle_worst(200) {
        Ok(worst) => CheckOutcome::from_bound(name, worst, 1e-9, "relative deviation"),
        Err(e) => CheckOutcome::from_error(name, e),
    }
}

fn dephasing_oracle_worst(samples: usize) -> Result<f64> {
    let mut rng = rng();
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let s = rng.gen_range(0.3..5.0);
        let eta = rng.gen_range(0.5..2.0);
        let omega = rng.gen_range(1.0..20.0);
        let r0 = rng.gen_range(1.0..1.05);
        let tau = rng.gen_range(0.0..5.0);
        let tau_d = rng.gen_range(0.1..2.0);
        let b = random_bloch(&mut rng, 0.1);

        let p = DephasingParams::new(eta, s, 1.0)?;
        let h = HawkingFactors::new(omega, r0)?;
        let closed = dephasing::qsl(&b, &h, &p, tau, tau_d)?;
        let traj = DephasingTrajectory::new(horizon_state(&b, &h)?, p)?;
        let oracle = ml_bound(&traj, tau, tau_d)?;
        if closed.stationary != oracle.stationary {
            return Ok(f64::INFINITY);
        }
        worst = worst.max(relative_deviation(closed.tau_qsl, oracle.tau_qsl, 1e-4));
    }
    Ok(worst)
}

/// Closed-form damped-cavity bound against the generic numeric bound on
/// 200 random tuples spanning both coupling regimes; 1e-6 relative.
pub fn check_jc_oracle_equivalence() -> CheckOutcome {
    let name = "damped-cavity closed form vs numeric bound";
    match jc_oracle_worst(200) {
        Ok(worst) => CheckOutcome::from_bound(name, worst, 1e-6, "relative deviation"),
        Err(e) => CheckOutcome::from_error(name, e),
    }
}

fn jc_oracle_worst(samples: usize) -> Result<f64> {
    let mut rng = rng();
    let mut worst: f64 = 0.0;
    for i in 0..samples {
        // force half the samples into each coupling regime
        let gamma0 = if i % 2 == 0 {
            rng.gen_range(0.05..0.5)
        } else {
            rng.gen_range(0.5..20.0)
        };
        let omega = rng.gen_range(1.0..20.0);
        let r0 = rng.gen_range(1.0..1.05);
        let tau = rng.gen_range(0.0..5.0);
        let tau_d = rng.gen_range(0.1..2.0);
        let b = random_bloch(&mut rng, 0.1);

        let p = JcParams::new(gamma0, 1.0)?;
        let h = HawkingFactors::new(omega, r0)?;
        let closed = jc::qsl(&b, &h, &p, tau, tau_d)?;
        let traj = JcTrajectory::new(horizon_state(&b, &h)?, p);
        let oracle = ml_bound(&traj, tau, tau_d)?;
        if closed.stationary != oracle.stationary {
            return Ok(f64::INFINITY);
        }
        if closed.stationary {
            continue;
        }
        worst = worst.max(relative_deviation(closed.tau_qsl, oracle.tau_qsl, 1e-7));
    }
    Ok(worst)
}

/// Finite-difference time derivative of the evolved state against the
/// generator output, both channels, sup-norm 1e-6.
pub fn check_master_equation_consistency() -> CheckOutcome {
    let name = "master-equation consistency";
    let jc_sup =
        jc_master_equation_sup_norm(|rho, t, p| jc::generator(rho, t, p).expect("valid time"));
    let deph_sup = dephasing_master_equation_sup_norm(|rho, t, p| {
        dephasing::generator(rho, t, p).expect("valid time")
    });
    match (jc_sup, deph_sup) {
        (Ok(a), Ok(b)) => CheckOutcome::from_bound(name, a.max(b), 1e-6, "sup-norm residual"),
        (Err(e), _) | (_, Err(e)) => CheckOutcome::from_error(name, e),
    }
}

/// Worst sup-norm residual between the finite-difference derivative of
/// the damped-cavity evolution and a caller-supplied generator, over
/// dense grids in all three coupling regimes. Public so harnesses can
/// demonstrate that a wrong ladder-operator normalization fails the gate.
pub fn jc_master_equation_sup_norm(
    generator: impl Fn(&QubitState, f64, &JcParams) -> Mat2,
) -> Result<f64> {
    let rho0 = horizon_state(
        &BlochVector::new(0.6, 0.25, 0.4),
        &HawkingFactors::new(10.0, 1.02)?,
    )?;
    let h = 1e-5;
    let mut worst: f64 = 0.0;
    for p in [
        JcParams::new(0.1, 1.0)?,
        JcParams::new(10.0, 1.0)?,
        JcParams::new(0.5, 1.0)?,
    ] {
        let zeros = jc::survival_zeros(&p, 0.0, 4.0);
        let mut t = 0.02;
        while t < 4.0 {
            // the solution carries |a(t)|, which has corners at survival
            // zeros; the derivative does not exist exactly there
            if zeros.iter().all(|z| (t - z).abs() > 1e-3) {
                let plus = jc::evolve(&rho0, t + h, &p)?.to_matrix();
                let minus = jc::evolve(&rho0, t - h, &p)?.to_matrix();
                let fd = (plus - minus).scale(1.0 / (2.0 * h));
                let gen = generator(&jc::evolve(&rho0, t, &p)?, t, &p);
                worst = worst.max((fd - gen).max_abs());
            }
            t += 0.0137;
        }
    }
    Ok(worst)
}

/// Dephasing counterpart of [`jc_master_equation_sup_norm`].
pub fn dephasing_master_equation_sup_norm(
    generator: impl Fn(&QubitState, f64, &DephasingParams) -> Mat2,
) -> Result<f64> {
    let rho0 = horizon_state(
        &BlochVector::new(0.6, 0.25, 0.4),
        &HawkingFactors::new(10.0, 1.02)?,
    )?;
    let h = 1e-5;
    let mut worst: f64 = 0.0;
    for s in [0.5, 1.0, 4.5] {
        let p = DephasingParams::new(1.0, s, 1.0)?;
        let mut t = 0.02;
        while t < 4.0 {
            let plus = dephasing::evolve(&rho0, t + h, &p)?.to_matrix();
            let minus = dephasing::evolve(&rho0, t - h, &p)?.to_matrix();
            let fd = (plus - minus).scale(1.0 / (2.0 * h));
            let gen = generator(&dephasing::evolve(&rho0, t, &p)?, t, &p);
            worst = worst.max((fd - gen).max_abs());
            t += 0.0137;
        }
    }
    Ok(worst)
}

/// Closed-form survival factor against exp(-integral of the decay rate),
/// all three regimes, 1e-8 absolute. The strong regime is compared below
/// its first rate divergence, where the rate integral exists classically.
pub fn check_jc_survival_quadrature() -> CheckOutcome {
    let name = "survival factor vs rate quadrature";
    let run = || -> Result<f64> {
        let opts = QuadOptions {
            abs_tol: 1e-12,
            rel_tol: 1e-12,
            max_intervals: 4000,
        };
        let mut worst: f64 = 0.0;
        let cases = [
            (JcParams::new(0.1, 1.0)?, vec![0.5, 1.0, 2.0, 5.0]),
            (JcParams::new(0.5, 1.0)?, vec![0.5, 1.0, 2.0, 5.0]),
            (JcParams::new(10.0, 1.0)?, vec![0.2, 0.5, 0.78]),
        ];
        for (p, times) in cases {
            for t in times {
                let q = integrate_with_breakpoints(
                    |u| jc::decay_rate(u, &p).expect("u >= 0"),
                    0.0,
                    t,
                    &[],
                    &opts,
                )?;
                let closed = jc::survival(t, &p)?;
                worst = worst.max((closed - (-q.value).exp()).abs());
            }
        }
        Ok(worst)
    };
    match run() {
        Ok(worst) => CheckOutcome::from_bound(name, worst, 1e-8, "absolute deviation"),
        Err(e) => CheckOutcome::from_error(name, e),
    }
}

/// Zero-temperature decoherence closed form against quadrature of the
/// defining bath integral (1e-8), plus continuity through the Ohmic
/// point (1e-3 * eta at |s - 1| = 1e-4).
pub fn check_dephasing_closed_form() -> CheckOutcome {
    let name = "decoherence closed form vs bath integral";
    let run = || -> Result<(f64, f64)> {
        let mut worst_quad: f64 = 0.0;
        for s in [0.5, 2.0, 4.5, 1.0 - 1e-4, 1.0 + 1e-4] {
            for t in [0.5, 1.0, 2.0] {
                let p = DephasingParams::new(1.0, s, 1.0)?;
                let closed = dephasing::decoherence_function(t, &p)?;
                let quad = dephasing::decoherence_function_finite_t(t, &p, 0.0)?;
                worst_quad = worst_quad.max((closed - quad).abs());
            }
        }
        let worst_cont = s_continuity_max_deviation(dephasing::decoherence_function)?;
        Ok((worst_quad, worst_cont))
    };
    match run() {
        Ok((quad, cont)) => CheckOutcome {
            name,
            passed: quad <= 1e-8 && cont <= 1e-3,
            detail: format!(
                "worst quadrature deviation {quad:.3e} (tol 1e-8), \
                 worst continuity deviation {cont:.3e} (tol 1e-3)"
            ),
        },
        Err(e) => CheckOutcome::from_error(name, e),
    }
}

/// Worst deviation of the supplied decoherence evaluator at
/// s = 1 ± 1e-4 from the logarithmic Ohmic form, normalized by eta.
/// Public so harnesses can demonstrate that a perturbed gamma
/// implementation fails the gate.
pub fn s_continuity_max_deviation(
    decoherence: impl Fn(f64, &DephasingParams) -> Result<f64>,
) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for eta in [1.0, 1.7] {
        for s in [1.0 - 1e-4, 1.0 + 1e-4] {
            let p = DephasingParams::new(eta, s, 1.0)?;
            for t in [0.5_f64, 1.0, 2.0] {
                let log_form = eta * (1.0 + t * t).ln();
                let g = decoherence(t, &p)?;
                worst = worst.max((g - log_form).abs() / eta);
            }
        }
    }
    Ok(worst)
}

/// Normalization, horizon symmetry and monotonicity of the mode-mixing
/// coefficients.
pub fn check_hawking_invariants() -> CheckOutcome {
    let name = "horizon-dressing invariants";
    let run = || -> Result<(f64, bool)> {
        let b_unit = BlochVector::new(0.6, 0.8, 0.0);
        let b_half = BlochVector::new(0.3, 0.4, 0.5);
        let mut worst: f64 = 0.0;
        let mut ordered = true;
        let omegas = [1.0, 2.0, 5.0, 10.0, 20.0];
        let grid = figures::linspace(1.0, 1.05, 21);
        for &omega in &omegas {
            let mut last = -1.0;
            for &r0 in &grid {
                let h = HawkingFactors::new(omega, r0)?;
                worst = worst
                    .max((h.j_minus() * h.j_minus() + h.j_plus() * h.j_plus() - 1.0).abs());
                let c = coherence_after_dressing(&b_unit, &h);
                if r0 > 1.0 && c <= last {
                    ordered = false;
                }
                last = c;
            }
        }
        // at the horizon both coefficients collapse to 1/sqrt(2) and the
        // dressed coherence is the initial coherence over sqrt(2)
        for &omega in &omegas {
            let h = HawkingFactors::new(omega, 1.0)?;
            if h.j_minus() != h.j_plus() {
                ordered = false;
            }
            let c = coherence_after_dressing(&b_half, &h);
            worst = worst.max((c - 0.5 * std::f64::consts::FRAC_1_SQRT_2).abs());
        }
        // frequency ordering away from the horizon
        for &r0 in &[1.01, 1.03, 1.05] {
            let mut last = -1.0;
            for &omega in &omegas {
                let c = coherence_after_dressing(&b_unit, &HawkingFactors::new(omega, r0)?);
                if c <= last {
                    ordered = false;
                }
                last = c;
            }
        }
        Ok((worst, ordered))
    };
    match run() {
        Ok((worst, ordered)) => CheckOutcome {
            name,
            passed: worst <= 1e-12 && ordered,
            detail: format!(
                "worst invariant deviation {worst:.3e} (tol 1e-12), ordering {}",
                if ordered { "holds" } else { "violated" }
            ),
        },
        Err(e) => CheckOutcome::from_error(name, e),
    }
}

struct TrendReport {
    violations: usize,
    points: usize,
    failing_groups: Vec<String>,
}

impl TrendReport {
    fn new() -> Self {
        TrendReport {
            violations: 0,
            points: 0,
            failing_groups: Vec::new(),
        }
    }

    fn require(&mut self, group: &str, ok: bool) {
        self.points += 1;
        if !ok {
            self.violations += 1;
            if self.failing_groups.last().map(String::as_str) != Some(group) {
                self.failing_groups.push(group.to_string());
            }
        }
    }
}

fn column<'t>(table: &'t SweepTable, label: &str) -> &'t [f64] {
    table
        .columns
        .iter()
        .find(|(l, _)| l == label)
        .map(|(_, c)| c.as_slice())
        .unwrap_or_else(|| panic!("missing column {label}"))
}

/// Qualitative ordering of the stock figures: distance and frequency
/// orderings per channel, strong-vs-weak comparison, and the bump
/// structure of the super-Ohmic sweep.
pub fn check_figure_trends() -> CheckOutcome {
    let name = "figure sweep orderings";
    let run = || -> Result<TrendReport> {
        let mut rep = TrendReport::new();
        let r0_labels: Vec<String> = figures::R0_CURVES
            .iter()
            .map(|r0| format!("r0_{r0:.2}_tau_qsl"))
            .collect();

        // damped cavity: larger distance lies strictly lower (figs 2-4)
        let fig2 = figures::figure(FigureId::Fig2)?;
        let fig3 = figures::figure(FigureId::Fig3)?;
        let fig4 = figures::figure(FigureId::Fig4)?;
        let band = figures::STRONG_SWEEP_INVERSION_BAND;
        for (tag, table, skip_band) in [
            ("fig2 r0", &fig2, false),
            ("fig3 r0", &fig3, true),
            ("fig4 r0", &fig4, false),
        ] {
            for pair in r0_labels.windows(2) {
                let lo = column(table, &pair[0]);
                let hi = column(table, &pair[1]);
                for i in 0..lo.len() {
                    // the strong-coupling sweep carries a documented
                    // inversion band; the ordering claim is asserted on
                    // the grid outside it
                    if skip_band && table.x[i] > band.0 && table.x[i] < band.1 {
                        continue;
                    }
                    rep.require(tag, hi[i] < lo[i]);
                }
            }
        }
        // strong coupling lies strictly below weak coupling pointwise
        for label in &r0_labels {
            let weak = column(&fig2, label);
            let strong = column(&fig3, label);
            for i in 0..weak.len() {
                rep.require("strong below weak", strong[i] < weak[i]);
            }
        }
        // fig5: decreasing along distance and in frequency, each regime
        let fig5 = figures::figure(FigureId::Fig5)?;
        for regime in ["weak", "strong"] {
            for omega in figures::OMEGA_CURVES {
                let col = column(&fig5, &format!("{regime}_omega_{omega:.0}_tau_qsl"));
                for w in col.windows(2) {
                    rep.require("fig5 along r0", w[1] < w[0]);
                }
            }
            for pair in figures::OMEGA_CURVES.windows(2) {
                let lo = column(&fig5, &format!("{regime}_omega_{:.0}_tau_qsl", pair[0]));
                let hi = column(&fig5, &format!("{regime}_omega_{:.0}_tau_qsl", pair[1]));
                // the curves coincide at the horizon point itself
                for i in 1..lo.len() {
                    rep.require("fig5 omega", hi[i] < lo[i]);
                }
            }
        }
        // dephasing: larger distance lies strictly higher (figs 6-8)
        let fig6 = figures::figure(FigureId::Fig6)?;
        let fig7 = figures::figure(FigureId::Fig7)?;
        let fig8 = figures::figure(FigureId::Fig8)?;
        for (tag, table) in [("fig6 r0", &fig6), ("fig7 r0", &fig7), ("fig8 r0", &fig8)] {
            for pair in r0_labels.windows(2) {
                let lo = column(table, &pair[0]);
                let hi = column(table, &pair[1]);
                for i in 0..lo.len() {
                    rep.require(tag, hi[i] > lo[i]);
                }
            }
        }
        // sub-Ohmic sweep is monotone in the window start; super-Ohmic
        // shows the backflow bump
        for label in &r0_labels {
            let sub = column(&fig6, label);
            rep.require("fig6 monotone", sub.windows(2).all(|w| w[1] < w[0]));
            let sup = column(&fig7, label);
            let rises = sup.windows(2).any(|w| w[1] > w[0]);
            let falls = sup.windows(2).any(|w| w[1] < w[0]);
            rep.require("fig7 bump", rises && falls);
        }
        // fig9: increasing along distance; increasing in frequency away
        // from the horizon point
        let fig9 = figures::figure(FigureId::Fig9)?;
        for s in [0.5, 4.5] {
            for omega in figures::OMEGA_CURVES {
                let col = column(&fig9, &format!("s_{s:.1}_omega_{omega:.0}_tau_qsl"));
                for w in col.windows(2) {
                    rep.require("fig9 along r0", w[1] > w[0]);
                }
            }
            for pair in figures::OMEGA_CURVES.windows(2) {
                let lo = column(&fig9, &format!("s_{s:.1}_omega_{:.0}_tau_qsl", pair[0]));
                let hi = column(&fig9, &format!("s_{s:.1}_omega_{:.0}_tau_qsl", pair[1]));
                for i in 1..lo.len() {
                    rep.require("fig9 omega", hi[i] > lo[i]);
                }
            }
        }
        Ok(rep)
    };
    match run() {
        Ok(rep) => CheckOutcome {
            name,
            passed: rep.violations == 0,
            detail: if rep.violations == 0 {
                format!("all {} ordering points hold", rep.points)
            } else {
                format!(
                    "{} of {} ordering points violated ({})",
                    rep.violations,
                    rep.points,
                    rep.failing_groups.join(", ")
                )
            },
        },
        Err(e) => CheckOutcome::from_error(name, e),
    }
}

/// With a monotone coherence factor and the window starting at zero, the
/// dephasing bound collapses exactly to j_minus * C0 * tau_d.
pub fn check_exact_cancellation() -> CheckOutcome {
    let name = "monotone-window cancellation";
    let run = || -> Result<f64> {
        let mut worst: f64 = 0.0;
        for (omega, r0) in [(10.0, 1.05), (5.0, 1.02), (1.0, 1.0)] {
            let h = HawkingFactors::new(omega, r0)?;
            for (b, c0) in [
                (BlochVector::new(0.6, 0.8, 0.0), 1.0),
                (BlochVector::new(0.3, 0.4, 0.5), 0.5),
            ] {
                for s in [0.5, 1.0] {
                    let p = DephasingParams::new(1.0, s, 1.0)?;
                    for tau_d in [0.3, 1.0, 2.0] {
                        let r = dephasing::qsl(&b, &h, &p, 0.0, tau_d)?;
                        let expected = h.j_minus() * c0 * tau_d;
                        worst = worst.max((r.tau_qsl - expected).abs());
                    }
                }
            }
        }
        Ok(worst)
    };
    match run() {
        Ok(worst) => CheckOutcome::from_bound(name, worst, 1e-9, "absolute deviation"),
        Err(e) => CheckOutcome::from_error(name, e),
    }
}

/// No computed bound may exceed the driving time: ratio <= 1 + 1e-9 on
/// random tuples across channels and bound kinds, and on every stock
/// figure point.
pub fn check_speed_limit_ratio() -> CheckOutcome {
    let name = "bound never exceeds driving time";
    let run = || -> Result<f64> {
        let mut rng = rng();
        let mut worst: f64 = 0.0;
        for i in 0..100 {
            let omega = rng.gen_range(1.0..20.0);
            let r0 = rng.gen_range(1.0..1.05);
            let tau = rng.gen_range(0.0..5.0);
            let tau_d = rng.gen_range(0.1..2.0);
            let b = random_bloch(&mut rng, 0.05);
            let h = HawkingFactors::new(omega, r0)?;
            let rho0 = horizon_state(&b, &h)?;

            let gamma0 = if i % 2 == 0 {
                rng.gen_range(0.05..0.5)
            } else {
                rng.gen_range(0.5..20.0)
            };
            let pj = JcParams::new(gamma0, 1.0)?;
            worst = worst.max(jc::qsl(&b, &h, &pj, tau, tau_d)?.ratio);
            let traj = JcTrajectory::new(rho0, pj);
            worst = worst.max(ml_bound(&traj, tau, tau_d)?.ratio);
            worst = worst.max(mt_bound(&traj, tau, tau_d)?.ratio);
            worst = worst.max(unified_bound(&traj, tau, tau_d)?.ratio);

            let s = rng.gen_range(0.3..5.0);
            let pd = DephasingParams::new(rng.gen_range(0.5..2.0), s, 1.0)?;
            worst = worst.max(dephasing::qsl(&b, &h, &pd, tau, tau_d)?.ratio);
            let traj = DephasingTrajectory::new(rho0, pd)?;
            worst = worst.max(ml_bound(&traj, tau, tau_d)?.ratio);
            worst = worst.max(mt_bound(&traj, tau, tau_d)?.ratio);
            worst = worst.max(unified_bound(&traj, tau, tau_d)?.ratio);
        }
        for id in FigureId::all().into_iter().skip(1) {
            let table = figures::figure(id)?;
            for (label, col) in &table.columns {
                if label.ends_with("_ratio") {
                    for &v in col {
                        worst = worst.max(v);
                    }
                }
            }
        }
        Ok(worst)
    };
    match run() {
        Ok(worst) => CheckOutcome {
            name,
            passed: worst <= 1.0 + 1e-9,
            detail: format!("largest ratio {worst:.12}"),
        },
        Err(e) => CheckOutcome::from_error(name, e),
    }
}

/// The dephasing bound must ignore r3 entirely and scale exactly
/// linearly in the initial coherence.
pub fn check_r3_independence_and_linearity() -> CheckOutcome {
    let name = "dephasing r3 independence and coherence linearity";
    let run = || -> Result<f64> {
        let mut rng = rng();
        let mut worst: f64 = 0.0;
        for _ in 0..40 {
            let s = rng.gen_range(0.3..5.0);
            let eta = rng.gen_range(0.5..2.0);
            let omega = rng.gen_range(1.0..20.0);
            let r0 = rng.gen_range(1.0..1.05);
            let tau = rng.gen_range(0.0..3.0);
            let tau_d = rng.gen_range(0.1..2.0);
            let p = DephasingParams::new(eta, s, 1.0)?;
            let h = HawkingFactors::new(omega, r0)?;

            let c: f64 = rng.gen_range(0.2..0.6);
            let phase: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let (r1, r2) = (c * phase.cos(), c * phase.sin());

            let mut baseline = None;
            for r3 in [-0.6, -0.2, 0.0, 0.3, 0.7] {
                let r = dephasing::qsl(&BlochVector::new(r1, r2, r3), &h, &p, tau, tau_d)?;
                match baseline {
                    None => baseline = Some(r.tau_qsl),
                    Some(base) => worst = worst.max((r.tau_qsl - base).abs()),
                }
            }

            let full = dephasing::qsl(&BlochVector::new(r1, r2, 0.0), &h, &p, tau, tau_d)?;
            for kappa in [0.25, 0.6] {
                let scaled = dephasing::qsl(
                    &BlochVector::new(kappa * r1, kappa * r2, 0.0),
                    &h,
                    &p,
                    tau,
                    tau_d,
                )?;
                worst = worst.max((scaled.tau_qsl - kappa * full.tau_qsl).abs());
            }
        }
        Ok(worst)
    };
    match run() {
        Ok(worst) => CheckOutcome::from_bound(name, worst, 1e-12, "absolute deviation"),
        Err(e) => CheckOutcome::from_error(name, e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::gamma_function;

    #[test]
    fn perturbed_gamma_breaks_continuity() {
        // negative control: a one percent error in the gamma function
        // must trip the s-continuity gate
        let worst = s_continuity_max_deviation(|t, p| {
            dephasing::decoherence_function_with_gamma(t, p, |x| {
                gamma_function(x).map(|g| 1.01 * g)
            })
        })
        .unwrap();
        assert!(worst > 1e-3, "perturbed gamma slipped through: {worst:.3e}");
    }

    #[test]
    fn wrong_ladder_normalization_breaks_consistency() {
        // negative control: ladder operators defined without the 1/2
        // normalization scale the whole dissipator by four
        let worst = jc_master_equation_sup_norm(|rho, t, p| {
            jc::generator(rho, t, p).unwrap().scale(4.0)
        })
        .unwrap();
        assert!(
            worst > 1e-6,
            "wrong normalization slipped through: {worst:.3e}"
        );
    }

    #[test]
    fn random_bloch_respects_floor() {
        let mut r = rng();
        for _ in 0..100 {
            let b = random_bloch(&mut r, 0.1);
            assert!(b.norm() <= 1.0);
            assert!(b.transverse_norm() >= 0.1);
            let _ = QubitState::from_bloch(&b).unwrap();
        }
    }

    #[test]
    fn deviation_helper() {
        assert_eq!(relative_deviation(0.0, 0.0, 1e-6), 0.0);
        assert!((relative_deviation(1.0, 1.0 + 1e-10, 1e-6) - 1e-10).abs() < 1e-12);
        // below the floor the comparison turns absolute
        assert!(relative_deviation(1e-9, 2e-9, 1e-4) < 1e-4);
    }
}
