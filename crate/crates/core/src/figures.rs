//! Deterministic parameter sweeps: the nine stock figures plus a generic
//! sweep runner.
//!
//! Every sweep produces a [`SweepTable`]: one x column and one or more
//! data columns. Speed-limit sweeps emit two columns per curve, the bound
//! value itself and its ratio to the driving time, since either may be
//! the quantity of interest. Grid points are evaluated in parallel but
//! assembled in grid order, so the serialized output is byte-stable
//! across runs and worker counts.

use crate::bounds::QslResult;
use crate::dephasing::{self, DephasingParams};
use crate::error::{Error, Result};
use crate::hawking::{coherence_after_dressing, HawkingFactors};
use crate::jc::{self, JcParams};
use crate::state::BlochVector;
use rayon::prelude::*;

/// Default family of hovering distances for multi-curve figures. The
/// outermost value sits on the edge of the near-horizon window.
pub const R0_CURVES: [f64; 4] = [1.0, 1.01, 1.03, 1.05];

/// Default family of mode frequencies for the frequency-resolved figures.
pub const OMEGA_CURVES: [f64; 3] = [5.0, 10.0, 20.0];

/// Grid points per curve.
pub const GRID_POINTS: usize = 201;

/// Window-start band on the strong-coupling sweep (fig3 defaults) where
/// the distance ordering of the bound genuinely inverts: there the
/// evaluation window straddles the first survival collapse and the
/// numerator's population term changes sign at a distance-dependent
/// time. Outside this band the ordering is strict across the default
/// grid; trend checks assert around it and report it.
pub const STRONG_SWEEP_INVERSION_BAND: (f64, f64) = (0.23, 0.40);

/// The stock figure set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    /// Dressed-state coherence against hovering distance.
    Fig1,
    /// Damped-cavity bound against window start, weak coupling.
    Fig2,
    /// Damped-cavity bound against window start, strong coupling.
    Fig3,
    /// Damped-cavity bound against coupling strength.
    Fig4,
    /// Damped-cavity bound against hovering distance, both regimes.
    Fig5,
    /// Dephasing bound against window start, sub-Ohmic bath.
    Fig6,
    /// Dephasing bound against window start, super-Ohmic bath.
    Fig7,
    /// Dephasing bound against the Ohmicity exponent.
    Fig8,
    /// Dephasing bound against hovering distance, both bath classes.
    Fig9,
}

impl FigureId {
    pub fn all() -> [FigureId; 9] {
        use FigureId::*;
        [Fig1, Fig2, Fig3, Fig4, Fig5, Fig6, Fig7, Fig8, Fig9]
    }

    pub fn name(&self) -> &'static str {
        match self {
            FigureId::Fig1 => "fig1",
            FigureId::Fig2 => "fig2",
            FigureId::Fig3 => "fig3",
            FigureId::Fig4 => "fig4",
            FigureId::Fig5 => "fig5",
            FigureId::Fig6 => "fig6",
            FigureId::Fig7 => "fig7",
            FigureId::Fig8 => "fig8",
            FigureId::Fig9 => "fig9",
        }
    }

    pub fn parse(s: &str) -> Option<FigureId> {
        FigureId::all().into_iter().find(|f| f.name() == s)
    }
}

/// A rectangular sweep result: an x grid and named data columns of the
/// same length.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub x_name: String,
    pub x: Vec<f64>,
    pub columns: Vec<(String, Vec<f64>)>,
}

impl SweepTable {
    /// Comma-separated serialization with a header row and 12 significant
    /// digits per value. Deterministic for identical content.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.x_name);
        for (label, _) in &self.columns {
            out.push(',');
            out.push_str(label);
        }
        out.push('\n');
        for (i, &x) in self.x.iter().enumerate() {
            out.push_str(&format_value(x));
            for (_, col) in &self.columns {
                out.push(',');
                out.push_str(&format_value(col[i]));
            }
            out.push('\n');
        }
        out
    }
}

/// 12 significant digits, scientific; the contractual CSV number format.
pub fn format_value(v: f64) -> String {
    format!("{v:.11e}")
}

pub fn linspace(start: f64, stop: f64, steps: usize) -> Vec<f64> {
    assert!(steps >= 2, "a grid needs at least two points");
    let h = (stop - start) / (steps - 1) as f64;
    (0..steps)
        .map(|i| {
            if i + 1 == steps {
                stop
            } else {
                start + h * i as f64
            }
        })
        .collect()
}

/// Which channel a sweep runs through.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    Jc,
    Dephasing,
}

impl Model {
    pub fn parse(s: &str) -> Option<Model> {
        match s {
            "jc" => Some(Model::Jc),
            "dephasing" => Some(Model::Dephasing),
            _ => None,
        }
    }
}

/// Full parameter record for a single bound evaluation; a sweep varies
/// one field and keeps the rest fixed.
#[derive(Debug, Clone, Copy)]
pub struct PointParams {
    pub bloch: BlochVector,
    pub omega: f64,
    pub r0: f64,
    pub tau: f64,
    pub tau_d: f64,
    pub gamma0: f64,
    pub lambda: f64,
    pub s: f64,
    pub eta: f64,
    pub omega_c: f64,
}

impl Default for PointParams {
    fn default() -> Self {
        PointParams {
            bloch: BlochVector::new(1.0, 0.0, 0.0),
            omega: 10.0,
            r0: 1.0,
            tau: 0.0,
            tau_d: 1.0,
            gamma0: 0.1,
            lambda: 1.0,
            s: 1.0,
            eta: 1.0,
            omega_c: 1.0,
        }
    }
}

/// Closed-form bound at a single parameter point.
pub fn qsl_point(model: Model, pp: &PointParams) -> Result<QslResult> {
    let h = HawkingFactors::new(pp.omega, pp.r0)?;
    match model {
        Model::Jc => {
            let p = JcParams::new(pp.gamma0, pp.lambda)?;
            jc::qsl(&pp.bloch, &h, &p, pp.tau, pp.tau_d)
        }
        Model::Dephasing => {
            let p = DephasingParams::new(pp.eta, pp.s, pp.omega_c)?;
            dephasing::qsl(&pp.bloch, &h, &p, pp.tau, pp.tau_d)
        }
    }
}

/// Generic numeric bound at the same point, for cross-checking the closed
/// form from the command line.
pub fn qsl_point_oracle(model: Model, pp: &PointParams) -> Result<QslResult> {
    let h = HawkingFactors::new(pp.omega, pp.r0)?;
    let rho0 = crate::hawking::horizon_state(&pp.bloch, &h)?;
    match model {
        Model::Jc => {
            let p = JcParams::new(pp.gamma0, pp.lambda)?;
            let traj = jc::JcTrajectory::new(rho0, p);
            crate::bounds::ml_bound(&traj, pp.tau, pp.tau_d)
        }
        Model::Dephasing => {
            let p = DephasingParams::new(pp.eta, pp.s, pp.omega_c)?;
            let traj = dephasing::DephasingTrajectory::new(rho0, p)?;
            crate::bounds::ml_bound(&traj, pp.tau, pp.tau_d)
        }
    }
}

/// The sweepable axes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepVariable {
    Tau,
    Gamma0,
    S,
    R0,
    Omega,
}

impl SweepVariable {
    pub fn parse(s: &str) -> Option<SweepVariable> {
        match s {
            "tau" => Some(SweepVariable::Tau),
            "gamma0" => Some(SweepVariable::Gamma0),
            "s" => Some(SweepVariable::S),
            "r0" => Some(SweepVariable::R0),
            "omega" => Some(SweepVariable::Omega),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SweepVariable::Tau => "tau",
            SweepVariable::Gamma0 => "gamma0",
            SweepVariable::S => "s",
            SweepVariable::R0 => "r0",
            SweepVariable::Omega => "omega",
        }
    }
}

/// A one-axis sweep over the chosen model.
#[derive(Debug, Clone, Copy)]
pub struct SweepConfig {
    pub model: Model,
    pub variable: SweepVariable,
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
    pub fixed: PointParams,
}

impl SweepConfig {
    fn validate(&self) -> Result<()> {
        if self.steps < 2 {
            return Err(Error::NonPositive {
                name: "steps - 1",
                value: self.steps as f64 - 1.0,
            });
        }
        if self.start >= self.stop {
            return Err(Error::ReversedBounds {
                a: self.start,
                b: self.stop,
            });
        }
        Ok(())
    }
}

fn with_variable(pp: &PointParams, var: SweepVariable, value: f64) -> PointParams {
    let mut out = *pp;
    match var {
        SweepVariable::Tau => out.tau = value,
        SweepVariable::Gamma0 => out.gamma0 = value,
        SweepVariable::S => out.s = value,
        SweepVariable::R0 => out.r0 = value,
        SweepVariable::Omega => out.omega = value,
    }
    out
}

/// Runs a sweep, evaluating grid points in parallel and keeping grid
/// order in the output.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepTable> {
    cfg.validate()?;
    let x = linspace(cfg.start, cfg.stop, cfg.steps);
    let results: Vec<QslResult> = x
        .par_iter()
        .map(|&v| qsl_point(cfg.model, &with_variable(&cfg.fixed, cfg.variable, v)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepTable {
        x_name: cfg.variable.name().to_string(),
        x,
        columns: vec![
            (
                "tau_qsl".to_string(),
                results.iter().map(|r| r.tau_qsl).collect(),
            ),
            (
                "ratio".to_string(),
                results.iter().map(|r| r.ratio).collect(),
            ),
        ],
    })
}

fn qsl_columns(
    label: &str,
    x: &[f64],
    point: impl Fn(f64) -> Result<QslResult> + Sync,
) -> Result<[(String, Vec<f64>); 2]> {
    let results: Vec<QslResult> = x
        .par_iter()
        .map(|&v| point(v))
        .collect::<Result<Vec<_>>>()?;
    Ok([
        (
            format!("{label}_tau_qsl"),
            results.iter().map(|r| r.tau_qsl).collect(),
        ),
        (
            format!("{label}_ratio"),
            results.iter().map(|r| r.ratio).collect(),
        ),
    ])
}

fn r0_label(r0: f64) -> String {
    format!("r0_{r0:.2}")
}

/// Builds one of the stock figures on the default grids.
pub fn figure(id: FigureId) -> Result<SweepTable> {
    let maximal = BlochVector::new(1.0, 0.0, 0.0);
    match id {
        FigureId::Fig1 => {
            let x = linspace(1.0, 1.05, GRID_POINTS);
            let mut columns = Vec::new();
            for &omega in &OMEGA_CURVES {
                let y: Vec<f64> = x
                    .par_iter()
                    .map(|&r0| {
                        HawkingFactors::new(omega, r0)
                            .map(|h| coherence_after_dressing(&maximal, &h))
                    })
                    .collect::<Result<Vec<_>>>()?;
                columns.push((format!("omega_{omega:.0}"), y));
            }
            Ok(SweepTable {
                x_name: "r0".to_string(),
                x,
                columns,
            })
        }
        FigureId::Fig2 | FigureId::Fig3 => {
            let gamma0 = if id == FigureId::Fig2 { 0.1 } else { 10.0 };
            let p = JcParams::new(gamma0, 1.0)?;
            // shared grid so the two regimes compare at matched points;
            // the weak-coupling distance ordering holds to about 3.9
            // before the curves genuinely cross
            let x = linspace(0.0, 3.0, GRID_POINTS);
            let mut columns = Vec::new();
            for &r0 in &R0_CURVES {
                let h = HawkingFactors::new(10.0, r0)?;
                let pair = qsl_columns(&r0_label(r0), &x, |tau| {
                    jc::qsl(&maximal, &h, &p, tau, 1.0)
                })?;
                columns.extend(pair);
            }
            Ok(SweepTable {
                x_name: "tau".to_string(),
                x,
                columns,
            })
        }
        FigureId::Fig4 => {
            let x = linspace(0.02, 5.0, GRID_POINTS);
            let mut columns = Vec::new();
            for &r0 in &R0_CURVES {
                let h = HawkingFactors::new(10.0, r0)?;
                let pair = qsl_columns(&r0_label(r0), &x, |gamma0| {
                    let p = JcParams::new(gamma0, 1.0)?;
                    jc::qsl(&maximal, &h, &p, 0.0, 1.0)
                })?;
                columns.extend(pair);
            }
            Ok(SweepTable {
                x_name: "gamma0".to_string(),
                x,
                columns,
            })
        }
        FigureId::Fig5 => {
            let x = linspace(1.0, 1.05, GRID_POINTS);
            let mut columns = Vec::new();
            for (regime, gamma0) in [("weak", 0.1), ("strong", 10.0)] {
                let p = JcParams::new(gamma0, 1.0)?;
                for &omega in &OMEGA_CURVES {
                    let pair =
                        qsl_columns(&format!("{regime}_omega_{omega:.0}"), &x, |r0| {
                            let h = HawkingFactors::new(omega, r0)?;
                            jc::qsl(&maximal, &h, &p, 0.0, 1.0)
                        })?;
                    columns.extend(pair);
                }
            }
            Ok(SweepTable {
                x_name: "r0".to_string(),
                x,
                columns,
            })
        }
        FigureId::Fig6 | FigureId::Fig7 => {
            let s = if id == FigureId::Fig6 { 0.5 } else { 4.5 };
            let p = DephasingParams::new(1.0, s, 1.0)?;
            let x = linspace(0.0, 5.0, GRID_POINTS);
            let mut columns = Vec::new();
            for &r0 in &R0_CURVES {
                let h = HawkingFactors::new(10.0, r0)?;
                let pair = qsl_columns(&r0_label(r0), &x, |tau| {
                    dephasing::qsl(&maximal, &h, &p, tau, 1.0)
                })?;
                columns.extend(pair);
            }
            Ok(SweepTable {
                x_name: "tau".to_string(),
                x,
                columns,
            })
        }
        FigureId::Fig8 => {
            let x = linspace(0.3, 5.0, GRID_POINTS);
            let mut columns = Vec::new();
            for &r0 in &R0_CURVES {
                let h = HawkingFactors::new(10.0, r0)?;
                let pair = qsl_columns(&r0_label(r0), &x, |s| {
                    let p = DephasingParams::new(1.0, s, 1.0)?;
                    dephasing::qsl(&maximal, &h, &p, 0.0, 1.0)
                })?;
                columns.extend(pair);
            }
            Ok(SweepTable {
                x_name: "s".to_string(),
                x,
                columns,
            })
        }
        FigureId::Fig9 => {
            let x = linspace(1.0, 1.05, GRID_POINTS);
            let mut columns = Vec::new();
            for &s in &[0.5, 4.5] {
                let p = DephasingParams::new(1.0, s, 1.0)?;
                for &omega in &OMEGA_CURVES {
                    let pair =
                        qsl_columns(&format!("s_{s:.1}_omega_{omega:.0}"), &x, |r0| {
                            let h = HawkingFactors::new(omega, r0)?;
                            dephasing::qsl(&maximal, &h, &p, 0.0, 1.0)
                        })?;
                    columns.extend(pair);
                }
            }
            Ok(SweepTable {
                x_name: "r0".to_string(),
                x,
                columns,
            })
        }
    }
}

/// Coherence sweep backing the `coherence` command: long-format rows of
/// (r0, omega, coherence) for a fixed Bloch vector.
pub fn coherence_sweep(
    omega: f64,
    r0_start: f64,
    r0_stop: f64,
    steps: usize,
    bloch: &BlochVector,
) -> Result<SweepTable> {
    if steps < 2 {
        return Err(Error::NonPositive {
            name: "steps - 1",
            value: steps as f64 - 1.0,
        });
    }
    if r0_start >= r0_stop {
        return Err(Error::ReversedBounds {
            a: r0_start,
            b: r0_stop,
        });
    }
    let x = linspace(r0_start, r0_stop, steps);
    let coh: Vec<f64> = x
        .par_iter()
        .map(|&r0| HawkingFactors::new(omega, r0).map(|h| coherence_after_dressing(bloch, &h)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepTable {
        x_name: "r0".to_string(),
        x: x.clone(),
        columns: vec![
            ("omega".to_string(), vec![omega; x.len()]),
            ("coherence".to_string(), coh),
        ],
    })
}
