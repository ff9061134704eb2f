use clap::{Args, Parser, Subcommand};
use qsl_horizon::figures::{
    self, coherence_sweep, qsl_point, qsl_point_oracle, FigureId, Model, PointParams, SweepConfig,
    SweepVariable,
};
use qsl_horizon::state::BlochVector;
use qsl_horizon::{dephasing, validate};
use qsl_horizon_cli::config::ConfigFile;
use qsl_horizon_cli::output::{self, OutputFormat};
use qsl_horizon_cli::{reproduce, reproduce_all, ReproduceError};
use std::path::PathBuf;
use std::process::ExitCode;

/// Speed-limit times for a qubit hovering near a Schwarzschild horizon:
/// figure sweeps, single-point queries and the validation battery.
#[derive(Parser)]
#[command(name = "qsl-horizon", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the dressed-state coherence over the hovering distance
    Coherence(CoherenceArgs),
    /// Rebuild stock figures (fig1..fig9, or `all`)
    Reproduce(ReproduceArgs),
    /// Evaluate the bound at a single parameter point
    Point(PointArgs),
    /// Run every cross-module validation check
    Validate,
    /// Sweep the bound along one parameter axis
    Sweep(SweepArgs),
}

/// Parameter flags shared across subcommands; anything omitted falls
/// back to the config file and then to the built-in defaults.
#[derive(Args, Clone)]
struct ParamFlags {
    /// Dimensionless mode frequency (frequency over Hawking temperature)
    #[arg(long)]
    omega: Option<f64>,
    /// Relative hovering distance r0 / horizon radius (>= 1)
    #[arg(long)]
    r0: Option<f64>,
    /// Evolution window start
    #[arg(long)]
    tau: Option<f64>,
    /// Driving time (window length)
    #[arg(long = "tau-d")]
    tau_d: Option<f64>,
    /// Cavity coupling strength (damped-cavity channel)
    #[arg(long)]
    gamma0: Option<f64>,
    /// Cavity spectral width (damped-cavity channel)
    #[arg(long)]
    lambda: Option<f64>,
    /// Ohmicity exponent (dephasing channel)
    #[arg(long)]
    s: Option<f64>,
    /// Bath coupling (dephasing channel)
    #[arg(long)]
    eta: Option<f64>,
    /// Bath cutoff frequency (dephasing channel)
    #[arg(long = "omega-c")]
    omega_c: Option<f64>,
    /// Bath temperature, exploratory decoherence evaluation only
    #[arg(long)]
    temperature: Option<f64>,
    /// Bloch vector components of the initial state
    #[arg(long)]
    r1: Option<f64>,
    #[arg(long)]
    r2: Option<f64>,
    #[arg(long)]
    r3: Option<f64>,
    /// Configuration file with `key = value` lines; flags override it
    #[arg(long)]
    config: Option<PathBuf>,
}

struct Resolved {
    point: PointParams,
    temperature: Option<f64>,
}

impl ParamFlags {
    fn resolve(&self) -> Result<Resolved, CliError> {
        let file = match &self.config {
            Some(path) => ConfigFile::load(path).map_err(config_err)?,
            None => ConfigFile::default(),
        };
        let d = PointParams::default();
        let num = |key: &str, flag: Option<f64>, fallback: f64| -> Result<f64, CliError> {
            Ok(file.number(key, flag).map_err(config_err)?.unwrap_or(fallback))
        };
        let point = PointParams {
            bloch: BlochVector::new(
                num("r1", self.r1, d.bloch.r1)?,
                num("r2", self.r2, d.bloch.r2)?,
                num("r3", self.r3, d.bloch.r3)?,
            ),
            omega: num("omega", self.omega, d.omega)?,
            r0: num("r0", self.r0, d.r0)?,
            tau: num("tau", self.tau, d.tau)?,
            tau_d: num("tau_d", self.tau_d, d.tau_d)?,
            gamma0: num("gamma0", self.gamma0, d.gamma0)?,
            lambda: num("lambda", self.lambda, d.lambda)?,
            s: num("s", self.s, d.s)?,
            eta: num("eta", self.eta, d.eta)?,
            omega_c: num("omega_c", self.omega_c, d.omega_c)?,
        };
        let temperature = file
            .number("temperature", self.temperature)
            .map_err(config_err)?;
        Ok(Resolved { point, temperature })
    }
}

#[derive(Args)]
struct CoherenceArgs {
    #[command(flatten)]
    params: ParamFlags,
    /// Lower end of the distance grid
    #[arg(long, default_value_t = 1.0)]
    r0_min: f64,
    /// Upper end of the distance grid
    #[arg(long, default_value_t = 1.05)]
    r0_max: f64,
    /// Grid points
    #[arg(long, default_value_t = 201)]
    steps: usize,
    /// Output stem; extension comes from the format
    #[arg(long, default_value = "coherence")]
    out: PathBuf,
    /// csv, svg or both
    #[arg(long, default_value = "csv")]
    format: String,
}

#[derive(Args)]
struct ReproduceArgs {
    /// fig1..fig9, or `all`
    figure: String,
    /// Directory for the emitted files
    #[arg(long, default_value = "figures")]
    out_dir: PathBuf,
    /// csv, svg or both
    #[arg(long, default_value = "both")]
    format: String,
}

#[derive(Args)]
struct PointArgs {
    /// jc or dephasing
    #[arg(long)]
    model: String,
    #[command(flatten)]
    params: ParamFlags,
    /// Also evaluate the generic numeric bound and report the deviation
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// jc or dephasing
    #[arg(long)]
    model: String,
    /// Swept axis: tau, gamma0, s, r0 or omega
    #[arg(long)]
    var: String,
    #[arg(long)]
    start: f64,
    #[arg(long)]
    stop: f64,
    #[arg(long, default_value_t = 201)]
    steps: usize,
    #[command(flatten)]
    params: ParamFlags,
    /// Output stem; extension comes from the format
    #[arg(long, default_value = "sweep")]
    out: PathBuf,
    /// csv, svg or both
    #[arg(long, default_value = "csv")]
    format: String,
}

enum CliError {
    /// Configuration or validation problems: exit code 1.
    Usage(String),
    /// Numerical non-convergence: exit code 2.
    Numeric(String),
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(1),
            CliError::Numeric(_) => ExitCode::from(2),
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Numeric(m) => m,
        }
    }
}

fn config_err(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn lib_err(e: qsl_horizon::Error) -> CliError {
    match e {
        qsl_horizon::Error::QuadratureNoConvergence { .. } => CliError::Numeric(e.to_string()),
        _ => CliError::Usage(e.to_string()),
    }
}

fn io_err(e: std::io::Error) -> CliError {
    CliError::Usage(e.to_string())
}

fn parse_format(s: &str) -> Result<OutputFormat, CliError> {
    OutputFormat::parse(s)
        .ok_or_else(|| CliError::Usage(format!("unknown format {s:?} (use csv, svg or both)")))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .format_timestamp(None)
        .init();
    if let Some(threads) = worker_cap() {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

fn worker_cap() -> Option<usize> {
    let raw = std::env::var("QSL_HORIZON_THREADS").ok()?;
    match raw.parse::<usize>() {
        Ok(n) if n >= 1 => Some(n),
        _ => {
            eprintln!("ignoring QSL_HORIZON_THREADS={raw:?}: expected a positive integer");
            None
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Coherence(args) => cmd_coherence(args),
        Command::Reproduce(args) => cmd_reproduce(args),
        Command::Point(args) => cmd_point(args),
        Command::Validate => cmd_validate(),
        Command::Sweep(args) => cmd_sweep(args),
    }
}

fn cmd_coherence(args: CoherenceArgs) -> Result<(), CliError> {
    let resolved = args.params.resolve()?;
    let format = parse_format(&args.format)?;
    let table = coherence_sweep(
        resolved.point.omega,
        args.r0_min,
        args.r0_max,
        args.steps,
        &resolved.point.bloch,
    )
    .map_err(lib_err)?;
    let written = output::write_table(&table, &args.out, format).map_err(io_err)?;
    for path in written {
        println!("wrote {path}");
    }
    Ok(())
}

fn cmd_reproduce(args: ReproduceArgs) -> Result<(), CliError> {
    let format = parse_format(&args.format)?;
    let written = if args.figure == "all" {
        reproduce_all(&args.out_dir, format)
    } else {
        let id = FigureId::parse(&args.figure).ok_or_else(|| {
            CliError::Usage(format!(
                "unknown figure {:?} (use fig1..fig9 or all)",
                args.figure
            ))
        })?;
        reproduce(id, &args.out_dir, format)
    }
    .map_err(|e| match e {
        ReproduceError::Io(io) => io_err(io),
        ReproduceError::Compute(err) => lib_err(err),
    })?;
    for path in written {
        println!("wrote {path}");
    }
    Ok(())
}

fn parse_model(s: &str) -> Result<Model, CliError> {
    Model::parse(s)
        .ok_or_else(|| CliError::Usage(format!("unknown model {s:?} (use jc or dephasing)")))
}

fn cmd_point(args: PointArgs) -> Result<(), CliError> {
    let model = parse_model(&args.model)?;
    let resolved = args.params.resolve()?;
    let pp = resolved.point;
    let result = qsl_point(model, &pp).map_err(lib_err)?;

    let bound_name = match result.bound {
        qsl_horizon::bounds::BoundKind::Ml => "ML",
        qsl_horizon::bounds::BoundKind::Mt => "MT",
        qsl_horizon::bounds::BoundKind::Unified => "unified",
    };
    if args.oracle {
        let oracle = qsl_point_oracle(model, &pp).map_err(lib_err)?;
        let scale = result.tau_qsl.abs().max(oracle.tau_qsl.abs()).max(1e-30);
        let deviation = (result.tau_qsl - oracle.tau_qsl).abs() / scale;
        println!("tau_qsl,ratio,bound,stationary,oracle_tau_qsl,relative_deviation");
        println!(
            "{},{},{bound_name},{},{},{}",
            figures::format_value(result.tau_qsl),
            figures::format_value(result.ratio),
            result.stationary,
            figures::format_value(oracle.tau_qsl),
            figures::format_value(deviation),
        );
    } else {
        println!("tau_qsl,ratio,bound,stationary");
        println!(
            "{},{},{bound_name},{}",
            figures::format_value(result.tau_qsl),
            figures::format_value(result.ratio),
            result.stationary,
        );
    }

    if let (Some(t), Model::Dephasing) = (resolved.temperature, model) {
        // exploratory extra: the finite-temperature decoherence function
        // at both window edges (the bound itself is zero-temperature)
        let p = dephasing::DephasingParams::new(pp.eta, pp.s, pp.omega_c).map_err(lib_err)?;
        let at_start = dephasing::decoherence_function_finite_t(pp.tau, &p, t).map_err(lib_err)?;
        let at_end =
            dephasing::decoherence_function_finite_t(pp.tau + pp.tau_d, &p, t).map_err(lib_err)?;
        println!(
            "# decoherence function at temperature {t}: G(tau) = {}, G(tau + tau_d) = {}",
            figures::format_value(at_start),
            figures::format_value(at_end)
        );
    }
    Ok(())
}

fn cmd_validate() -> Result<(), CliError> {
    let outcomes = validate::run_all();
    let width = outcomes.iter().map(|o| o.name.len()).max().unwrap_or(0);
    let mut failures = 0;
    for o in &outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!("{status}  {:width$}  {}", o.name, o.detail);
        if !o.passed {
            failures += 1;
        }
    }
    println!("{} of {} checks passed", outcomes.len() - failures, outcomes.len());
    if failures > 0 {
        return Err(CliError::Usage(format!("{failures} validation checks failed")));
    }
    Ok(())
}

fn cmd_sweep(args: SweepArgs) -> Result<(), CliError> {
    let model = parse_model(&args.model)?;
    let variable = SweepVariable::parse(&args.var).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown sweep variable {:?} (use tau, gamma0, s, r0 or omega)",
            args.var
        ))
    })?;
    let resolved = args.params.resolve()?;
    let format = parse_format(&args.format)?;
    let cfg = SweepConfig {
        model,
        variable,
        start: args.start,
        stop: args.stop,
        steps: args.steps,
        fixed: resolved.point,
    };
    let table = figures::run_sweep(&cfg).map_err(lib_err)?;
    let written = output::write_table(&table, &args.out, format).map_err(io_err)?;
    for path in written {
        println!("wrote {path}");
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn format_and_model_parsing_errors() {
        assert!(parse_format("png").is_err());
        assert!(parse_model("bosonic").is_err());
        assert!(parse_model("jc").is_ok());
    }
}
