//! `heavenly`: verification, certification, condition and metric reports.
//!
//! Exit status: 0 when every check passes, 1 when a check fails, 2 on a
//! configuration error.

mod config;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use heavenly::ansatz::{real_slice_point, TermKind};
use heavenly::catalog::{instantiate_unchecked, ClassId, ClassParams, Instance};
use heavenly::conditions::{closed_form_condition, legendre_condition, noninvariance_verdict, term_derivs};
use heavenly::determining::{certify, class_kinds, generate, Target};
use heavenly::jet::Point;
use heavenly::metrics::{metric_row, MetricId};
use heavenly::pde::{EquationId, SystemId};
use heavenly::sampling::{fill_missing, random_base, random_point, sample_float, substream};
use heavenly::scalar::ScalarFn;
use heavenly::verify::{verify_instance, DEFAULT_TOLERANCE};
use heavenly::{Error, C64};

use config::{
    resolve_class, resolve_g, resolve_n, resolve_params, resolve_points, resolve_tolerance, CfgResult, ConfigError,
    FileConfig, ParamSource,
};

const SCHEMA: &str = "report-v1";

#[derive(Parser)]
#[command(name = "heavenly", version, about = "Checks exact solution classes of heavenly-type equations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// JSON file with any of the flags below; flags win on conflict.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Seed for every random draw.
    #[arg(long, env = "HEAVENLY_SEED")]
    seed: Option<u64>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct ClassArgs {
    #[arg(long)]
    class: Option<String>,
    /// `name=value,...` or `random:<seed>:<draws>`.
    #[arg(long)]
    params: Option<String>,
    /// Function descriptors for the arbitrary terms, used in turn.
    #[arg(long)]
    g: Option<String>,
    #[arg(long)]
    points: Option<usize>,
    /// Series length or number of exponential pairs.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Residuals, Legendre condition and non-invariance of a class instance.
    Verify {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long)]
        tolerance: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
    /// Determining system of an n-term ansatz, optionally certified.
    Determine {
        #[arg(long, conflicts_with = "equation")]
        system: Option<String>,
        #[arg(long)]
        equation: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// Comma list of `g`, `square`, `conj:<k>`.
        #[arg(long)]
        kinds: Option<String>,
        /// Class whose coefficient relations are substituted.
        #[arg(long)]
        certify: Option<String>,
        #[arg(long)]
        trials: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Pointwise Legendre and Jacobian conditions of a class instance.
    Conditions {
        #[command(flatten)]
        class: ClassArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Metric components and determinants at sample points.
    Metric {
        #[arg(long)]
        family: Option<String>,
        #[command(flatten)]
        class: ClassArgs,
        #[command(flatten)]
        common: Common,
    },
}

enum Failure {
    Config(ConfigError),
    Internal(Error),
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        Failure::Config(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Internal(e)
    }
}

type Outcome = Result<(Value, bool), Failure>;

fn header(command: &str, seed: u64) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("tool".into(), json!("heavenly"));
    m.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    m.insert("command".into(), json!(command));
    m.insert("seed".into(), json!(seed));
    m
}

fn complex_json(z: C64) -> Value {
    json!([z.re, z.im])
}

fn params_json(p: &BTreeMap<String, C64>) -> Value {
    Value::Object(p.iter().map(|(k, v)| (k.clone(), complex_json(*v))).collect())
}

fn point_json(x: &Point) -> Value {
    Value::Array(x.iter().map(|z| complex_json(*z)).collect())
}

/// Resolved parameter sets, one per run.
fn parameter_sets(id: ClassId, n: usize, src: &ParamSource, seed: u64) -> CfgResult<Vec<BTreeMap<String, C64>>> {
    match src {
        ParamSource::Given(m) => Ok(vec![fill_missing(id, n, m, &mut substream(seed, 0))?]),
        ParamSource::Random { seed: s, draws } => {
            (0..*draws).map(|d| Ok(sample_float(id, n, &mut substream(*s, d as u64))?)).collect()
        }
    }
}

fn sample_points(seed: u64, run: usize, k: usize, real_slice: bool) -> Vec<Point> {
    let mut rng = substream(seed, 1_000 + run as u64);
    (0..k)
        .map(|_| if real_slice { real_slice_point(random_base(&mut rng)) } else { random_point(&mut rng) })
        .collect()
}

struct ClassRun {
    id: ClassId,
    n: usize,
    g: Vec<ScalarFn>,
    points: usize,
    sets: Vec<BTreeMap<String, C64>>,
}

fn resolve_class_run(a: &ClassArgs, file: &FileConfig, seed: u64, default_points: usize) -> CfgResult<ClassRun> {
    let id = resolve_class(a.class.as_deref(), file)?;
    let n = resolve_n(id, a.n, file)?;
    let g = resolve_g(a.g.as_deref(), file)?;
    let points = resolve_points(a.points, file, default_points)?;
    let src = resolve_params(a.params.as_deref(), file)?;
    let sets = parameter_sets(id, n, &src, seed)?;
    Ok(ClassRun { id, n, g, points, sets })
}

fn build(run: &ClassRun, p: &BTreeMap<String, C64>) -> CfgResult<Instance> {
    Ok(instantiate_unchecked(run.id, &ClassParams::new(p.clone()).with_n(run.n), &run.g)?)
}

fn class_header(cmd: &str, seed: u64, run: &ClassRun) -> serde_json::Map<String, Value> {
    let mut h = header(cmd, seed);
    h.insert("class".into(), json!(run.id.name()));
    h.insert("n".into(), json!(run.n));
    h.insert("g".into(), json!(run.g.iter().map(|g| g.to_string()).collect::<Vec<_>>()));
    h.insert("points".into(), json!(run.points));
    h
}

fn cmd_verify(a: &ClassArgs, tolerance: Option<f64>, file: &FileConfig, seed: u64) -> Outcome {
    let run = resolve_class_run(a, file, seed, 100)?;
    let tol = resolve_tolerance(tolerance, file, DEFAULT_TOLERANCE)?;
    let mut runs = vec![];
    let mut pass = true;
    for (k, p) in run.sets.iter().enumerate() {
        let inst = build(&run, p)?;
        let pts = sample_points(seed, k, run.points, false);
        let r = verify_instance(&inst, &pts, tol)?;
        let ok = r.pass() && inst.violations.is_empty();
        pass &= ok;
        runs.push(json!({
            "params": params_json(p),
            "violations": inst.violations,
            "checks": r.checks,
            "verdicts": r.verdicts,
            "equation": r.equation,
            "pass": ok,
        }));
    }
    let mut h = class_header("verify", seed, &run);
    h.insert("tolerance".into(), json!(tol));
    h.insert("runs".into(), Value::Array(runs));
    h.insert("pass".into(), json!(pass));
    Ok((Value::Object(h), pass))
}

fn cmd_conditions(a: &ClassArgs, file: &FileConfig, seed: u64) -> Outcome {
    let run = resolve_class_run(a, file, seed, 10)?;
    let mut runs = vec![];
    let mut pass = true;
    for (k, p) in run.sets.iter().enumerate() {
        let inst = build(&run, p)?;
        let eq_ansatz = inst.equation_ansatz();
        let mut rows = vec![];
        for y in sample_points(seed, k, run.points, false) {
            let x = inst.native_point(&y);
            let legendre = match legendre_condition(&inst.equation, &eq_ansatz.eval_jet(&y)?) {
                Ok(v) => Some(v),
                Err(Error::UnknownEquation(_)) => None,
                Err(e) => return Err(e.into()),
            };
            let g2: Vec<C64> = term_derivs(&inst, &x)?.iter().map(|d| d[2]).collect();
            let closed = closed_form_condition(&inst, &g2)?;
            let verdict = noninvariance_verdict(&inst, &x)?;
            let legendre_ok = legendre.map(|v| v.norm() > 1e-12);
            pass &= verdict.satisfied && legendre_ok != Some(false);
            rows.push(json!({
                "point": point_json(&y),
                "legendre": legendre.map(complex_json),
                "legendre_closed_form": closed.map(complex_json),
                "jacobian": complex_json(verdict.generic_value),
                "jacobian_closed_form": verdict.closed_form_value.map(complex_json),
                "satisfied": verdict.satisfied,
                "vanishing": verdict.vanishing,
            }));
        }
        runs.push(json!({"params": params_json(p), "rows": rows}));
    }
    let mut h = class_header("conditions", seed, &run);
    h.insert("runs".into(), Value::Array(runs));
    h.insert("pass".into(), json!(pass));
    Ok((Value::Object(h), pass))
}

fn cmd_metric(family: Option<&str>, a: &ClassArgs, file: &FileConfig, seed: u64) -> Outcome {
    let fam: MetricId = family
        .or(file.family.as_deref())
        .ok_or_else(|| ConfigError("--family is required".into()))?
        .parse()
        .map_err(ConfigError::from)?;
    let id = resolve_class(a.class.as_deref(), file)?;
    if !fam.pairs_with(id) {
        return Err(ConfigError(format!("metric family {fam} does not apply to solutions of {id}")).into());
    }
    let run = resolve_class_run(a, file, seed, 10)?;
    let mut runs = vec![];
    for (k, p) in run.sets.iter().enumerate() {
        let inst = build(&run, p)?;
        let mut rows = vec![];
        for x in sample_points(seed, k, run.points, id.has_real_slice()) {
            let jet = inst.ansatz.eval_jet(&x)?;
            rows.push(match metric_row(fam, &jet, x) {
                Ok(r) => json!({
                    "point": point_json(&r.point),
                    "components": r.components.iter().map(|row| row.iter().map(|z| complex_json(*z)).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "det": complex_json(r.det),
                    "abs_det": r.det.norm(),
                }),
                Err(Error::SingularDenominator(why)) => json!({"point": point_json(&x), "refused": why}),
                Err(e) => return Err(e.into()),
            });
        }
        runs.push(json!({"params": params_json(p), "rows": rows}));
    }
    let mut h = class_header("metric", seed, &run);
    h.insert("family".into(), json!(fam.name()));
    h.insert("coords".into(), json!(fam.coord_names()));
    h.insert("runs".into(), Value::Array(runs));
    Ok((Value::Object(h), true))
}

#[allow(clippy::too_many_arguments)]
fn cmd_determine(
    system: Option<&str>,
    equation: Option<&str>,
    n: Option<usize>,
    kinds: Option<&str>,
    cert: Option<&str>,
    trials: Option<usize>,
    file: &FileConfig,
    seed: u64,
) -> Outcome {
    let system = system.or(file.system.as_deref());
    let equation = equation.or(file.equation.as_deref());
    let target = match (system, equation) {
        (Some(s), None) => Target::System(s.parse::<SystemId>().map_err(ConfigError::from)?),
        (None, Some(e)) => Target::Equation(e.parse::<EquationId>().map_err(ConfigError::from)?),
        _ => return Err(ConfigError("give exactly one of --system and --equation".into()).into()),
    };
    let n = n.or(file.n).unwrap_or(1);
    let class: Option<ClassId> = cert.or(file.certify.as_deref()).map(|c| c.parse()).transpose().map_err(ConfigError::from)?;
    let kinds: Vec<TermKind> = match kinds.or(file.kinds.as_deref()) {
        Some(k) => k.split(',').map(|t| t.parse()).collect::<Result<_, _>>().map_err(ConfigError::from)?,
        None => match class {
            Some(id) if id.n_range().contains(&n) => class_kinds(id, n).map_err(ConfigError::from)?,
            _ => vec![TermKind::ArbitraryG(ScalarFn::identity()); n],
        },
    };
    let ds = generate(&target, n, &kinds).map_err(ConfigError::from)?;
    let mut h = header("determine", seed);
    h.insert("system".into(), ds.to_json());
    let mut pass = true;
    if let Some(id) = class {
        let trials = trials.or(file.trials).unwrap_or(50);
        if trials == 0 {
            return Err(ConfigError("trials must be at least 1".into()).into());
        }
        let rep = certify(&ds, id, trials, seed, false).map_err(ConfigError::from)?;
        pass = rep.all_zero();
        h.insert(
            "certification".into(),
            json!({
                "class": rep.class,
                "exact": rep.exact,
                "trials": trials,
                "zero_trials": rep.zero_trials(),
                "max_abs": rep.max_abs(),
                "failures": rep.trials.iter().filter(|t| !t.nonzero.is_empty()).collect::<Vec<_>>(),
            }),
        );
    }
    h.insert("pass".into(), json!(pass));
    Ok((Value::Object(h), pass))
}

fn emit(report: &Value, output: Option<&PathBuf>) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(report).expect("report serializes") + "\n";
    match output {
        Some(p) => std::fs::write(p, text),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(text.as_bytes())
        }
    }
}

fn run(cli: Cli) -> Result<(Value, bool, Option<PathBuf>), Failure> {
    let common = match &cli.command {
        Command::Verify { common, .. }
        | Command::Determine { common, .. }
        | Command::Conditions { common, .. }
        | Command::Metric { common, .. } => common.clone(),
    };
    let file = FileConfig::load(common.config.as_deref())?;
    let seed = common.seed.or(file.seed).unwrap_or(0);
    let output = common.output.clone().or(file.output.clone());
    let (report, pass) = match &cli.command {
        Command::Verify { class, tolerance, .. } => cmd_verify(class, *tolerance, &file, seed)?,
        Command::Conditions { class, .. } => cmd_conditions(class, &file, seed)?,
        Command::Metric { family, class, .. } => cmd_metric(family.as_deref(), class, &file, seed)?,
        Command::Determine { system, equation, n, kinds, certify, trials, .. } => cmd_determine(
            system.as_deref(),
            equation.as_deref(),
            *n,
            kinds.as_deref(),
            certify.as_deref(),
            *trials,
            &file,
            seed,
        )?,
    };
    Ok((report, pass, output))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((report, pass, output)) => {
            if let Err(e) = emit(&report, output.as_ref()) {
                eprintln!("error: cannot write report: {e}");
                return ExitCode::from(2);
            }
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Config(ConfigError(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
