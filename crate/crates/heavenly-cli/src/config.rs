//! Run configuration: command-line flags layered over an optional JSON file.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use serde_json::Value;

use heavenly::catalog::ClassId;
use heavenly::scalar::ScalarFn;
use heavenly::{parse_complex, C64};

/// A configuration problem; always exit status 2.
#[derive(Debug)]
pub struct ConfigError(pub String);

impl<E: std::fmt::Display> From<E> for ConfigError {
    fn from(e: E) -> Self {
        ConfigError(e.to_string())
    }
}

pub type CfgResult<T> = std::result::Result<T, ConfigError>;

/// Everything a config file may set. Flags override each field.
#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FileConfig {
    pub class: Option<String>,
    pub params: Option<Value>,
    pub g: Option<Value>,
    pub points: Option<usize>,
    pub tolerance: Option<f64>,
    pub n: Option<usize>,
    pub seed: Option<u64>,
    pub output: Option<PathBuf>,
    pub family: Option<String>,
    pub system: Option<String>,
    pub equation: Option<String>,
    pub kinds: Option<String>,
    pub certify: Option<String>,
    pub trials: Option<usize>,
}

impl FileConfig {
    pub fn load(path: Option<&Path>) -> CfgResult<FileConfig> {
        let Some(path) = path else { return Ok(FileConfig::default()) };
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| ConfigError(format!("{}: {e}", path.display())))
    }
}

/// Where parameter values come from.
#[derive(Debug, Clone, PartialEq)]
pub enum ParamSource {
    /// Explicit values; anything missing is drawn from the run seed.
    Given(BTreeMap<String, C64>),
    /// `random:<seed>:<draws>`
    Random { seed: u64, draws: usize },
}

fn value_to_complex(v: &Value) -> CfgResult<C64> {
    match v {
        Value::Number(n) => n.as_f64().map(|x| C64::new(x, 0.0)).ok_or_else(|| ConfigError(format!("bad number {n}"))),
        Value::String(s) => Ok(parse_complex(s)?),
        Value::Array(a) if a.len() == 2 => Ok(C64::new(
            a[0].as_f64().ok_or_else(|| ConfigError("bad real part".into()))?,
            a[1].as_f64().ok_or_else(|| ConfigError("bad imaginary part".into()))?,
        )),
        other => Err(ConfigError(format!("cannot read {other} as a complex number"))),
    }
}

pub fn parse_params_str(s: &str) -> CfgResult<ParamSource> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix("random:") {
        let (seed, draws) = rest
            .split_once(':')
            .ok_or_else(|| ConfigError(format!("expected random:<seed>:<draws>, got `{s}`")))?;
        let draws: usize = draws.parse()?;
        if draws == 0 {
            return Err(ConfigError("draws must be at least 1".into()));
        }
        return Ok(ParamSource::Random { seed: seed.parse()?, draws });
    }
    let mut m = BTreeMap::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (k, v) = item.split_once('=').ok_or_else(|| ConfigError(format!("expected name=value, got `{item}`")))?;
        if m.insert(k.trim().to_string(), parse_complex(v)?).is_some() {
            return Err(ConfigError(format!("parameter `{}` given twice", k.trim())));
        }
    }
    Ok(ParamSource::Given(m))
}

pub fn parse_params_value(v: &Value) -> CfgResult<ParamSource> {
    match v {
        Value::String(s) => parse_params_str(s),
        Value::Object(o) => Ok(ParamSource::Given(
            o.iter().map(|(k, v)| Ok((k.clone(), value_to_complex(v)?))).collect::<CfgResult<_>>()?,
        )),
        other => Err(ConfigError(format!("params must be a string or an object, got {other}"))),
    }
}

pub fn parse_g_str(s: &str) -> CfgResult<Vec<ScalarFn>> {
    let g: Vec<ScalarFn> = s.split(',').filter(|t| !t.trim().is_empty()).map(|t| t.parse()).collect::<Result<_, _>>()?;
    if g.is_empty() {
        return Err(ConfigError("empty function list".into()));
    }
    Ok(g)
}

pub fn parse_g_value(v: &Value) -> CfgResult<Vec<ScalarFn>> {
    match v {
        Value::String(s) => parse_g_str(s),
        Value::Array(a) => parse_g_str(
            &a.iter()
                .map(|x| x.as_str().map(str::to_string).ok_or_else(|| ConfigError("g entries must be strings".into())))
                .collect::<CfgResult<Vec<_>>>()?
                .join(","),
        ),
        other => Err(ConfigError(format!("g must be a string or a list, got {other}"))),
    }
}

pub fn resolve_class(flag: Option<&str>, file: &FileConfig) -> CfgResult<ClassId> {
    let name = flag.or(file.class.as_deref()).ok_or_else(|| ConfigError("--class is required".into()))?;
    Ok(name.parse()?)
}

pub fn resolve_n(id: ClassId, flag: Option<usize>, file: &FileConfig) -> CfgResult<usize> {
    let n = flag.or(file.n).unwrap_or(id.default_n());
    if !id.n_range().contains(&n) {
        let r = id.n_range();
        return Err(ConfigError(format!("{id} needs n in {}..={}, got {n}", r.start(), r.end())));
    }
    Ok(n)
}

pub fn resolve_points(flag: Option<usize>, file: &FileConfig, default: usize) -> CfgResult<usize> {
    let p = flag.or(file.points).unwrap_or(default);
    if p == 0 {
        return Err(ConfigError("points must be at least 1".into()));
    }
    Ok(p)
}

pub fn resolve_tolerance(flag: Option<f64>, file: &FileConfig, default: f64) -> CfgResult<f64> {
    let t = flag.or(file.tolerance).unwrap_or(default);
    if !(t > 0.0 && t.is_finite()) {
        return Err(ConfigError(format!("tolerance must be positive, got {t}")));
    }
    Ok(t)
}

pub fn resolve_params(flag: Option<&str>, file: &FileConfig) -> CfgResult<ParamSource> {
    match (flag, &file.params) {
        (Some(s), _) => parse_params_str(s),
        (None, Some(v)) => parse_params_value(v),
        (None, None) => Ok(ParamSource::Given(BTreeMap::new())),
    }
}

pub fn resolve_g(flag: Option<&str>, file: &FileConfig) -> CfgResult<Vec<ScalarFn>> {
    match (flag, &file.g) {
        (Some(s), _) => parse_g_str(s),
        (None, Some(v)) => parse_g_value(v),
        (None, None) => parse_g_str("exp"),
    }
}
