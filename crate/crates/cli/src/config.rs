//! Run configuration: flags, the flat key=value config file, and the merge
//! rule (flags override file, file overrides defaults).

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::str::FromStr;

use emdirac_core::PhysParams;

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum UnitsMode {
    Natural,
    Gaussian,
}

impl UnitsMode {
    pub fn params(self) -> PhysParams {
        match self {
            UnitsMode::Natural => PhysParams::natural(),
            UnitsMode::Gaussian => PhysParams::gaussian_electron(),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            UnitsMode::Natural => "natural",
            UnitsMode::Gaussian => "gaussian",
        }
    }
}

impl FromStr for UnitsMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "natural" => Ok(UnitsMode::Natural),
            "gaussian" => Ok(UnitsMode::Gaussian),
            other => Err(format!("unknown units mode '{other}'")),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(format!("unknown format '{other}'")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub grid_sizes: Vec<usize>,
    pub tolerances: BTreeMap<String, f64>,
    pub units: UnitsMode,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub seed: u64,
    pub paper_literal: bool,
    pub fixed_clock: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            grid_sizes: vec![128, 256, 512],
            tolerances: BTreeMap::new(),
            units: UnitsMode::Natural,
            format: OutputFormat::Json,
            out: None,
            seed: 42,
            paper_literal: false,
            fixed_clock: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), String> {
        validate_grid_sizes(&self.grid_sizes)
    }
}

pub fn validate_grid_sizes(sizes: &[usize]) -> Result<(), String> {
    if sizes.is_empty() {
        return Err("grid size list is empty".into());
    }
    for &n in sizes {
        if n < 8 || n % 2 != 0 {
            return Err(format!("grid size {n} must be even and at least 8"));
        }
    }
    if !sizes.windows(2).all(|w| w[0] < w[1]) {
        return Err("grid sizes must be strictly increasing".into());
    }
    Ok(())
}

pub fn parse_grid_sizes(text: &str) -> Result<Vec<usize>, String> {
    let sizes: Result<Vec<usize>, _> = text.split(',').map(|s| s.trim().parse::<usize>()).collect();
    let sizes = sizes.map_err(|e| format!("bad grid size list '{text}': {e}"))?;
    validate_grid_sizes(&sizes)?;
    Ok(sizes)
}

/// `check-id=value` pairs from repeated `--tol` flags.
pub fn parse_tolerance(text: &str) -> Result<(String, f64), String> {
    let (id, value) = text
        .split_once('=')
        .ok_or_else(|| format!("tolerance '{text}' is not of the form check=value"))?;
    let value: f64 = value
        .trim()
        .parse()
        .map_err(|e| format!("bad tolerance value in '{text}': {e}"))?;
    Ok((id.trim().to_string(), value))
}

/// Flat `key = value` lines; `#` starts a comment. Keys mirror the flags:
/// `n`, `seed`, `units`, `format`, `out`, `paper-literal`, `fixed-clock`,
/// and `tol.<check-id>`.
pub fn parse_config_file(text: &str) -> Result<BTreeMap<String, String>, String> {
    let mut map = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected key=value, got '{line}'", lineno + 1))?;
        map.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(map)
}

/// Apply config-file entries onto defaults. Unknown keys are errors so typos
/// do not silently pass.
pub fn apply_file(cfg: &mut RunConfig, map: &BTreeMap<String, String>) -> Result<(), String> {
    for (key, value) in map {
        match key.as_str() {
            "n" => cfg.grid_sizes = parse_grid_sizes(value)?,
            "seed" => {
                cfg.seed = value
                    .parse()
                    .map_err(|e| format!("bad seed '{value}': {e}"))?
            }
            "units" => cfg.units = value.parse()?,
            "format" => cfg.format = value.parse()?,
            "out" => cfg.out = Some(PathBuf::from(value)),
            "paper-literal" => cfg.paper_literal = parse_bool(value)?,
            "fixed-clock" => cfg.fixed_clock = parse_bool(value)?,
            other => {
                if let Some(id) = other.strip_prefix("tol.") {
                    let v: f64 = value
                        .parse()
                        .map_err(|e| format!("bad tolerance '{value}' for {id}: {e}"))?;
                    cfg.tolerances.insert(id.to_string(), v);
                } else {
                    return Err(format!("unknown config key '{other}'"));
                }
            }
        }
    }
    Ok(())
}

fn parse_bool(value: &str) -> Result<bool, String> {
    match value {
        "true" | "1" | "yes" => Ok(true),
        "false" | "0" | "no" => Ok(false),
        other => Err(format!("bad boolean '{other}'")),
    }
}
