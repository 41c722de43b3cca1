//! Run configuration: flat `key=value` files overridden by command-line flags.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use chronoline::systems::WaveKind;

use crate::CliError;

/// Output encoding for sampled waves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(CliError::Usage(format!("unknown format '{other}' (expected csv or json)"))),
        }
    }
}

/// Sampling grid `min..=max` with `count` uniformly spaced points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl Grid {
    pub fn new(min: f64, max: f64, count: usize) -> Result<Self, CliError> {
        if count < 2 {
            return Err(CliError::Usage(format!("grid count must be at least 2, got {count}")));
        }
        if !(min.is_finite() && max.is_finite() && min < max) {
            return Err(CliError::Usage(format!("grid needs finite min < max, got [{min}, {max}]")));
        }
        Ok(Self { min, max, count })
    }

    pub fn points(&self) -> Vec<f64> {
        let last = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| if i + 1 == self.count { self.max } else { self.min + (self.max - self.min) * (i as f64 / last) })
            .collect()
    }
}

/// Everything `sample` needs, after merging file and flags.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub system: WaveKind,
    pub mass: f64,
    pub force: f64,
    pub taus: Vec<f64>,
    pub grid: Grid,
    pub tolerance: f64,
    pub output_path: Option<PathBuf>,
    pub format: Format,
    /// Evaluate the universal wave as a partial-wave sum up to this order.
    pub l_max: Option<u32>,
}

/// Unvalidated settings keyed by flag name (`grid-min`, `mass`, ...).
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Settings(pub BTreeMap<String, String>);

pub const KEYS: [&str; 13] = ["system", "tau", "grid-min", "grid-max", "grid-count", "mass", "force", "tol", "out", "format", "l", "l-max", "max-denominator"];

impl Settings {
    /// Parses `key=value` lines; `#` starts a comment, underscores in keys
    /// are read as dashes.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut map = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("config line {}: expected key=value", n + 1)))?;
            let key = k.trim().replace('_', "-");
            if !KEYS.contains(&key.as_str()) {
                return Err(CliError::Usage(format!("config line {}: unknown key '{}'", n + 1, k.trim())));
            }
            map.insert(key, v.trim().to_string());
        }
        Ok(Self(map))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Entries of `other` replace those of `self`.
    pub fn overlay(mut self, other: Settings) -> Self {
        self.0.extend(other.0);
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(String::as_str)
    }

    pub fn set(&mut self, key: &str, value: impl ToString) {
        self.0.insert(key.to_string(), value.to_string());
    }

    fn number<T: std::str::FromStr>(&self, key: &str, default: T) -> Result<T, CliError> {
        match self.get(key) {
            None => Ok(default),
            Some(v) => v.parse().map_err(|_| CliError::Usage(format!("invalid value '{v}' for {key}"))),
        }
    }

    pub fn tolerance(&self, default: f64) -> Result<f64, CliError> {
        let tol = self.number("tol", default)?;
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(CliError::Usage(format!("tolerance must be positive, got {tol}")));
        }
        Ok(tol)
    }

    pub fn l_max(&self) -> Result<Option<u32>, CliError> {
        self.get("l-max").map(|_| self.number("l-max", 0u32)).transpose()
    }

    pub fn max_denominator(&self) -> Result<u64, CliError> {
        self.number("max-denominator", 1000u64)
    }

    /// Validated sampling configuration.
    pub fn run_config(&self) -> Result<RunConfig, CliError> {
        let name = self.get("system").ok_or_else(|| CliError::Usage("missing --system".into()))?;
        let l = self.number("l", 0u32)?;
        let system = WaveKind::parse(name, l).map_err(|e| CliError::Usage(e.to_string()))?;
        let taus = self
            .get("tau")
            .ok_or_else(|| CliError::Usage("missing --tau".into()))?
            .split(',')
            .map(|t| t.trim().parse::<f64>().map_err(|_| CliError::Usage(format!("invalid tau '{t}'"))))
            .collect::<Result<Vec<_>, _>>()?;
        if taus.iter().any(|t| !t.is_finite()) {
            return Err(CliError::Usage("tau must be finite".into()));
        }
        let grid = Grid::new(self.number("grid-min", -1.0)?, self.number("grid-max", 1.0)?, self.number("grid-count", 801usize)?)?;
        let mass: f64 = self.number("mass", 1.0)?;
        if !(mass > 0.0 && mass.is_finite()) {
            return Err(CliError::Usage(format!("mass must be positive, got {mass}")));
        }
        let l_max = self.l_max()?;
        if l_max.is_some() && system != WaveKind::Free3dUniversal {
            return Err(CliError::Usage("--l-max applies only to free3d_universal".into()));
        }
        Ok(RunConfig {
            system,
            mass,
            force: self.number("force", 1.0)?,
            taus,
            grid,
            tolerance: self.tolerance(1e-8)?,
            output_path: self.get("out").map(PathBuf::from),
            format: Format::parse(self.get("format").unwrap_or("csv"))?,
            l_max,
        })
    }
}
