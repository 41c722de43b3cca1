//! Grid sampling of closed-form timeline waves.

use std::f64::consts::PI;

use chronoline::spectra::PhysicalParams;
use chronoline::systems::{universal_from_partial_waves, WaveKind};
use num_complex::Complex64;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::{Format, RunConfig};
use crate::CliError;

/// One output row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleRow {
    pub tau: f64,
    pub coordinate: f64,
    pub value: Complex64,
}

impl SampleRow {
    pub fn modulus(&self) -> f64 {
        self.value.norm()
    }

    /// Phase in `(-π, π]`.
    pub fn phase(&self) -> f64 {
        let p = self.value.arg();
        if p <= -PI {
            PI
        } else {
            p
        }
    }
}

/// Twelve significant digits in scientific notation; `-0` prints as `0`.
pub fn fmt_number(v: f64) -> String {
    format!("{:.11e}", v + 0.0)
}

fn evaluate(config: &RunConfig, params: PhysicalParams, coordinate: f64, tau: f64) -> chronoline::Result<Complex64> {
    match config.l_max {
        Some(l_max) => universal_from_partial_waves([0.0, 0.0, 1.0], [0.0, 0.0, coordinate], tau, config.mass, l_max),
        None => config.system.evaluate(coordinate, tau, params),
    }
}

/// Evaluates the configured wave at every `(tau, coordinate)` pair, in
/// tau-major, grid-index order.
pub fn sample_rows(config: &RunConfig) -> Result<Vec<SampleRow>, CliError> {
    let params = if config.system == WaveKind::FreeFall {
        PhysicalParams::new(config.mass, config.force)
    } else {
        PhysicalParams::free(config.mass)
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;
    let grid = config.grid.points();
    let mut rows = Vec::with_capacity(grid.len() * config.taus.len());
    for &tau in &config.taus {
        let values: Vec<Complex64> = grid
            .par_iter()
            .map(|&x| evaluate(config, params, x, tau).map_err(|e| CliError::Usage(format!("{} at coordinate {x}, tau {tau}: {e}", config.system.name()))))
            .collect::<Result<_, _>>()?;
        rows.extend(grid.iter().zip(values).map(|(&coordinate, value)| SampleRow { tau, coordinate, value }));
    }
    Ok(rows)
}

/// Renders rows as CSV or JSON. A `tau` column is added when several
/// system times are sampled.
pub fn render(rows: &[SampleRow], format: Format, with_tau: bool) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from(if with_tau { "tau,coordinate,re,im,modulus,phase\n" } else { "coordinate,re,im,modulus,phase\n" });
            for r in rows {
                if with_tau {
                    out.push_str(&fmt_number(r.tau));
                    out.push(',');
                }
                let cols = [r.coordinate, r.value.re, r.value.im, r.modulus(), r.phase()].map(fmt_number);
                out.push_str(&cols.join(","));
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let num = |v: f64| -> Value {
                let rounded: f64 = fmt_number(v).parse().expect("formatted float parses");
                json!(rounded)
            };
            let items: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let mut obj = serde_json::Map::new();
                    if with_tau {
                        obj.insert("tau".into(), num(r.tau));
                    }
                    obj.insert("coordinate".into(), num(r.coordinate));
                    obj.insert("re".into(), num(r.value.re));
                    obj.insert("im".into(), num(r.value.im));
                    obj.insert("modulus".into(), num(r.modulus()));
                    obj.insert("phase".into(), num(r.phase()));
                    Value::Object(obj)
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&items).expect("sample rows serialize");
            s.push('\n');
            s
        }
    }
}

/// Samples and renders according to `config`.
pub fn cmd_sample(config: &RunConfig) -> Result<String, CliError> {
    let rows = sample_rows(config)?;
    Ok(render(&rows, config.format, config.taus.len() > 1))
}
