//! Revival analysis report for a spectrum file.

use std::fmt::Write;
use std::path::Path;

use chronoline::spectra::{revival_time, DiscreteSpectrum, RevivalData};
use chronoline::Error;

use crate::sample::fmt_number;
use crate::CliError;

/// Outcome of the revival search.
#[derive(Debug, Clone, PartialEq)]
pub enum SpectrumReport {
    Commensurate { spectrum: DiscreteSpectrum, revival: RevivalData },
    /// No revival within the denominator budget; carries the best estimate.
    Irrational { spectrum: DiscreteSpectrum, best_effort_tau_rev: f64 },
}

pub fn load_spectrum(path: &Path) -> Result<DiscreteSpectrum, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("invalid spectrum file {}: {e}", path.display())))
}

pub fn cmd_spectrum(spectrum: DiscreteSpectrum, max_denominator: u64, tol: f64) -> Result<SpectrumReport, CliError> {
    match revival_time(&spectrum, max_denominator, tol) {
        Ok(revival) => Ok(SpectrumReport::Commensurate { spectrum, revival }),
        Err(Error::IrrationalSpectrum { best_effort_tau_rev }) => Ok(SpectrumReport::Irrational { spectrum, best_effort_tau_rev }),
        Err(e) => Err(e.into()),
    }
}

impl SpectrumReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            SpectrumReport::Commensurate { spectrum, revival } => {
                let _ = writeln!(out, "tau_rev = {} ({} pi)", fmt_number(revival.tau_rev), fmt_number(revival.tau_rev / std::f64::consts::PI));
                let _ = writeln!(out, "theta = {}", fmt_number(revival.theta));
                let _ = writeln!(out, "max_residual = {}", fmt_number(revival.max_residual));
                let _ = writeln!(out, "product_formula_tau = {}", fmt_number(revival.product_formula_tau));
                let _ = writeln!(out, "\nj,label,energy,n_j");
                for (j, (e, n)) in spectrum.levels().iter().zip(&revival.n).enumerate() {
                    let label = spectrum.labels().map(|l| l[j].as_str()).unwrap_or("");
                    let _ = writeln!(out, "{j},{label},{},{n}", fmt_number(*e));
                }
                let _ = writeln!(out, "\ngap,ratio,p/q");
                for (j, (p, q)) in revival.gap_numerators.iter().zip(&revival.gap_denominators).enumerate() {
                    let gap = spectrum.levels()[j + 1] - spectrum.levels()[j];
                    let _ = writeln!(out, "{j},{},{p}/{q}", fmt_number(gap / revival.delta_e_min));
                }
            }
            SpectrumReport::Irrational { best_effort_tau_rev, .. } => {
                let _ = writeln!(out, "warning: spectrum is not commensurate within the denominator budget");
                let _ = writeln!(out, "best_effort_tau_rev = {}", fmt_number(*best_effort_tau_rev));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            SpectrumReport::Commensurate { spectrum, revival } => serde_json::json!({ "spectrum": spectrum, "revival": revival }),
            SpectrumReport::Irrational { spectrum, best_effort_tau_rev } => {
                serde_json::json!({ "spectrum": spectrum, "warning": "irrational spectrum", "best_effort_tau_rev": best_effort_tau_rev })
            }
        }
    }
}
