//! Spectral models: discrete levels with revival analysis, continuum bands
//! under energy normalization, and the accessible-states truncation.

mod revival;
mod state;

pub use revival::{rationalize, revival_time, RATIONAL_MATCH};
pub use state::{ContinuumAmplitude, SpectralState};

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Ordered, non-degenerate bound-state energies with optional labels.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SpectrumFile", into = "SpectrumFile")]
pub struct DiscreteSpectrum {
    levels: Vec<f64>,
    labels: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct SpectrumFile {
    levels: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl TryFrom<SpectrumFile> for DiscreteSpectrum {
    type Error = Error;
    fn try_from(f: SpectrumFile) -> Result<Self> {
        DiscreteSpectrum::new(f.levels, f.labels)
    }
}

impl From<DiscreteSpectrum> for SpectrumFile {
    fn from(s: DiscreteSpectrum) -> Self {
        SpectrumFile { levels: s.levels, labels: s.labels }
    }
}

impl DiscreteSpectrum {
    pub fn new(levels: Vec<f64>, labels: Option<Vec<String>>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::InvalidInput("spectrum needs at least one level".into()));
        }
        if levels.iter().any(|e| !e.is_finite()) {
            return Err(Error::InvalidInput("levels must be finite".into()));
        }
        if levels.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidInput("levels must be strictly increasing".into()));
        }
        if let Some(l) = &labels {
            if l.len() != levels.len() {
                return Err(Error::InvalidInput(format!("{} labels for {} levels", l.len(), levels.len())));
            }
        }
        Ok(Self { levels, labels })
    }

    pub fn from_levels(levels: Vec<f64>) -> Result<Self> {
        Self::new(levels, None)
    }

    /// `E_j = offset + spacing·j`, `j = 0..n`.
    pub fn oscillator(n: usize, spacing: f64, offset: f64) -> Result<Self> {
        Self::from_levels((0..n).map(|j| offset + spacing * j as f64).collect())
    }

    /// `E_j = e1·j²`, `j = 1..=n`.
    pub fn square_well(n: usize, e1: f64) -> Result<Self> {
        Self::from_levels((1..=n).map(|j| e1 * (j * j) as f64).collect())
    }

    /// `E_j = -1/j²`, `j = 1..=n`.
    pub fn hydrogen(n: usize) -> Result<Self> {
        Self::from_levels((1..=n).map(|j| -1.0 / (j * j) as f64).collect())
    }

    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Smallest adjacent level separation, or `None` for a single level.
    pub fn min_gap(&self) -> Option<f64> {
        self.levels.windows(2).map(|w| w[1] - w[0]).reduce(f64::min)
    }
}

/// Recurrence data: `E_j τ_rev = 2π n_j + θ` for every level.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RevivalData {
    pub tau_rev: f64,
    /// Common phase offset, in `(-π, π]`.
    pub theta: f64,
    pub n: Vec<i64>,
    /// Denominators `q_j` of the gap ratios `ΔE_j/ΔE_min = p_j/q_j`.
    pub gap_denominators: Vec<u64>,
    pub gap_numerators: Vec<u64>,
    pub delta_e_min: f64,
    /// `2π Π q_j / ΔE_min`, never smaller than `tau_rev`.
    pub product_formula_tau: f64,
    /// Largest `|E_j τ_rev − 2π n_j − θ|`.
    pub max_residual: f64,
}

impl RevivalData {
    /// Energy quantum `2π/τ_rev` of the recurrence lattice.
    pub fn energy_quantum(&self) -> f64 {
        2.0 * PI / self.tau_rev
    }
}

/// Continuous part of the spectrum, `e_min < e_max`; either end may be infinite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ContinuumBand {
    pub e_min: f64,
    pub e_max: f64,
    /// The band stands in for a dense discrete spectrum; timelines are then
    /// only trusted for `|τ| ≤ guard_fraction·τ_rev`.
    pub quasi_continuum: bool,
    pub guard_fraction: f64,
}

impl ContinuumBand {
    pub const DEFAULT_GUARD: f64 = 0.1;

    pub fn new(e_min: f64, e_max: f64) -> Result<Self> {
        if e_min.is_nan() || e_max.is_nan() || !(e_min < e_max) || e_min == f64::INFINITY || e_max == f64::NEG_INFINITY {
            return Err(Error::InvalidInput(format!("invalid band [{e_min}, {e_max}]")));
        }
        Ok(Self { e_min, e_max, quasi_continuum: false, guard_fraction: Self::DEFAULT_GUARD })
    }

    pub fn half_line(e_min: f64) -> Result<Self> {
        Self::new(e_min, f64::INFINITY)
    }

    pub fn whole_line() -> Self {
        Self { e_min: f64::NEG_INFINITY, e_max: f64::INFINITY, quasi_continuum: false, guard_fraction: Self::DEFAULT_GUARD }
    }

    pub fn quasi(mut self, guard_fraction: f64) -> Result<Self> {
        if !(guard_fraction > 0.0 && guard_fraction <= 0.5) {
            return Err(Error::InvalidInput(format!("guard fraction must lie in (0, 0.5], got {guard_fraction}")));
        }
        self.quasi_continuum = true;
        self.guard_fraction = guard_fraction;
        Ok(self)
    }

    pub fn contains(&self, e: f64) -> bool {
        e >= self.e_min && e <= self.e_max
    }
}

/// Mass and uniform force; `ħ = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalParams {
    pub mass: f64,
    pub force: f64,
}

impl PhysicalParams {
    pub fn new(mass: f64, force: f64) -> Result<Self> {
        if !(mass > 0.0 && mass.is_finite()) {
            return Err(Error::InvalidInput(format!("mass must be positive, got {mass}")));
        }
        if !force.is_finite() {
            return Err(Error::InvalidInput(format!("force must be finite, got {force}")));
        }
        Ok(Self { mass, force })
    }

    pub fn free(mass: f64) -> Result<Self> {
        Self::new(mass, 0.0)
    }

    /// `κ = (2m|F|)^{1/3}`.
    pub fn kappa(&self) -> f64 {
        (2.0 * self.mass * self.force.abs()).cbrt()
    }

    pub(crate) fn require_force(&self) -> Result<()> {
        if self.force == 0.0 {
            Err(Error::InvalidInput("uniform-force problem needs F != 0".into()))
        } else {
            Ok(())
        }
    }
}

/// Continuum systems with closed-form energy normalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SystemKind {
    FreeFall,
    Free1d,
    Free3dSpherical,
    Free3dUniversal,
}

/// Energy-normalization constant: `C_E` for free fall (independent of `E`),
/// otherwise `C_k` as a function of the wave number `k`.
pub fn energy_norm_constant(system: SystemKind, params: PhysicalParams, k_or_e: f64) -> Result<f64> {
    let m = params.mass;
    match system {
        SystemKind::FreeFall => {
            params.require_force()?;
            let kappa = params.kappa();
            Ok((kappa * kappa / params.force.abs()).sqrt())
        }
        SystemKind::Free1d => {
            if k_or_e == 0.0 {
                return Err(Error::EdgeDivergence);
            }
            Ok((m / (2.0 * PI * k_or_e.abs())).sqrt())
        }
        SystemKind::Free3dSpherical | SystemKind::Free3dUniversal => {
            if !(k_or_e > 0.0) {
                return Err(Error::InvalidInput(format!("wave number must be positive, got {k_or_e}")));
            }
            let c = (2.0 * m * k_or_e / PI).sqrt();
            Ok(if system == SystemKind::Free3dUniversal { c / (4.0 * PI) } else { c })
        }
    }
}

/// First `n_keep` levels.
pub fn truncate_accessible(spectrum: &DiscreteSpectrum, n_keep: usize) -> Result<DiscreteSpectrum> {
    if n_keep == 0 || n_keep > spectrum.len() {
        return Err(Error::InvalidInput(format!("n_keep must lie in 1..={}, got {n_keep}", spectrum.len())));
    }
    DiscreteSpectrum::new(spectrum.levels[..n_keep].to_vec(), spectrum.labels.as_ref().map(|l| l[..n_keep].to_vec()))
}
