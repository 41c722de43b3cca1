//! Spectral-to-time transform, discrete time meshes and the checks built on
//! them: phasor closure, Plancherel, covariance, weak orthogonality and POVM
//! moments.

mod transform;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::spectra::{DiscreteSpectrum, RevivalData};

pub use transform::{
    plancherel_residual, system_time_drift, timeline_transform, timeline_transform_with, weak_orthogonality_residual, TransformOptions,
};

/// Uniform mesh of `n·N` time points covering one recurrence cycle,
/// `τ_p = τ₀ + p Δτ` with `Δτ = τ_rev/(n·N)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeMesh {
    pub tau0: f64,
    pub tau_rev: f64,
    /// Number of accessible levels `N`.
    pub levels: usize,
    pub scale_n: usize,
    pub points: Vec<f64>,
    pub delta_tau: f64,
}

impl TimeMesh {
    pub fn new(tau0: f64, tau_rev: f64, levels: usize, scale_n: usize) -> Result<Self> {
        if !tau0.is_finite() || !(tau_rev > 0.0) || !tau_rev.is_finite() {
            return Err(Error::InvalidInput("mesh needs finite tau0 and positive tau_rev".into()));
        }
        if levels == 0 || scale_n == 0 {
            return Err(Error::InvalidInput("mesh needs at least one level and scale_n >= 1".into()));
        }
        let count = levels * scale_n;
        let delta_tau = tau_rev / count as f64;
        let points = (0..count).map(|p| tau0 + tau_rev * (p as f64 / count as f64)).collect();
        Ok(Self { tau0, tau_rev, levels, scale_n, points, delta_tau })
    }

    /// Mesh of `N` points for the given recurrence data.
    pub fn for_revival(tau0: f64, revival: &RevivalData, scale_n: usize) -> Result<Self> {
        Self::new(tau0, revival.tau_rev, revival.n.len(), scale_n)
    }

    /// Coarsest `n·N` mesh on which every off-diagonal phasor sum closes:
    /// the point count exceeds the spread of the winding numbers `n_j`.
    pub fn closing(tau0: f64, revival: &RevivalData) -> Result<Self> {
        let levels = revival.n.len();
        if levels == 0 {
            return Err(Error::InvalidInput("revival data has no levels".into()));
        }
        let span = winding_span(revival);
        let scale_n = (span as usize + 1).div_ceil(levels).max(1);
        Self::new(tau0, revival.tau_rev, levels, scale_n)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

pub(crate) fn winding_span(revival: &RevivalData) -> u64 {
    let lo = revival.n.iter().copied().min().unwrap_or(0);
    let hi = revival.n.iter().copied().max().unwrap_or(0);
    (hi - lo).unsigned_abs()
}

/// `Σ_p exp(i(E_j − E_k) p Δτ)` over the mesh.
pub fn phasor_closure_sum(spectrum: &DiscreteSpectrum, revival: &RevivalData, mesh: &TimeMesh, j: usize, k: usize) -> Result<Complex64> {
    let n = spectrum.len();
    if revival.n.len() != n || mesh.levels != n {
        return Err(Error::MeshMismatch(format!("{n} levels, revival has {}, mesh built for {}", revival.n.len(), mesh.levels)));
    }
    if (mesh.tau_rev - revival.tau_rev).abs() > 1e-12 * revival.tau_rev {
        return Err(Error::MeshMismatch(format!("mesh period {} differs from tau_rev {}", mesh.tau_rev, revival.tau_rev)));
    }
    if j >= n || k >= n {
        return Err(Error::InvalidInput(format!("level index out of range for {n} levels")));
    }
    let levels = spectrum.levels();
    let off = levels
        .iter()
        .zip(&revival.n)
        .map(|(e, &w)| (e * revival.tau_rev - 2.0 * std::f64::consts::PI * w as f64 - revival.theta).abs())
        .fold(0.0, f64::max);
    if off > 1e-6 {
        return Err(Error::MeshMismatch(format!("levels miss the recurrence lattice by {off:.3e} rad")));
    }
    let gap = levels[j] - levels[k];
    Ok((0..mesh.len()).map(|p| Complex64::from_polar(1.0, gap * (p as f64 * mesh.delta_tau))).sum())
}

/// Timeline wave `⟨τ|ψ⟩` sampled on a grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimelineSample {
    pub tau_grid: Vec<f64>,
    pub values: Vec<Complex64>,
    pub density: Vec<f64>,
}

impl TimelineSample {
    pub fn new(tau_grid: Vec<f64>, values: Vec<Complex64>) -> Result<Self> {
        if tau_grid.len() != values.len() {
            return Err(Error::InvalidInput(format!("{} values for {} grid points", values.len(), tau_grid.len())));
        }
        if tau_grid.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidInput("time grid must be strictly increasing".into()));
        }
        let density = values.iter().map(|v| v.norm_sqr()).collect();
        Ok(Self { tau_grid, values, density })
    }

    pub fn len(&self) -> usize {
        self.tau_grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tau_grid.is_empty()
    }

    /// CSV with header `tau,re,im,density`, twelve significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("tau,re,im,density\n");
        for ((t, v), d) in self.tau_grid.iter().zip(&self.values).zip(&self.density) {
            let _ = writeln!(out, "{t:.11e},{:.11e},{:.11e},{d:.11e}", v.re, v.im);
        }
        out
    }
}

/// First two moments of the time POVM on the stored grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PovmStats {
    pub tau_avg: f64,
    pub delta_tau: f64,
    pub norm: f64,
}

/// Average system time, its spread and the total weight of the density, by
/// the trapezoid rule on the sample grid.
pub fn povm_stats(sample: &TimelineSample) -> Result<PovmStats> {
    let t = &sample.tau_grid;
    let d = &sample.density;
    let trap = |g: &dyn Fn(usize) -> f64| -> f64 { t.windows(2).enumerate().map(|(i, w)| 0.5 * (w[1] - w[0]) * (g(i) + g(i + 1))).sum() };
    let norm = trap(&|i| d[i]);
    if !(norm > 0.0) || !norm.is_finite() {
        return Err(Error::ZeroNorm);
    }
    let tau_avg = trap(&|i| t[i] * d[i]) / norm;
    let var = trap(&|i| (t[i] - tau_avg).powi(2) * d[i]) / norm;
    Ok(PovmStats { tau_avg, delta_tau: var.max(0.0).sqrt(), norm })
}

/// Largest deviation of `U U†` from the identity.
pub fn unitarity_defect(unitary: &[Vec<Complex64>]) -> Result<f64> {
    let n = unitary.len();
    if n == 0 || unitary.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidInput("matrix must be square and non-empty".into()));
    }
    let mut worst: f64 = 0.0;
    for (i, ri) in unitary.iter().enumerate() {
        for (k, rk) in unitary.iter().enumerate() {
            let dot: Complex64 = ri.iter().zip(rk).map(|(a, b)| a * b.conj()).sum();
            let target = if i == k { 1.0 } else { 0.0 };
            worst = worst.max((dot - target).norm());
        }
    }
    Ok(worst)
}

/// `|τ^(r)⟩ = Σ_σ U_{rσ} |τ,σ⟩` for time states sampled on a common grid.
pub fn subspace_rotation(time_states: &[Vec<Complex64>], unitary: &[Vec<Complex64>]) -> Result<Vec<Vec<Complex64>>> {
    let defect = unitarity_defect(unitary)?;
    if defect > 1e-12 {
        return Err(Error::InvalidInput(format!("matrix is not unitary (defect {defect:.3e})")));
    }
    if time_states.len() != unitary.len() {
        return Err(Error::InvalidInput(format!("{} states for a {}x{} matrix", time_states.len(), unitary.len(), unitary.len())));
    }
    let width = time_states[0].len();
    if time_states.iter().any(|s| s.len() != width) {
        return Err(Error::InvalidInput("time states sampled on different grids".into()));
    }
    Ok(unitary
        .iter()
        .map(|row| (0..width).map(|p| row.iter().zip(time_states).map(|(u, s)| u * s[p]).sum()).collect())
        .collect())
}

/// `Σ_σ |τ,σ⟩⟨τ,σ|` as a matrix on the sample grid.
pub fn subspace_projector(time_states: &[Vec<Complex64>]) -> Vec<Vec<Complex64>> {
    let width = time_states.first().map_or(0, Vec::len);
    (0..width)
        .map(|p| (0..width).map(|q| time_states.iter().map(|s| s[p] * s[q].conj()).sum()).collect())
        .collect()
}
