use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

use super::{TimeMesh, TimelineSample};
use crate::error::{Error, Result};
use crate::oscquad::{fourier_semiaxis_with, integrate, DampingKind, DampingPolicy, FourierOptions, QuadOptions};
use crate::spectra::{ContinuumBand, RevivalData, SpectralState};

/// Controls for [`timeline_transform_with`].
#[derive(Debug, Clone, Copy)]
pub struct TransformOptions {
    /// Absolute tolerance per grid point.
    pub tol: f64,
    /// Treatment of infinite continuum bands; the default assumes an
    /// absolutely integrable amplitude and applies no damping.
    pub damping: DampingPolicy,
}

impl TransformOptions {
    pub fn new(tol: f64) -> Self {
        Self { tol, damping: DampingPolicy::none() }
    }
}

/// `⟨τ|ψ⟩ = τ_rev^{-1/2} Σ_j e^{iE_jτ}⟨E_j|ψ⟩ + (2π)^{-1/2} ∫ e^{iEτ}⟨E|ψ⟩ dE`
/// on every point of `tau_grid`.
pub fn timeline_transform(
    state: &SpectralState,
    revival: Option<&RevivalData>,
    band: Option<&ContinuumBand>,
    tau_grid: &[f64],
    tol: f64,
) -> Result<TimelineSample> {
    timeline_transform_with(state, revival, band, tau_grid, &TransformOptions::new(tol))
}

pub fn timeline_transform_with(
    state: &SpectralState,
    revival: Option<&RevivalData>,
    band: Option<&ContinuumBand>,
    tau_grid: &[f64],
    opts: &TransformOptions,
) -> Result<TimelineSample> {
    check_inputs(state, revival, band, opts.tol)?;
    if let (Some(b), Some(r)) = (band, revival) {
        if b.quasi_continuum && state.continuum_amplitude().is_some() {
            let limit = b.guard_fraction * r.tau_rev;
            if let Some(t) = tau_grid.iter().find(|t| t.abs() > limit) {
                return Err(Error::Range(format!("tau = {t} beyond the quasi-continuum guard {limit}")));
            }
        }
    }
    let clipped = clip_band(state, band, opts);
    let values = tau_grid
        .par_iter()
        .map(|&t| Ok(discrete_value(state, revival, t) + continuum_value(state, clipped.as_ref(), t, opts)?))
        .collect::<Result<Vec<_>>>()?;
    TimelineSample::new(tau_grid.to_vec(), values)
}

fn check_inputs(state: &SpectralState, revival: Option<&RevivalData>, band: Option<&ContinuumBand>, tol: f64) -> Result<()> {
    if !(tol > 0.0) {
        return Err(Error::InvalidInput("tolerance must be positive".into()));
    }
    if !state.levels().is_empty() {
        match revival {
            None => return Err(Error::InvalidInput("discrete levels need recurrence data".into())),
            Some(r) if r.n.len() != state.levels().len() => {
                return Err(Error::MeshMismatch(format!("{} levels, recurrence data for {}", state.levels().len(), r.n.len())))
            }
            _ => {}
        }
    }
    if state.continuum_amplitude().is_some() {
        match band {
            None => return Err(Error::InvalidInput("continuum amplitude needs a band".into())),
            Some(b) if b.quasi_continuum && revival.is_none() => {
                return Err(Error::InvalidInput("a quasi-continuum band needs recurrence data".into()))
            }
            _ => {}
        }
    }
    Ok(())
}

fn discrete_value(state: &SpectralState, revival: Option<&RevivalData>, tau: f64) -> Complex64 {
    match revival {
        Some(r) if !state.levels().is_empty() => {
            let sum: Complex64 = state.levels().iter().zip(state.discrete_amplitudes()).map(|(e, a)| a * Complex64::from_polar(1.0, e * tau)).sum();
            sum / r.tau_rev.sqrt()
        }
        _ => Complex64::new(0.0, 0.0),
    }
}

fn continuum_value(state: &SpectralState, band: Option<&ContinuumBand>, tau: f64, opts: &TransformOptions) -> Result<Complex64> {
    let (Some(amp), Some(b)) = (state.continuum_amplitude(), band) else {
        return Ok(Complex64::new(0.0, 0.0));
    };
    let r = fourier_semiaxis_with(|e| amp(e), tau, b.e_min, b.e_max, opts.damping, &FourierOptions::new(opts.tol))?;
    if !r.converged {
        return Err(Error::NotConverged(format!("timeline transform at tau = {tau}, error estimate {:.3e}", r.abs_error_estimate)));
    }
    Ok(r.value)
}

/// Widest energy support that replaces an infinite band by a finite one.
const MAX_CLIPPED_WIDTH: f64 = 1e4;

/// Infinite bands are cut to the amplitude's numerical support when no
/// damping is requested and that support is narrow.
fn clip_band(state: &SpectralState, band: Option<&ContinuumBand>, opts: &TransformOptions) -> Option<ContinuumBand> {
    let b = *band?;
    if b.e_min.is_finite() && b.e_max.is_finite() || opts.damping.kind != DampingKind::None {
        return Some(b);
    }
    match energy_support(state, &b) {
        Some(s) if s.hi - s.lo <= MAX_CLIPPED_WIDTH => Some(ContinuumBand { e_min: s.lo, e_max: s.hi, ..b }),
        _ => Some(b),
    }
}

/// Energy interval outside which the amplitude is below `1e-17` of its peak,
/// clipped to the band, with the peak position and the phase slope there.
struct EnergySupport {
    lo: f64,
    hi: f64,
    centre_time: f64,
}

fn energy_support(state: &SpectralState, band: &ContinuumBand) -> Option<EnergySupport> {
    let amp = state.continuum_amplitude()?;
    let a = |e: f64| amp(Complex64::new(e, 0.0));
    let mut cand: Vec<f64> = if band.e_min.is_finite() && band.e_max.is_finite() {
        (0..=4000).map(|i| band.e_min + (band.e_max - band.e_min) * i as f64 / 4000.0).collect()
    } else {
        let origin = if band.e_min.is_finite() {
            band.e_min
        } else if band.e_max.is_finite() {
            band.e_max
        } else {
            0.0
        };
        (-2000..=2000).map(|i| origin + 1e-3 * (i as f64 * 0.02).sinh()).filter(|e| band.contains(*e)).collect()
    };
    cand.dedup();
    let mags: Vec<f64> = cand.iter().map(|&e| a(e).norm()).collect();
    let (ipk, peak) = mags.iter().copied().enumerate().max_by(|x, y| x.1.total_cmp(&y.1))?;
    if !(peak > 0.0) || !peak.is_finite() {
        return None;
    }
    let thr = 1e-17 * peak;
    let first = mags.iter().position(|&m| m >= thr)?;
    let last = mags.iter().rposition(|&m| m >= thr)?;
    let lo = if first == 0 { band.e_min.max(cand[0]) } else { cand[first - 1] };
    let hi = if last + 1 == cand.len() { band.e_max.min(cand[last]) } else { cand[last + 1] };
    let e0 = cand[ipk];
    let delta = 1e-5 * (hi - lo);
    let (l, r) = ((e0 - delta).max(lo), (e0 + delta).min(hi));
    let slope = if r > l { (a(r) / a(l)).arg() / (r - l) } else { 0.0 };
    Some(EnergySupport { lo, hi, centre_time: -slope })
}

/// Continuum timeline on a uniform grid fine enough that trapezoid sums of
/// `|⟨τ|ψ⟩|²` and of `e^{-iEτ}⟨τ|ψ⟩` are exact up to truncation.
struct ContinuumGrid {
    step: f64,
    taus: Vec<f64>,
    values: Vec<Complex64>,
    support: (f64, f64),
}

const MAX_SIDE_POINTS: usize = 1 << 16;

fn continuum_grid(state: &SpectralState, band: &ContinuumBand, tol: f64) -> Result<Option<ContinuumGrid>> {
    let Some(sup) = energy_support(state, band) else {
        return Ok(None);
    };
    let amp = state.continuum_amplitude().expect("support implies amplitude");
    let width = sup.hi - sup.lo;
    if !(width > 0.0) || !width.is_finite() {
        return Err(Error::Unsupported("continuum amplitude has no finite energy support".into()));
    }
    let step = PI / width;
    let point_tol = (1e-3 * tol).max(1e-15);
    let eval = |t: f64| -> Result<Complex64> {
        let r = fourier_semiaxis_with(|e| amp(e), t, sup.lo, sup.hi, DampingPolicy::none(), &FourierOptions::new(point_tol))?;
        if !r.converged {
            return Err(Error::NotConverged(format!("timeline transform at tau = {t}")));
        }
        Ok(r.value)
    };
    let centre = sup.centre_time;
    let quiet = |t: f64, v: Complex64| v.norm_sqr() * (t - centre).abs().max(step) < 1e-3 * tol;
    let mut sides: [Vec<(f64, Complex64)>; 2] = [Vec::new(), Vec::new()];
    for (s, sign) in [(0usize, 1.0), (1, -1.0)] {
        let mut p = s;
        loop {
            let chunk: Vec<f64> = (p..p + 64).map(|i| centre + sign * i as f64 * step).collect();
            let vals = chunk.par_iter().map(|&t| eval(t).map(|v| (t, v))).collect::<Result<Vec<_>>>()?;
            sides[s].extend(vals);
            p += 64;
            let tail = &sides[s][sides[s].len() - 32..];
            if sides[s].len() >= 64 && tail.iter().all(|(t, v)| quiet(*t, *v)) {
                break;
            }
            if sides[s].len() >= MAX_SIDE_POINTS {
                return Err(Error::NotConverged("timeline wave decays too slowly for the time grid".into()));
            }
        }
    }
    let [right, left] = sides;
    let (taus, values) = left.into_iter().rev().chain(right).unzip();
    Ok(Some(ContinuumGrid { step, taus, values, support: (sup.lo, sup.hi) }))
}

/// `|Σ|⟨E_j|ψ⟩|² + ∫|⟨E|ψ⟩|² dE − ∫|⟨τ|ψ⟩|² dτ|`, the time integral taken
/// over one recurrence cycle for the discrete part and over the whole line
/// for the continuum part.
pub fn plancherel_residual(state: &SpectralState, revival: Option<&RevivalData>, band: Option<&ContinuumBand>, tol: f64) -> Result<f64> {
    check_inputs(state, revival, band, tol)?;
    let energy_side = state.norm_sqr(band, 1e-2 * tol)?;
    let mut time_side = 0.0;
    if let Some(r) = revival.filter(|_| !state.levels().is_empty()) {
        let mesh = TimeMesh::closing(0.0, r)?;
        let sum: f64 = mesh.points.iter().map(|&t| discrete_value(state, revival, t).norm_sqr()).sum();
        time_side += sum * mesh.delta_tau;
    }
    if let Some(b) = band {
        if let Some(grid) = continuum_grid(state, b, tol)? {
            time_side += grid.step * grid.values.iter().map(|v| v.norm_sqr()).sum::<f64>();
        }
    }
    Ok((energy_side - time_side).abs())
}

/// `|⟨τ|ψ⟩ − ∫⟨τ|τ′⟩⟨τ′|ψ⟩ dτ′|` at one system time. The discrete part uses
/// the overlap kernel `τ_rev^{-1} Σ_j e^{iE_j(τ−τ′)}` over one cycle; the
/// continuum part recovers `⟨E|ψ⟩` from the timeline by a time-domain
/// Fourier sum and transforms back.
pub fn weak_orthogonality_residual(
    state: &SpectralState,
    revival: Option<&RevivalData>,
    band: Option<&ContinuumBand>,
    tau: f64,
    tol: f64,
) -> Result<f64> {
    check_inputs(state, revival, band, tol)?;
    let opts = TransformOptions::new(1e-2 * tol);
    let lhs = discrete_value(state, revival, tau) + continuum_value(state, clip_band(state, band, &opts).as_ref(), tau, &opts)?;
    let mut rhs = Complex64::new(0.0, 0.0);
    if let Some(r) = revival.filter(|_| !state.levels().is_empty()) {
        let mesh = TimeMesh::closing(0.0, r)?;
        let overlap = |s: f64| state.levels().iter().map(|e| Complex64::from_polar(1.0, e * s)).sum::<Complex64>() / r.tau_rev;
        let sum: Complex64 = mesh.points.iter().map(|&t| overlap(tau - t) * discrete_value(state, revival, t)).sum();
        rhs += sum * mesh.delta_tau;
    }
    if let Some(b) = band {
        if let Some(grid) = continuum_grid(state, b, tol)? {
            let norm = 1.0 / (2.0 * PI).sqrt();
            let recovered = |e: f64| -> Complex64 {
                let s: Complex64 = grid.taus.iter().zip(&grid.values).map(|(t, v)| v * Complex64::from_polar(1.0, -e * t)).sum();
                s * grid.step * norm
            };
            let (lo, hi) = grid.support;
            let pieces = ((hi - lo) * (tau.abs().max(1.0) + grid.taus.len() as f64 * grid.step) / PI).ceil() as usize;
            let r = integrate(|e| Complex64::from_polar(norm, e * tau) * recovered(e), lo, hi, pieces.clamp(1, 10_000), &QuadOptions::new(1e-2 * tol));
            if !r.converged {
                return Err(Error::NotConverged(format!("energy integral at tau = {tau}, error estimate {:.3e}", r.abs_error_estimate)));
            }
            rhs += r.value;
        }
    }
    Ok((lhs - rhs).norm())
}

/// `d τ_avg/dt = 1 − τ_rev |⟨τ₀ − t|ψ(0)⟩|²`, the departure of the average
/// system time from tracking laboratory time.
pub fn system_time_drift(
    state: &SpectralState,
    revival: &RevivalData,
    band: Option<&ContinuumBand>,
    tau0: f64,
    t: f64,
    tol: f64,
) -> Result<f64> {
    let sample = timeline_transform(state, Some(revival), band, &[tau0 - t], tol)?;
    Ok(1.0 - revival.tau_rev * sample.density[0])
}
