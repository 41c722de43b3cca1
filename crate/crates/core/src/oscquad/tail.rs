use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::adaptive::integrate;
use super::{QuadOptions, QuadratureResult};
use crate::error::{Error, Result};

/// Controls for [`tail_limit`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailOptions {
    pub quad: QuadOptions,
    /// Oscillation period of the integrand, if known; partial integrals are
    /// period-averaged before extrapolation.
    pub period: Option<f64>,
    /// Length of the first truncation; later truncations double it.
    pub start_length: f64,
    pub max_doublings: usize,
}

impl TailOptions {
    pub fn new(tol: f64) -> Self {
        Self { quad: QuadOptions::new(tol), period: None, start_length: 8.0, max_doublings: 24 }
    }
}

/// `lim_{U→∞} ∫_start^U f` from truncations `U_k = start + L·2^k`, each
/// averaged twice over one period and accelerated by the Wynn epsilon
/// algorithm.
pub fn tail_limit<F: Fn(f64) -> Complex64>(f: F, start: f64, opts: &TailOptions) -> QuadratureResult {
    let tol = opts.quad.abs_tol;
    let period = opts.period.filter(|p| p.is_finite() && *p > 0.0);
    let mut length = opts.start_length.max(f64::MIN_POSITIVE);
    if let Some(p) = period {
        length = (length / p).ceil().max(1.0) * p;
    }
    let piece = period.map(|p| 0.5 * p).unwrap_or(length);
    let mut inner = opts.quad;
    inner.abs_tol *= 0.01;

    let mut partial = QuadratureResult::zero();
    let mut lo = start;
    let mut hi = start + length;
    let mut averaged: Vec<Complex64> = Vec::new();
    let mut estimates: Vec<Complex64> = Vec::new();
    let mut quad_err: f64 = 0.0;
    let mut panels = 0usize;
    let mut error = f64::INFINITY;
    let mut converged = false;

    for _ in 0..=opts.max_doublings {
        let pieces = (((hi - lo) / piece).ceil() as usize).clamp(1, 100_000);
        let r = integrate(&f, lo, hi, pieces, &inner);
        partial = partial.add(r);
        panels += r.panels_used;
        let mut value = partial.value;
        if let Some(p) = period {
            let weight = |s: f64| if s <= p { 1.0 - s * s / (2.0 * p * p) } else { (2.0 * p - s).powi(2) / (2.0 * p * p) };
            let w = integrate(|t| f(t) * weight(t - hi), hi, hi + 2.0 * p, 4, &inner);
            panels += w.panels_used;
            quad_err = quad_err.max(w.abs_error_estimate);
            value += w.value;
        }
        quad_err = quad_err.max(partial.abs_error_estimate);
        averaged.push(value);
        estimates.push(wynn_epsilon(&averaged));
        let n = estimates.len();
        if n >= 3 {
            let d1 = (estimates[n - 1] - estimates[n - 2]).norm();
            let d2 = (estimates[n - 2] - estimates[n - 3]).norm();
            error = d1.max(d2) + quad_err;
            if n >= 4 && error <= tol {
                converged = true;
                break;
            }
        }
        lo = hi;
        hi = start + 2.0 * (hi - start);
    }
    QuadratureResult {
        value: *estimates.last().unwrap_or(&Complex64::new(0.0, 0.0)),
        abs_error_estimate: error,
        panels_used: panels,
        converged,
        truncation: Some(hi),
    }
}

/// Highest even column of the Wynn epsilon table, last entry.
pub(crate) fn wynn_epsilon(seq: &[Complex64]) -> Complex64 {
    let n = seq.len();
    if n == 0 {
        return Complex64::new(0.0, 0.0);
    }
    let mut prev = vec![Complex64::new(0.0, 0.0); n + 1];
    let mut cur = seq.to_vec();
    let mut best = seq[n - 1];
    let mut odd = false;
    while cur.len() >= 2 {
        let mut next = Vec::with_capacity(cur.len() - 1);
        for i in 0..cur.len() - 1 {
            let diff = cur[i + 1] - cur[i];
            if diff.norm() <= 1e-15 * cur[i + 1].norm().max(1e-300) {
                return if odd { best } else { cur[i + 1] };
            }
            next.push(prev[i + 1] + diff.inv());
        }
        prev = cur;
        cur = next;
        odd = !odd;
        if !odd {
            let last = cur[cur.len() - 1];
            if !last.is_finite() {
                break;
            }
            best = last;
        }
    }
    best
}

/// Controls for [`pv_time_moment_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PvOptions {
    pub quad: QuadOptions,
    /// Split point between the inner `|τ| < split` and outer regions.
    pub split: f64,
    /// Oscillation period of the inner integrand in `u = 1/τ`, if known.
    pub inner_period: Option<f64>,
    /// Oscillation period of the integrand at large `|τ|`, if known.
    pub outer_period: Option<f64>,
}

impl PvOptions {
    pub fn new(tol: f64) -> Self {
        Self { quad: QuadOptions::new(tol), split: 1.0, inner_period: None, outer_period: None }
    }
}

/// Symmetric principal value `lim_{T→∞} ∫_{-T}^{T} τ^p w(τ) dτ`.
pub fn pv_time_moment<W: Fn(f64) -> Complex64>(wave_product: W, power: u32, tol: f64) -> Result<QuadratureResult> {
    pv_time_moment_with(wave_product, power, &PvOptions::new(tol))
}

pub fn pv_time_moment_with<W: Fn(f64) -> Complex64>(wave_product: W, power: u32, opts: &PvOptions) -> Result<QuadratureResult> {
    if !(opts.quad.abs_tol > 0.0) || !(opts.split > 0.0) {
        return Err(Error::InvalidInput("tolerance and split must be positive".into()));
    }
    let sign = if power.is_multiple_of(2) { 1.0 } else { -1.0 };
    let folded = |t: f64| t.powi(power as i32) * (wave_product(t) + sign * wave_product(-t));
    let mut half = opts.quad;
    half.abs_tol *= 0.5;

    // |τ| ≥ split.
    let u_max = 1.0 / opts.split;
    let outer_period = opts.outer_period.or_else(|| local_period(&folded, 256.0 * opts.split));
    let outer_tail = TailOptions {
        quad: half,
        period: outer_period,
        start_length: outer_period.map(|p| 4.0 * p).unwrap_or(8.0 * opts.split),
        max_doublings: 30,
    };
    let outer = tail_limit(folded, opts.split, &outer_tail);

    // 0 < τ < split, mapped to u = 1/τ on [1/split, ∞).
    let mapped = |u: f64| folded(1.0 / u) / (u * u);
    let period = opts.inner_period.or_else(|| local_period(&mapped, 256.0 * u_max));
    let tail = TailOptions { quad: half, period, start_length: period.map(|p| 4.0 * p).unwrap_or(8.0 * u_max), max_doublings: 30 };
    let inner = tail_limit(mapped, u_max, &tail);
    Ok(outer.add(inner))
}

/// Dominant local period of `h` near `u`, from `ω² ≈ -h''/h` at the largest
/// of a few nearby samples.
fn local_period<H: Fn(f64) -> Complex64>(h: &H, u: f64) -> Option<f64> {
    let base = u.abs().max(1.0);
    let probe = (0..8).map(|i| u + 0.05 * base * i as f64).max_by(|a, b| h(*a).norm().total_cmp(&h(*b).norm()))?;
    let centre = h(probe);
    if !(centre.norm() > 0.0) {
        return None;
    }
    let mut delta = 1e-3 * base;
    let mut omega = 0.0;
    for _ in 0..4 {
        let second = (h(probe + delta) - 2.0 * centre + h(probe - delta)) / (delta * delta);
        let w2 = -(second / centre).re;
        if !(w2 > 0.0) || !w2.is_finite() {
            return None;
        }
        omega = w2.sqrt();
        if omega * delta <= 0.02 {
            break;
        }
        delta = 0.01 / omega;
    }
    if omega * base > 1e-3 {
        Some(2.0 * std::f64::consts::PI / omega)
    } else {
        None
    }
}

/// Outcome of a distributional closure check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeltaProbe {
    pub integral: QuadratureResult,
    pub expected: Complex64,
    pub residual: f64,
}

/// Integration ranges for [`delta_family_probe`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaOptions {
    pub quad: QuadOptions,
    /// Finite window carrying the test function.
    pub x_range: (f64, f64),
    /// Parameter range; either end may be infinite.
    pub param_range: (f64, f64),
    /// Oscillation period of the smeared kernel in the parameter, if known.
    pub param_period: Option<f64>,
}

/// `∫∫ K(p, x) φ(x) dx dp` compared against `φ(x₀)`.
pub fn delta_family_probe<K, T>(kernel_family: K, test_fn: T, x0: f64, opts: &DeltaOptions) -> Result<DeltaProbe>
where
    K: Fn(f64, f64) -> Complex64,
    T: Fn(f64) -> Complex64,
{
    let (xa, xb) = opts.x_range;
    let (pa, pb) = opts.param_range;
    if !(xa < xb) || !xa.is_finite() || !xb.is_finite() || !(pa < pb) || pa.is_nan() || pb.is_nan() {
        return Err(Error::InvalidInput("invalid probe ranges".into()));
    }
    let mut inner_opts = opts.quad;
    inner_opts.abs_tol *= 0.01;
    let smeared = |p: f64| integrate(|x| kernel_family(p, x) * test_fn(x), xa, xb, 16, &inner_opts).value;
    let mut outer_opts = opts.quad;
    outer_opts.abs_tol *= 0.5;
    let tail_opts = TailOptions {
        quad: outer_opts,
        period: opts.param_period,
        start_length: opts.param_period.map(|p| 4.0 * p).unwrap_or(8.0),
        max_doublings: 24,
    };
    let origin = if pa.is_finite() { pa } else if pb.is_finite() { pb } else { 0.0 };
    let mut total = QuadratureResult::zero();
    if pa.is_finite() && pb.is_finite() {
        total = integrate(smeared, pa, pb, 16, &outer_opts);
    } else {
        if pb == f64::INFINITY {
            total = total.add(tail_limit(|s| smeared(origin + s), 0.0, &tail_opts));
        } else if pb > origin {
            total = total.add(integrate(smeared, origin, pb, 16, &outer_opts));
        }
        if pa == f64::NEG_INFINITY {
            total = total.add(tail_limit(|s| smeared(origin - s), 0.0, &tail_opts));
        } else if pa < origin {
            total = total.add(integrate(smeared, pa, origin, 16, &outer_opts));
        }
    }
    let expected = test_fn(x0);
    Ok(DeltaProbe { integral: total, expected, residual: (total.value - expected).norm() })
}
