use num_complex::Complex64;
use std::f64::consts::PI;

use super::adaptive::{integrate, integrate_half_line};
use super::tail::{tail_limit, TailOptions};
use super::{DampingKind, DampingPolicy, QuadOptions, QuadratureResult};
use crate::error::{Error, Result};

/// Tuning knobs for [`fourier_semiaxis_with`].
#[derive(Debug, Clone, Copy)]
pub struct FourierOptions {
    pub quad: QuadOptions,
    /// Maximum number of window rates in the Richardson table.
    pub window_levels: usize,
    /// Window centre E₀; defaults to the finite endpoint, or 0.
    pub window_origin: Option<f64>,
}

impl FourierOptions {
    pub fn new(tol: f64) -> Self {
        Self { quad: QuadOptions::new(tol), window_levels: 9, window_origin: None }
    }
}

/// `(2π)^{-1/2} ∫_{e_min}^{e_max} e^{iEτ} A(E) dE` with `e_min` possibly `-∞`
/// and `e_max` possibly `+∞`.
pub fn fourier_semiaxis<A>(amplitude: A, tau: f64, e_min: f64, e_max: f64, tol: f64, damping: DampingPolicy) -> Result<QuadratureResult>
where
    A: Fn(Complex64) -> Complex64,
{
    fourier_semiaxis_with(amplitude, tau, e_min, e_max, damping, &FourierOptions::new(tol))
}

pub fn fourier_semiaxis_with<A>(amplitude: A, tau: f64, e_min: f64, e_max: f64, damping: DampingPolicy, opts: &FourierOptions) -> Result<QuadratureResult>
where
    A: Fn(Complex64) -> Complex64,
{
    if !(e_min < e_max) || e_min == f64::INFINITY || e_max == f64::NEG_INFINITY || e_min.is_nan() || e_max.is_nan() {
        return Err(Error::InvalidInput(format!("invalid band [{e_min}, {e_max}]")));
    }
    if !(opts.quad.abs_tol > 0.0) || !tau.is_finite() {
        return Err(Error::InvalidInput("tolerance must be positive and tau finite".into()));
    }
    let norm = 1.0 / (2.0 * PI).sqrt();
    let kernel = |e: Complex64| (Complex64::i() * tau * e).exp() * amplitude(e);
    let piece = if tau != 0.0 { PI / tau.abs() } else { 1.0 };
    let finite_lo = e_min.is_finite();
    let finite_hi = e_max.is_finite();
    let q = opts.quad;

    if finite_lo && finite_hi {
        let n = (((e_max - e_min) / piece).ceil() as usize).clamp(1, 100_000);
        let r = integrate(|e| kernel(Complex64::new(e, 0.0)), e_min, e_max, n, &q);
        return Ok(r.scale(norm));
    }

    let origin = opts.window_origin.unwrap_or(if finite_lo { e_min } else if finite_hi { e_max } else { 0.0 });
    let result = match damping.kind {
        DampingKind::ContourRotation => {
            let angle = if tau == 0.0 { 0.0 } else { tau.signum() * damping.strength };
            let mut total = QuadratureResult::zero();
            let mut split_tol = q;
            split_tol.abs_tol *= 0.5;
            let up = Complex64::from_polar(1.0, angle);
            let down = -Complex64::from_polar(1.0, -angle);
            if !finite_hi {
                let start = if finite_lo { e_min } else { origin };
                total = total.add(ray(&kernel, start, up, piece, &split_tol));
            }
            if !finite_lo {
                let start = if finite_hi { e_max } else { origin };
                total = total.add(ray(&kernel, start, down, piece, &split_tol).scale(-1.0));
            }
            total
        }
        DampingKind::ExponentialWindow => window(&kernel, e_min, e_max, origin, piece, damping.strength, opts)?,
        DampingKind::None => {
            let mut total = QuadratureResult::zero();
            let mut half = q;
            half.abs_tol *= 0.5;
            let period = if tau != 0.0 { Some(2.0 * PI / tau.abs()) } else { None };
            let tail = |start: f64, sgn: f64| -> QuadratureResult {
                let f = |s: f64| kernel(Complex64::new(start + sgn * s, 0.0));
                match period {
                    Some(p) => {
                        let t = TailOptions { quad: half, period: Some(p), start_length: 4.0 * p, max_doublings: 24 };
                        tail_limit(f, 0.0, &t)
                    }
                    None => integrate_half_line(f, 0.0, 1.0, 1.0, 1.0, &half),
                }
            };
            if !finite_hi {
                total = total.add(tail(if finite_lo { e_min } else { origin }, 1.0));
            }
            if !finite_lo {
                total = total.add(tail(if finite_hi { e_max } else { origin }, -1.0));
            }
            total
        }
    };
    Ok(result.scale(norm))
}

/// `∫_0^∞ k(start + s·dir) dir ds` along a straight ray.
fn ray<K: Fn(Complex64) -> Complex64>(kernel: &K, start: f64, dir: Complex64, piece: f64, opts: &QuadOptions) -> QuadratureResult {
    let scale = piece.max(1.0);
    integrate_half_line(|s| kernel(start + s * dir) * dir, 0.0, 1.0, scale, piece, opts)
}

fn window<K: Fn(Complex64) -> Complex64>(kernel: &K, e_min: f64, e_max: f64, origin: f64, piece: f64, rate: f64, opts: &FourierOptions) -> Result<QuadratureResult> {
    let mut level_opts = opts.quad;
    level_opts.abs_tol *= 0.05;
    let mut table: Vec<Vec<Complex64>> = Vec::new();
    let mut quad_err = 0.0;
    let mut panels = 0;
    let mut truncation: f64 = 0.0;
    let mut last_diff = f64::INFINITY;
    let mut best = Complex64::new(0.0, 0.0);
    let mut converged = false;
    for j in 0..opts.window_levels.max(2) {
        let eps = rate * 0.5f64.powi(j as i32);
        let mut level = QuadratureResult::zero();
        let scale = piece.max(1.0).min(1.0 / eps);
        if e_max > origin {
            let f = |s: f64| kernel(Complex64::new(origin + s, 0.0)) * (-eps * s).exp();
            let r = if e_max.is_finite() {
                integrate(f, 0.0, e_max - origin, (((e_max - origin) / piece).ceil() as usize).clamp(1, 100_000), &level_opts)
            } else {
                integrate_half_line(f, 0.0, 1.0, scale, piece, &level_opts)
            };
            level = level.add(r);
        }
        if e_min < origin {
            let f = |s: f64| kernel(Complex64::new(origin - s, 0.0)) * (-eps * s).exp();
            let r = if e_min.is_finite() {
                integrate(f, 0.0, origin - e_min, (((origin - e_min) / piece).ceil() as usize).clamp(1, 100_000), &level_opts)
            } else {
                integrate_half_line(f, 0.0, 1.0, scale, piece, &level_opts)
            };
            level = level.add(r);
        }
        if !level.converged && j >= 2 {
            break;
        }
        quad_err = level.abs_error_estimate.max(quad_err);
        panels += level.panels_used;
        truncation = truncation.max(level.truncation.unwrap_or(0.0));
        let mut row = vec![level.value];
        for k in 1..=j {
            let f = 2f64.powi(k as i32);
            let prev = table[j - 1][k - 1];
            let v = row[k - 1] + (row[k - 1] - prev) / (f - 1.0);
            row.push(v);
        }
        let diag = row[j];
        if j >= 1 {
            let diff = (diag - table[j - 1][j - 1]).norm();
            if diff < last_diff {
                last_diff = diff;
                best = diag;
            }
        } else {
            best = diag;
        }
        table.push(row);
        if j >= 2 && last_diff + quad_err <= opts.quad.abs_tol {
            converged = true;
            break;
        }
    }
    Ok(QuadratureResult {
        value: best,
        abs_error_estimate: last_diff + quad_err,
        panels_used: panels,
        converged,
        truncation: Some(truncation),
    })
}
