use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_4, PI};

use super::gamma::{gamma, rgamma};
use crate::error::{Error, Result};
use crate::oscquad::rules::gl20;

/// Below this modulus the Kummer series is used.
pub(crate) const SERIES_LIMIT: f64 = 4.0;
/// At and above this modulus (right half-plane) the asymptotic expansion is used.
pub(crate) const ASYMPTOTIC_LIMIT: f64 = 10.0;

/// Relative cancellation above which a result is refused.
const CANCELLATION_LIMIT: f64 = 1e7;

/// Parabolic cylinder function `D_order(w)` for complex `w`.
///
/// Regimes (ν < 0):
/// - `|w| < 4`: Kummer-function Maclaurin expansion;
/// - `Re w ≥ 0`, `|w| ≥ 10`: large-argument expansion;
/// - `Re w ≥ 0`, `4 ≤ |w| < 10`: the integral
///   `D_ν(w) = e^{-w²/4}/Γ(-ν) ∫₀^∞ t^{-ν-1} e^{-t²/2 - wt} dt`, continued
///   along a circular arc by Taylor stepping when `|arg w| > π/4`;
/// - `Re w < 0`: connection formula to `D_ν(-w)` and `D_{-ν-1}(±iw)`.
///
/// Non-negative orders are reached by upward recurrence in the order.
pub fn parabolic_cylinder_d(order: f64, w: Complex64) -> Result<Complex64> {
    if !order.is_finite() || !w.re.is_finite() || !w.im.is_finite() {
        return Err(Error::InvalidInput("non-finite order or argument".into()));
    }
    let v = if order < 0.0 { negative_order(order, w)? } else { by_recurrence(order, w)? };
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::Range(format!("D_{order}({w}) overflows")))
    }
}

fn by_recurrence(order: f64, w: Complex64) -> Result<Complex64> {
    let steps = order.floor() as i64 + 2;
    let mut mu = order - steps as f64;
    let mut prev = negative_order(mu, w)?;
    let mut cur = negative_order(mu + 1.0, w)?;
    mu += 1.0;
    for _ in 1..steps {
        let next = w * cur - mu * prev;
        prev = cur;
        cur = next;
        mu += 1.0;
    }
    Ok(cur)
}

fn negative_order(nu: f64, w: Complex64) -> Result<Complex64> {
    let r = w.norm();
    if r < SERIES_LIMIT {
        return Ok(kummer_series(nu, w));
    }
    if w.re >= 0.0 {
        if r >= ASYMPTOTIC_LIMIT {
            return asymptotic(nu, w);
        }
        let arg = w.im.atan2(w.re);
        if arg.abs() <= FRAC_PI_4 {
            return Ok(integral(nu, w)?.0);
        }
        return arc_continuation(nu, w);
    }
    connection(nu, w)
}

/// `D_ν(w) = U(a,0) u₁ + U'(a,0) u₂` with `a = -ν - 1/2`.
pub(crate) fn kummer_series(nu: f64, w: Complex64) -> Complex64 {
    let a = -nu - 0.5;
    let sp = PI.sqrt();
    let u0 = sp * 2f64.powf(-(a / 2.0 + 0.25)) * rgamma(0.75 + a / 2.0);
    let du0 = -sp * 2f64.powf(-(a / 2.0 - 0.25)) * rgamma(0.25 + a / 2.0);
    let x = w * w / 2.0;
    let e = (-w * w / 4.0).exp();
    e * (u0 * kummer_m(a / 2.0 + 0.25, 0.5, x) + du0 * w * kummer_m(a / 2.0 + 0.75, 1.5, x))
}

fn kummer_m(alpha: f64, beta: f64, x: Complex64) -> Complex64 {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut k = 0.0;
    loop {
        term *= x * ((alpha + k) / ((beta + k) * (k + 1.0)));
        sum += term;
        k += 1.0;
        if (term.norm() <= 1e-17 * sum.norm() && k > x.norm()) || k > 400.0 {
            break;
        }
    }
    sum
}

pub(crate) fn asymptotic(nu: f64, w: Complex64) -> Result<Complex64> {
    let inv = 1.0 / (2.0 * w * w);
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut last = 1.0;
    let mut s = 0.0;
    loop {
        let next = -term * inv * ((-nu + 2.0 * s) * (-nu + 2.0 * s + 1.0) / (s + 1.0));
        let size = next.norm();
        if size > last || size < 1e-17 * sum.norm() {
            if size > last && last > 1e-13 * sum.norm() {
                return Err(Error::AccuracyLoss(format!("asymptotic series for D_{nu} stalls at |w| = {}", w.norm())));
            }
            break;
        }
        sum += next;
        term = next;
        last = size;
        s += 1.0;
    }
    let lw = w.ln();
    Ok((-w * w / 4.0 + nu * lw).exp() * sum)
}

/// Integral representation; returns the value and the cancellation ratio.
pub(crate) fn integral(nu: f64, w: Complex64) -> Result<(Complex64, f64)> {
    let s = -nu;
    let power = 2.0 * s - 1.0;
    let t_max = -w.re + (w.re * w.re + 100.0).sqrt();
    let u_max = t_max.sqrt();
    let panels = ((w.im.abs() * t_max / 2.0).ceil() as usize + 2 * u_max.ceil() as usize + 4).max(6);
    let (nodes, weights) = gl20();
    let h = u_max / panels as f64;
    let graded = power.fract() != 0.0 || power < 0.0;
    let mut total = Complex64::new(0.0, 0.0);
    let mut magnitude = 0.0;
    let add_panel = |a: f64, b: f64, total: &mut Complex64, magnitude: &mut f64| {
        let half = 0.5 * (b - a);
        for (x, wt) in nodes.iter().zip(weights) {
            let u = a + half * (x + 1.0);
            let t = u * u;
            let f = 2.0 * u.powf(power) * (-t * t / 2.0 - w * t).exp();
            *total += wt * half * f;
            *magnitude += wt * half * f.norm();
        }
    };
    for p in 0..panels {
        let a = p as f64 * h;
        let b = a + h;
        if p == 0 && graded {
            let mut hi = b;
            for _ in 0..30 {
                let lo = hi / 4.0;
                add_panel(lo, hi, &mut total, &mut magnitude);
                hi = lo;
            }
        } else {
            add_panel(a, b, &mut total, &mut magnitude);
        }
    }
    let ratio = magnitude / total.norm();
    if !(ratio < CANCELLATION_LIMIT) {
        return Err(Error::AccuracyLoss(format!("integral for D_{nu}({w}) cancels by {ratio:.1e}")));
    }
    Ok(((-w * w / 4.0).exp() * total / gamma(s), ratio))
}

/// Taylor stepping of `y'' = (w²/4 - ν - 1/2) y` along the arc `|w| = r`
/// from `arg = ±π/4`, where the function is the dominant solution.
fn arc_continuation(nu: f64, w: Complex64) -> Result<Complex64> {
    let r = w.norm();
    let target = w.im.atan2(w.re);
    let start = FRAC_PI_4 * target.signum();
    let w0 = Complex64::from_polar(r, start);
    let y0 = integral(nu, w0)?.0;
    let ym = integral(nu - 1.0, w0)?.0;
    let mut y = y0;
    let mut dy = -w0 / 2.0 * y0 + nu * ym;
    let steps = ((target - start).abs() * r / 0.4).ceil().max(1.0) as usize;
    let mut c = w0;
    for k in 1..=steps {
        let theta = start + (target - start) * k as f64 / steps as f64;
        let next = Complex64::from_polar(r, theta);
        let (ny, ndy) = taylor_step(nu, c, y, dy, next - c);
        y = ny;
        dy = ndy;
        c = next;
    }
    Ok(y)
}

fn taylor_step(nu: f64, c: Complex64, y: Complex64, dy: Complex64, h: Complex64) -> (Complex64, Complex64) {
    let q0 = c * c / 4.0 - nu - 0.5;
    let mut coef: Vec<Complex64> = vec![y, dy];
    let mut val = y + dy * h;
    let mut der = dy;
    let mut hp = h;
    let mut small = 0;
    for k in 0..200usize {
        let mut next = q0 * coef[k];
        if k >= 1 {
            next += c / 2.0 * coef[k - 1];
        }
        if k >= 2 {
            next += 0.25 * coef[k - 2];
        }
        next /= ((k + 2) * (k + 1)) as f64;
        coef.push(next);
        der += (k + 2) as f64 * next * hp;
        hp *= h;
        let t = next * hp;
        val += t;
        if t.norm() < 1e-18 * val.norm() {
            small += 1;
            if small > 3 {
                break;
            }
        } else {
            small = 0;
        }
    }
    (val, der)
}

fn connection(nu: f64, w: Complex64) -> Result<Complex64> {
    let sgn = if w.im <= 0.0 { -1.0 } else { 1.0 };
    let first = Complex64::from_polar(1.0, sgn * PI * nu) * negative_order(nu, -w)?;
    let rotated = Complex64::new(0.0, -sgn) * w;
    let inner = if -nu - 1.0 < 0.0 { negative_order(-nu - 1.0, rotated)? } else { by_recurrence(-nu - 1.0, rotated)? };
    let second = (2.0 * PI).sqrt() * rgamma(-nu) * Complex64::from_polar(1.0, sgn * PI * (nu + 1.0) / 2.0) * inner;
    let sum = first + second;
    let ratio = (first.norm() + second.norm()) / sum.norm();
    if !(ratio < CANCELLATION_LIMIT) {
        return Err(Error::AccuracyLoss(format!("connection formula for D_{nu}({w}) cancels by {ratio:.1e}")));
    }
    Ok(sum)
}
