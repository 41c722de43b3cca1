use num_complex::Complex64;
use std::f64::consts::PI;

use super::branch::BranchedArgument;
use super::gamma::{gamma, rgamma};
use crate::error::{Error, Result};

/// Largest modulus handled by the ascending series.
pub(crate) const SERIES_LIMIT: f64 = 12.0;
/// Smallest modulus handled by the Hankel expansion (raised to 2ν² for large orders).
pub(crate) const HANKEL_LIMIT: f64 = 25.0;

/// Bessel function of the first kind `J_order(z)` on the principal sheet.
///
/// Arguments in the left half-plane are mapped to the right one with
/// `J_ν(e^{±iπ} w) = e^{±iπν} J_ν(w)`, so the rotation identity holds by
/// construction.
pub fn bessel_j(order: f64, arg: BranchedArgument) -> Result<Complex64> {
    if !order.is_finite() || order <= -1.0 {
        return Err(Error::InvalidInput(format!("Bessel order must exceed -1, got {order}")));
    }
    if arg.modulus == 0.0 {
        return if order == 0.0 {
            Ok(Complex64::new(1.0, 0.0))
        } else if order > 0.0 {
            Ok(Complex64::new(0.0, 0.0))
        } else {
            Err(Error::Range(format!("J_{order}(0) is unbounded")))
        };
    }
    if arg.argument.abs() > PI / 2.0 {
        let s = arg.argument.signum();
        let inner = BranchedArgument { modulus: arg.modulus, argument: arg.argument - s * PI };
        return Ok(Complex64::from_polar(1.0, s * PI * order) * bessel_j(order, inner)?);
    }
    let z = arg.to_complex();
    let r = arg.modulus;
    let value = if r <= SERIES_LIMIT {
        ascending_series(order, arg)
    } else if r > HANKEL_LIMIT.max(2.0 * order * order) {
        hankel(order, z)
    } else {
        miller(order, z)
    };
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(Error::Range(format!("J_{order} overflowed at |z| = {r}")))
    }
}

/// Convenience wrapper for real positive arguments.
pub fn bessel_j_real(order: f64, x: f64) -> Result<f64> {
    if x < 0.0 {
        return Err(Error::InvalidInput("use bessel_j for negative arguments".into()));
    }
    Ok(bessel_j(order, BranchedArgument::real(x)?)?.re)
}

pub(crate) fn ascending_series(order: f64, arg: BranchedArgument) -> Complex64 {
    let z = arg.to_complex();
    let q = -z * z / 4.0;
    let mut term = Complex64::new(rgamma(order + 1.0), 0.0);
    let mut sum = term;
    let mut k = 1.0;
    loop {
        term *= q / (k * (order + k));
        sum += term;
        if term.norm() <= 1e-17 * sum.norm() && k > 2.0 {
            break;
        }
        k += 1.0;
        if k > 500.0 {
            break;
        }
    }
    let half = BranchedArgument { modulus: arg.modulus / 2.0, argument: arg.argument };
    half.powf(order) * sum
}

pub(crate) fn hankel(order: f64, z: Complex64) -> Complex64 {
    let mu = 4.0 * order * order;
    let mut p = Complex64::new(1.0, 0.0);
    let mut q = Complex64::new(0.0, 0.0);
    let mut a = 1.0;
    let mut zk = Complex64::new(1.0, 0.0);
    let mut last = f64::INFINITY;
    for k in 1..200 {
        let kf = k as f64;
        a *= (mu - (2.0 * kf - 1.0).powi(2)) / (8.0 * kf);
        zk *= z;
        let t = a / zk;
        let size = t.norm();
        if size > last {
            break;
        }
        last = size;
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += sign * t;
        } else {
            q += sign * t;
        }
        if size < 1e-17 {
            break;
        }
    }
    let omega = z - order * PI / 2.0 - PI / 4.0;
    (2.0 / (PI * z)).sqrt() * (p * omega.cos() - q * omega.sin())
}

/// Backward recurrence normalized by the Neumann series
/// `(z/2)^ν₀ = Σ_k c_k J_{ν₀+2k}(z)`.
pub(crate) fn miller(order: f64, z: Complex64) -> Complex64 {
    let (nu0, target) = if order < 0.0 {
        (order, 0usize)
    } else {
        let f = order.floor();
        (order - f, f as usize)
    };
    let r = z.norm();
    let mut top = (r + 25.0 + 6.0 * r.cbrt()) as usize + target + 10;
    if top % 2 == 1 {
        top += 1;
    }
    let mut coeff = Vec::with_capacity(top / 2 + 1);
    coeff.push(gamma(nu0 + 1.0));
    let mut g = gamma(nu0 + 1.0);
    for k in 1..=top / 2 {
        if k > 1 {
            g *= (nu0 + k as f64 - 1.0) / k as f64;
        }
        coeff.push((nu0 + 2.0 * k as f64) * g);
    }
    let mut upper = Complex64::new(0.0, 0.0);
    let mut cur = Complex64::new(1e-20, 0.0);
    let mut sum = Complex64::new(coeff[top / 2] * 1e-20, 0.0);
    let mut kept = if target == top { cur } else { Complex64::new(0.0, 0.0) };
    for n in (1..=top).rev() {
        let lower = 2.0 * (nu0 + n as f64) / z * cur - upper;
        upper = cur;
        cur = lower;
        let idx = n - 1;
        if idx % 2 == 0 {
            sum += coeff[idx / 2] * cur;
        }
        if idx == target {
            kept = cur;
        }
        if cur.norm() > 1e150 {
            cur *= 1e-150;
            upper *= 1e-150;
            sum *= 1e-150;
            kept *= 1e-150;
        }
    }
    let half = BranchedArgument::from_complex(z / 2.0);
    kept * half.powf(nu0) / sum
}
