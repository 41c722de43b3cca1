use std::f64::consts::PI;

use super::bessel::bessel_j_real;
use super::gamma::gamma;
use crate::error::{Error, Result};
use crate::oscquad::rules::gl20;

/// Upper end of the supported range; Ai underflows beyond it.
pub const AIRY_MAX: f64 = 100.0;
/// Lower end of the supported range.
pub const AIRY_MIN: f64 = -1.0e5;

const SERIES_LOW: f64 = -3.0;
const SERIES_HIGH: f64 = 2.0;

/// Airy function Ai(x).
///
/// Maclaurin series on [-3, 2]; the Laplace-type integral
/// `Ai(x) = e^{-ζ}/π ∫₀^∞ exp(-√x t²) cos(t³/3) dt` above; and
/// `Ai(-x) = (√x/3)[J_{1/3}(ζ) + J_{-1/3}(ζ)]` below, with ζ = (2/3)|x|^{3/2}.
pub fn airy_ai(x: f64) -> Result<f64> {
    if !x.is_finite() || !(AIRY_MIN..=AIRY_MAX).contains(&x) {
        return Err(Error::Range(format!("airy_ai supports [{AIRY_MIN}, {AIRY_MAX}], got {x}")));
    }
    if x < SERIES_LOW {
        let y = -x;
        let zeta = 2.0 / 3.0 * y.powf(1.5);
        let a = bessel_j_real(1.0 / 3.0, zeta)?;
        let b = bessel_j_real(-1.0 / 3.0, zeta)?;
        Ok(y.sqrt() / 3.0 * (a + b))
    } else if x <= SERIES_HIGH {
        Ok(maclaurin(x))
    } else {
        Ok(laplace_integral(x))
    }
}

pub(crate) fn maclaurin(x: f64) -> f64 {
    let c1 = 3f64.powf(-2.0 / 3.0) / gamma(2.0 / 3.0);
    let c2 = 3f64.powf(-1.0 / 3.0) / gamma(1.0 / 3.0);
    let x3 = x * x * x;
    let mut f = 1.0;
    let mut g = x;
    let mut tf = 1.0;
    let mut tg = x;
    let mut k = 1.0;
    loop {
        tf *= x3 / ((3.0 * k - 1.0) * (3.0 * k));
        tg *= x3 / ((3.0 * k) * (3.0 * k + 1.0));
        f += tf;
        g += tg;
        if tf.abs() < 1e-18 * f.abs().max(1e-300) && tg.abs() < 1e-18 * g.abs().max(1e-300) {
            break;
        }
        k += 1.0;
        if k > 200.0 {
            break;
        }
    }
    c1 * f - c2 * g
}

pub(crate) fn laplace_integral(x: f64) -> f64 {
    let sx = x.sqrt();
    let zeta = 2.0 / 3.0 * x * sx;
    let upper = (42.0 / sx).sqrt();
    let panels = ((upper.powi(3) / 3.0 / 2.0).ceil() as usize).max(4);
    let (nodes, weights) = gl20();
    let h = upper / panels as f64;
    let mut sum = 0.0;
    for p in 0..panels {
        let a = p as f64 * h;
        for (t, w) in nodes.iter().zip(weights) {
            let s = a + 0.5 * h * (t + 1.0);
            sum += w * (-sx * s * s).exp() * (s * s * s / 3.0).cos();
        }
    }
    sum * 0.5 * h * (-zeta).exp() / PI
}
