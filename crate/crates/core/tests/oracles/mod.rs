//! Independent numerical oracles used only by tests. Each one avoids the
//! algorithm it checks.
#![allow(dead_code)]

use num_complex::Complex64;
use std::f64::consts::PI;

/// Tanh-sinh quadrature of a real function on [a, b].
pub fn tanh_sinh(f: impl Fn(f64) -> f64, a: f64, b: f64, h: f64) -> f64 {
    let c = 0.5 * (b - a);
    let m = 0.5 * (b + a);
    let mut sum = 0.0;
    let n = (4.0 / h).ceil() as i64;
    for k in -n..=n {
        let t = k as f64 * h;
        let u = 0.5 * PI * t.sinh();
        let x = u.tanh();
        let w = 0.5 * PI * t.cosh() / u.cosh().powi(2);
        let xi = m + c * x;
        if xi <= a || xi >= b {
            continue;
        }
        sum += w * f(xi);
    }
    sum * c * h
}

/// Bessel J_ν(x) for ν > -1/2 from Poisson's integral
/// `(x/2)^ν / (√π Γ(ν+1/2)) ∫₀^π cos(x cos θ) sin^{2ν} θ dθ`.
pub fn bessel_poisson(nu: f64, x: f64, gamma_nu_half: f64) -> f64 {
    let h = 1.0 / (64.0 + 8.0 * x);
    let integral = tanh_sinh(|t| (x * t.cos()).cos() * t.sin().powf(2.0 * nu), 0.0, PI, h);
    (x / 2.0).powf(nu) / (PI.sqrt() * gamma_nu_half) * integral
}

/// Airy Ai by high-order Taylor integration of y'' = x y from the origin.
pub fn airy_taylor(x: f64) -> f64 {
    let ai0 = 0.355_028_053_887_817_2;
    let dai0 = -0.258_819_403_792_806_8;
    let steps = (x.abs() / 0.05).ceil().max(1.0) as usize;
    let h = x / steps as f64;
    let (mut y, mut dy, mut c) = (ai0, dai0, 0.0f64);
    for _ in 0..steps {
        let mut a = vec![y, dy, 0.0];
        a[2] = c * y / 2.0;
        for k in 3..40 {
            let v = (c * a[k - 2] + a[k - 3]) / (k as f64 * (k as f64 - 1.0));
            a.push(v);
        }
        let (mut ny, mut ndy, mut hp) = (0.0, 0.0, 1.0);
        for (k, ak) in a.iter().enumerate() {
            ny += ak * hp;
            if k + 1 < a.len() {
                ndy += (k as f64 + 1.0) * a[k + 1] * hp;
            }
            hp *= h;
        }
        y = ny;
        dy = ndy;
        c += h;
    }
    y
}

/// D_ν(w) for ν < 0 from the Laplace-type integral after `t = e^y`, summed
/// by the trapezoid rule (exponentially convergent for this integrand).
pub fn pcfd_log_trapezoid(nu: f64, w: Complex64, gamma_minus_nu: f64) -> Complex64 {
    let s = -nu;
    let h = 0.01;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut y = -60.0 / s;
    while y < 4.0 {
        let t = y.exp();
        sum += (s * y - t * t / 2.0 - w * t).exp();
        y += h;
    }
    (-w * w / 4.0).exp() * sum * h / gamma_minus_nu
}

/// Gauss–Legendre nodes on [-1, 1] from the Golub–Welsch-free Newton scheme
/// with an asymptotic initial guess (independent of the library's cached rule).
pub fn legendre_rule(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 1..=n {
        let mut x = (PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..60 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

pub fn rel_err(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1e-300)
}
