use num_complex::Complex64;
use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::rules::{GK21_GAUSS, GK21_KRONROD, GK21_NODES};
use super::{QuadOptions, QuadratureResult};

#[derive(Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error).then_with(|| other.a.total_cmp(&self.a))
    }
}

/// One 21-point Gauss–Kronrod panel with the QUADPACK error heuristic.
pub(crate) fn gk21<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> (Complex64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * GK21_KRONROD[10];
    let mut gauss = Complex64::new(0.0, 0.0);
    let mut abs_sum = fc.norm() * GK21_KRONROD[10];
    let mut vals = [(Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)); 10];
    for i in 0..10 {
        let dx = h * GK21_NODES[i];
        let f1 = f(c - dx);
        let f2 = f(c + dx);
        vals[i] = (f1, f2);
        kron += (f1 + f2) * GK21_KRONROD[i];
        abs_sum += (f1.norm() + f2.norm()) * GK21_KRONROD[i];
        if i % 2 == 1 {
            gauss += (f1 + f2) * GK21_GAUSS[i / 2];
        }
    }
    let mean = kron * 0.5;
    let mut asc = GK21_KRONROD[10] * (fc - mean).norm();
    for i in 0..10 {
        asc += GK21_KRONROD[i] * ((vals[i].0 - mean).norm() + (vals[i].1 - mean).norm());
    }
    let value = kron * h;
    let asc = asc * h.abs();
    let abs_sum = abs_sum * h.abs();
    let mut err = ((kron - gauss) * h).norm();
    if asc > 0.0 && err > 0.0 {
        err = asc * (200.0 * err / asc).powf(1.5).min(1.0);
    }
    let floor = 50.0 * f64::EPSILON * abs_sum;
    if floor > err {
        err = floor;
    }
    if !(value.re.is_finite() && value.im.is_finite()) {
        return (value, f64::INFINITY);
    }
    (value, err)
}

/// Globally adaptive Gauss–Kronrod integration of a complex-valued function
/// over `[a, b]`, starting from `initial_panels` equal pieces.
pub fn integrate<F: Fn(f64) -> Complex64>(f: F, a: f64, b: f64, initial_panels: usize, opts: &QuadOptions) -> QuadratureResult {
    let n0 = initial_panels.max(1);
    let mut heap = BinaryHeap::with_capacity(2 * n0);
    let mut total = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let h = (b - a) / n0 as f64;
    for i in 0..n0 {
        let pa = a + i as f64 * h;
        let pb = if i + 1 == n0 { b } else { pa + h };
        let (v, e) = gk21(&f, pa, pb);
        total += v;
        err += e;
        heap.push(Panel { a: pa, b: pb, value: v, error: e });
    }
    let mut evaluations = 21 * n0;
    let target = |t: Complex64| opts.abs_tol.max(opts.rel_tol * t.norm());
    while err > target(total) && evaluations + 42 <= opts.max_evaluations {
        let worst = match heap.pop() {
            Some(p) => p,
            None => break,
        };
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            heap.push(worst);
            break;
        }
        let (v1, e1) = gk21(&f, worst.a, mid);
        let (v2, e2) = gk21(&f, mid, worst.b);
        evaluations += 42;
        total += v1 + v2 - worst.value;
        err += e1 + e2 - worst.error;
        heap.push(Panel { a: worst.a, b: mid, value: v1, error: e1 });
        heap.push(Panel { a: mid, b: worst.b, value: v2, error: e2 });
    }
    let mut panels: Vec<Panel> = heap.into_vec();
    panels.sort_by(|p, q| p.a.total_cmp(&q.a));
    let value = panels.iter().fold(Complex64::new(0.0, 0.0), |s, p| s + p.value);
    let error: f64 = panels.iter().map(|p| p.error).sum();
    QuadratureResult {
        value,
        abs_error_estimate: error,
        panels_used: panels.len(),
        converged: error <= target(value) && error.is_finite(),
        truncation: None,
    }
}

/// `∫_a^∞ f` (or `∫_{-∞}^a f` when `direction < 0`) by adaptive integration
/// over geometrically growing blocks, stopping once two consecutive blocks
/// are negligible.
pub fn integrate_half_line<F: Fn(f64) -> Complex64>(f: F, a: f64, direction: f64, scale: f64, piece: f64, opts: &QuadOptions) -> QuadratureResult {
    let dir = direction.signum();
    let mut total = QuadratureResult::zero();
    let mut lo = 0.0;
    let mut len = scale;
    let mut quiet = 0;
    let mut used = 0usize;
    let block_opts = QuadOptions { abs_tol: opts.abs_tol * 0.1, ..*opts };
    for _ in 0..200 {
        let hi = lo + len;
        let pieces = ((len / piece).ceil() as usize).clamp(1, 100_000);
        let remaining = opts.max_evaluations.saturating_sub(used);
        let bo = QuadOptions { max_evaluations: remaining, ..block_opts };
        let r = integrate(|s| f(a + dir * s), lo, hi, pieces, &bo);
        used += 21 * r.panels_used;
        let block = r.value;
        total.value += block;
        total.abs_error_estimate += r.abs_error_estimate;
        total.panels_used += r.panels_used;
        if !r.converged {
            total.converged = false;
        }
        let edge = (0..8).map(|i| f(a + dir * (hi - len * 0.02 * i as f64)).norm()).fold(0.0, f64::max);
        let limit = 0.05 * opts.abs_tol.max(opts.rel_tol * total.value.norm());
        let small = block.norm() + r.abs_error_estimate <= limit && edge * len <= limit;
        quiet = if small { quiet + 1 } else { 0 };
        lo = hi;
        len *= 2.0;
        if quiet >= 2 || used >= opts.max_evaluations {
            break;
        }
    }
    total.truncation = Some(lo);
    if quiet < 2 {
        total.converged = false;
    }
    total
}
