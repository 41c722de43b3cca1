use chronoline::oscquad::{
    delta_family_probe, fourier_semiaxis, integrate, integrate_half_line, pv_time_moment, tail_limit, DampingPolicy, DeltaOptions, QuadOptions,
    TailOptions,
};
use chronoline::specfun::airy_ai;
use num_complex::Complex64;
use std::f64::consts::PI;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn inv_sqrt_2pi() -> f64 {
    1.0 / (2.0 * PI).sqrt()
}

#[test]
fn exponential_amplitude_matches_antiderivative() {
    for &tau in &[-3.0, -0.4, 0.0, 0.7, 2.5] {
        let exact = inv_sqrt_2pi() / c(1.0, -tau);
        for damping in [DampingPolicy::default(), DampingPolicy::exponential_window(0.5).unwrap(), DampingPolicy::none()] {
            let r = fourier_semiaxis(|e| (-e).exp(), tau, 0.0, f64::INFINITY, 1e-10, damping).unwrap();
            assert!((r.value - exact).norm() < 1e-9, "tau={tau} {damping:?}: {} vs {exact}", r.value);
            assert!(r.converged);
        }
    }
}

#[test]
fn constant_on_unit_interval() {
    let r = fourier_semiaxis(|_| c(1.0, 0.0), 0.0, 0.0, 1.0, 1e-12, DampingPolicy::default()).unwrap();
    assert!((r.value - c(inv_sqrt_2pi(), 0.0)).norm() < 1e-14);
    let tau = 3.0;
    let r = fourier_semiaxis(|_| c(1.0, 0.0), tau, 0.0, 1.0, 1e-12, DampingPolicy::default()).unwrap();
    let exact = inv_sqrt_2pi() * (c(0.0, tau).exp() - 1.0) / c(0.0, tau);
    assert!((r.value - exact).norm() < 1e-13);
}

#[test]
fn algebraic_amplitude_independent_of_damping() {
    let amp = |e: Complex64| 1.0 / ((1.0 + e) * (1.0 + e));
    let tau = 1.3;
    let a = fourier_semiaxis(amp, tau, 0.0, f64::INFINITY, 1e-9, DampingPolicy::default()).unwrap();
    let b = fourier_semiaxis(amp, tau, 0.0, f64::INFINITY, 1e-9, DampingPolicy::contour_rotation(0.3).unwrap()).unwrap();
    let w = fourier_semiaxis(amp, tau, 0.0, f64::INFINITY, 1e-9, DampingPolicy::exponential_window(0.5).unwrap()).unwrap();
    let n = fourier_semiaxis(amp, tau, 0.0, f64::INFINITY, 1e-9, DampingPolicy::none()).unwrap();
    for other in [b.value, w.value, n.value] {
        assert!((a.value - other).norm() < 1e-8, "{} vs {}", a.value, other);
    }
}

#[test]
fn both_limits_infinite_gaussian() {
    // (2π)^{-1/2} ∫ e^{iEτ} e^{-E²/2} dE = e^{-τ²/2}
    for &tau in &[0.0f64, 0.8, -1.7] {
        let exact = (-tau * tau / 2.0).exp();
        for damping in [DampingPolicy::exponential_window(0.5).unwrap(), DampingPolicy::none()] {
            let r = fourier_semiaxis(|e| (-e * e / 2.0).exp(), tau, f64::NEG_INFINITY, f64::INFINITY, 1e-10, damping).unwrap();
            assert!((r.value - exact).norm() < 1e-9, "tau={tau} {damping:?}: {}", r.value);
        }
    }
}

#[test]
fn linearity() {
    let f = |e: Complex64| (-e).exp();
    let g = |e: Complex64| (-2.0 * e).exp() * e;
    let (a, b) = (c(0.3, -1.2), c(2.0, 0.5));
    let tau = 0.9;
    let d = DampingPolicy::default();
    let lhs = fourier_semiaxis(|e| a * f(e) + b * g(e), tau, 0.0, f64::INFINITY, 1e-11, d).unwrap();
    let rf = fourier_semiaxis(f, tau, 0.0, f64::INFINITY, 1e-11, d).unwrap();
    let rg = fourier_semiaxis(g, tau, 0.0, f64::INFINITY, 1e-11, d).unwrap();
    assert!((lhs.value - (a * rf.value + b * rg.value)).norm() < 1e-10);
}

#[test]
fn error_estimates_are_honest() {
    // ∫_0^∞ e^{iEτ} E^n e^{-aE} dE = n! / (a - iτ)^{n+1}
    let mut cases = 0;
    for &a in &[0.5, 1.0, 2.0, 4.0] {
        for &(n, tau) in &[(0, 0.3), (1, -2.0), (2, 1.0), (3, 5.0), (4, -0.1)] {
            let fact: f64 = (1..=n).map(|k| k as f64).product();
            let exact = inv_sqrt_2pi() * fact / c(a, -tau).powi(n + 1);
            let tol = 1e-8;
            let r = fourier_semiaxis(move |e| e.powi(n) * (-a * e).exp(), tau, 0.0, f64::INFINITY, tol, DampingPolicy::default()).unwrap();
            let err = (r.value - exact).norm();
            assert!(err <= r.abs_error_estimate.max(tol), "a={a} n={n} tau={tau}: err {err} est {}", r.abs_error_estimate);
            cases += 1;
        }
    }
    assert_eq!(cases, 20);
}

#[test]
fn invalid_inputs_rejected() {
    assert!(fourier_semiaxis(|_| c(1.0, 0.0), 0.0, 1.0, 0.0, 1e-8, DampingPolicy::default()).is_err());
    assert!(fourier_semiaxis(|_| c(1.0, 0.0), 0.0, 0.0, 1.0, 0.0, DampingPolicy::default()).is_err());
    assert!(DampingPolicy::contour_rotation(2.0).is_err());
    assert!(DampingPolicy::exponential_window(-1.0).is_err());
}

/// `Ai(-κ(x + E/F))` energy amplitude of the uniform-force problem with `m = F = 1`.
fn uniform_force_amplitude(x: f64) -> impl Fn(Complex64) -> Complex64 {
    let kappa = 2f64.cbrt();
    move |e: Complex64| {
        let arg = -kappa * (x + e.re);
        if arg > 100.0 {
            c(0.0, 0.0)
        } else {
            c(kappa * airy_ai(arg).unwrap(), 0.0)
        }
    }
}

#[test]
fn uniform_force_wave_through_windowed_transform() {
    let (x, tau) = (0.5, 0.3);
    let closed = inv_sqrt_2pi() * c(0.0, x * tau - tau * tau * tau / 6.0).exp();
    assert!((closed - c(0.39473, 0.05784)).norm() < 1e-5);
    let r = fourier_semiaxis(
        uniform_force_amplitude(x),
        -tau,
        f64::NEG_INFINITY,
        f64::INFINITY,
        1e-7,
        DampingPolicy::exponential_window(0.2).unwrap(),
    )
    .unwrap();
    assert!((r.value - closed).norm() < 1e-6, "{} vs {closed}", r.value);
}

#[test]
fn tail_limit_of_oscillatory_algebraic_tail() {
    // ∫_1^∞ e^{it}/t dt = -Ci(1) - i Si(1) + iπ/2
    let ci1 = 0.337_403_922_900_968_1;
    let si1 = 0.946_083_070_367_183;
    let exact = c(-ci1, PI / 2.0 - si1);
    let mut opts = TailOptions::new(1e-10);
    opts.period = Some(2.0 * PI);
    let r = tail_limit(|t| c(0.0, t).exp() / t, 1.0, &opts);
    assert!((r.value - exact).norm() < 1e-9, "{} vs {exact}", r.value);
    assert!(r.converged);
}

#[test]
fn tail_limit_of_slow_algebraic_decay() {
    // ∫_1^∞ t^{-3/2} dt = 2
    let r = tail_limit(|t| c(t.powf(-1.5), 0.0), 1.0, &TailOptions::new(1e-10));
    assert!((r.value - 2.0).norm() < 1e-8, "{}", r.value);
}

#[test]
fn pv_moments_of_shifted_gaussian() {
    let w = |t: f64| c((-(t - 1.0) * (t - 1.0)).exp(), 0.0);
    let m0 = pv_time_moment(w, 0, 1e-11).unwrap();
    let m1 = pv_time_moment(w, 1, 1e-11).unwrap();
    let m2 = pv_time_moment(w, 2, 1e-11).unwrap();
    let sp = PI.sqrt();
    assert!((m0.value - sp).norm() < 1e-10);
    assert!((m1.value - sp).norm() < 1e-10);
    assert!((m2.value - 1.5 * sp).norm() < 1e-10);
}

#[test]
fn pv_of_odd_integrand_vanishes() {
    let w = |t: f64| c(t * (-t * t).exp(), t.sin() / (1.0 + t * t));
    let r = pv_time_moment(w, 0, 1e-12).unwrap();
    assert!(r.value.norm() < 1e-14);
    let even = |t: f64| c((-t * t).exp(), 0.0);
    let r = pv_time_moment(even, 3, 1e-12).unwrap();
    assert!(r.value.norm() < 1e-14);
}

#[test]
fn pv_of_slowly_decaying_oscillation() {
    // PV ∫ τ e^{iτ}/(τ²+1) dτ = iπ/e
    let w = |t: f64| c(0.0, t).exp() / (t * t + 1.0);
    let r = pv_time_moment(w, 1, 1e-9).unwrap();
    assert!((r.value - c(0.0, PI / 1f64.exp())).norm() < 1e-8, "{}", r.value);
}

#[test]
fn plane_wave_delta_sequence() {
    // ∫_{-∞}^{∞} dk ∫ e^{ikx}/(2π) φ(x) dx = φ(0)
    let phi = |x: f64| c((-x * x).exp(), 0.0);
    let opts = DeltaOptions {
        quad: QuadOptions::new(1e-9),
        x_range: (-8.0, 8.0),
        param_range: (f64::NEG_INFINITY, f64::INFINITY),
        param_period: None,
    };
    let probe = delta_family_probe(|k, x| c(0.0, k * x).exp() / (2.0 * PI), phi, 0.0, &opts).unwrap();
    assert!(probe.residual < 1e-8, "{:?}", probe);
}

#[test]
fn finite_interval_integration() {
    let r = integrate(|x| c(x.sqrt(), 0.0), 0.0, 1.0, 1, &QuadOptions::new(1e-13));
    assert!((r.value.re - 2.0 / 3.0).abs() < 1e-12);
}

#[test]
fn half_line_in_either_direction() {
    let opts = QuadOptions::new(1e-13);
    let f = |x: f64| Complex64::new((-(x - 0.3) * (x - 0.3)).exp(), 0.0);
    let up = integrate_half_line(f, 0.3, 1.0, 1.0, 1.0, &opts);
    let down = integrate_half_line(f, 0.3, -1.0, 1.0, 1.0, &opts);
    let half = 0.5 * std::f64::consts::PI.sqrt();
    assert!((up.value.re - half).abs() < 1e-12);
    assert!((down.value.re - half).abs() < 1e-12, "{}", down.value);
}
