//! Verification suites with a machine-readable report.

use std::f64::consts::{PI, SQRT_2};

use chronoline::spectra::{revival_time, ContinuumBand, DiscreteSpectrum, PhysicalParams, SpectralState};
use chronoline::systems::{free1d_directional_wave, free1d_parity_wave, free3d_radial_wave, free3d_universal_wave, freefall_wave, Direction, Parity};
use chronoline::timeline::{phasor_closure_sum, plancherel_residual, timeline_transform, TimeMesh};
use chronoline::timeop::{
    commutator_3d_check, commutator_periodic_term, freefall_commutator_expectation, kernel_1d_free, kernel_3d_free, kernel_3d_partial_wave,
    pv_integral_il, GaussianTestFunction,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::CliError;

/// One line of the verification report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub check: String,
    pub expected: Value,
    pub got: Value,
    pub residual: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Symmetries,
    Closure,
    Kernels,
    Commutators,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "symmetries" => Suite::Symmetries,
            "closure" => Suite::Closure,
            "kernels" => Suite::Kernels,
            "commutators" => Suite::Commutators,
            "all" => Suite::All,
            other => return Err(CliError::Usage(format!("unknown suite '{other}'"))),
        })
    }
}

fn complex(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

/// Builds checks against per-check default tolerances, or a single
/// user-supplied tolerance that replaces them all.
struct Report {
    tol: Option<f64>,
    checks: Vec<Check>,
}

impl Report {
    fn push(&mut self, check: &str, expected: Value, got: Value, residual: f64, default_tol: f64) {
        let tol = self.tol.unwrap_or(default_tol);
        self.checks.push(Check { check: check.to_string(), expected, got, residual, pass: residual <= tol });
    }

    fn push_complex(&mut self, check: &str, expected: Complex64, got: Complex64, default_tol: f64) {
        self.push(check, complex(expected), complex(got), (got - expected).norm(), default_tol);
    }

    fn push_max(&mut self, check: &str, worst: f64, default_tol: f64) {
        self.push(check, json!(0.0), json!(worst), worst, default_tol);
    }
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1e-300)
}

fn random_tau(rng: &mut ChaCha8Rng) -> f64 {
    let t = rng.random_range(0.01..2.0);
    if rng.random_bool(0.5) {
        t
    } else {
        -t
    }
}

fn symmetries(report: &mut Report) -> Result<(), CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = [0.0f64; 4];
    for _ in 0..100 {
        let x: f64 = rng.random_range(-3.0..3.0);
        let tau = random_tau(&mut rng);
        let m = rng.random_range(0.3..3.0);
        let ff = PhysicalParams::new(m, rng.random_range(0.2..2.0))?;
        worst[0] = worst[0].max(rel(freefall_wave(x, -tau, ff)?, freefall_wave(x, tau, ff)?.conj()));
        let right = free1d_directional_wave(Direction::Right, x, -tau, m)?;
        let left = free1d_directional_wave(Direction::Left, x, tau, m)?;
        worst[1] = worst[1].max(rel(right, left.conj()));
        for parity in [Parity::Even, Parity::Odd] {
            let b = free1d_parity_wave(parity, x, tau, m)?;
            let d = (free1d_parity_wave(parity, x, -tau, m)? - b.conj()).norm() / b.norm().max(1e-300);
            worst[2] = worst[2].max(d);
        }
        let l = rng.random_range(0..5u32);
        let r = x.abs().max(0.01);
        worst[3] = worst[3].max(rel(free3d_radial_wave(l, r, -tau, m)?, free3d_radial_wave(l, r, tau, m)?.conj()));
        worst[3] = worst[3].max(rel(free3d_universal_wave(x, tau, m)?, free3d_universal_wave(-x, -tau, m)?.conj()));
    }
    report.push_max("symmetry/freefall", worst[0], 1e-10);
    report.push_max("symmetry/free1d_directional", worst[1], 1e-10);
    report.push_max("symmetry/free1d_parity", worst[2], 1e-10);
    report.push_max("symmetry/free3d", worst[3], 1e-10);
    Ok(())
}

fn gaussian_packet(e0: f64, sigma: f64) -> SpectralState {
    let norm = (2.0 * PI * sigma * sigma).powf(-0.25);
    SpectralState::continuum(move |e: Complex64| norm * (-(e - e0) * (e - e0) / (4.0 * sigma * sigma)).exp())
}

fn closure(report: &mut Report) -> Result<(), CliError> {
    let spectra = [
        ("oscillator", DiscreteSpectrum::oscillator(8, 1.0, 0.5)?),
        ("square_well", DiscreteSpectrum::square_well(6, 1.0)?),
        ("hydrogen", DiscreteSpectrum::hydrogen(3)?),
    ];
    for (name, spec) in &spectra {
        let rev = revival_time(spec, 1000, 1e-9)?;
        let mesh = TimeMesh::closing(0.0, &rev)?;
        let points = mesh.len() as f64;
        let (mut off, mut diag) = (0.0f64, 0.0f64);
        for j in 0..spec.len() {
            for k in 0..spec.len() {
                let s = phasor_closure_sum(spec, &rev, &mesh, j, k)?;
                if j == k {
                    diag = diag.max((s - points).norm() / points);
                } else {
                    off = off.max(s.norm() / points);
                }
            }
        }
        report.push_max(&format!("closure/{name}/off_diagonal"), off, 1e-10);
        report.push_max(&format!("closure/{name}/diagonal"), diag, 1e-12);
    }

    let band = ContinuumBand::whole_line();
    let packet = gaussian_packet(2.0, 0.6);
    let r = plancherel_residual(&packet, None, Some(&band), 1e-10)?;
    report.push_max("closure/plancherel_gaussian", r, 1e-8);
    let grid: Vec<f64> = (0..31).map(|i| -3.0 + 0.25 * i as f64).collect();
    for t in [0.1, 1.0, 5.0] {
        let moved = timeline_transform(&packet.evolved(t), None, Some(&band), &grid, 1e-11)?;
        let shifted: Vec<f64> = grid.iter().map(|g| g - t).collect();
        let base = timeline_transform(&packet, None, Some(&band), &shifted, 1e-11)?;
        let dev = moved.values.iter().zip(&base.values).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        report.push_max(&format!("closure/covariance_t={t}"), dev, 1e-7);
    }
    Ok(())
}

fn non_collinear_pairs(rng: &mut ChaCha8Rng, count: usize) -> Vec<([f64; 3], [f64; 3])> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let a: [f64; 3] = std::array::from_fn(|_| rng.random_range(-2.0..2.0));
        let b: [f64; 3] = std::array::from_fn(|_| rng.random_range(-2.0..2.0));
        let dot = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
        let na = (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt();
        let nb = (b[0] * b[0] + b[1] * b[1] + b[2] * b[2]).sqrt();
        if (dot / (na * nb)).abs() < 0.95 && na.min(nb) / na.max(nb) < 0.95 {
            out.push((a, b));
        }
    }
    out
}

fn kernels(report: &mut Report) -> Result<(), CliError> {
    let k1 = kernel_1d_free(1.0, 0.5, 1.0).value;
    report.push_complex("kernel/line_spot", Complex64::new(0.0, 0.375), k1, 0.0);
    let k3 = kernel_3d_free([1.0, 0.0, 0.0], [0.5, 0.0, 0.0], 1.0)?.value;
    report.push_complex("kernel/space_spot", Complex64::new(0.0, 3.0 / (4.0 * PI)), k3, 1e-12);

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut herm = 0.0f64;
    for _ in 0..100 {
        let (x, y) = (rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0));
        herm = herm.max((kernel_1d_free(x, y, 1.0).value - kernel_1d_free(y, x, 1.0).value.conj()).norm());
        let a: [f64; 3] = std::array::from_fn(|_| rng.random_range(-2.0..2.0));
        let b: [f64; 3] = std::array::from_fn(|_| rng.random_range(-2.0..2.0));
        herm = herm.max((kernel_3d_free(a, b, 1.0)?.value - kernel_3d_free(b, a, 1.0)?.value.conj()).norm());
    }
    report.push_max("kernel/hermiticity", herm, 1e-14);

    let mut pw = 0.0f64;
    for (a, b) in non_collinear_pairs(&mut rng, 10) {
        let direct = kernel_3d_free(a, b, 1.0)?.value;
        let sum = kernel_3d_partial_wave(a, b, 1.0)?.value;
        pw = pw.max((direct - sum).norm() / direct.norm().max(1.0));
    }
    report.push_max("kernel/partial_wave_reconstruction", pw, 1e-8);

    let mut cases = Vec::new();
    for l in -1..=3 {
        for _ in 0..10 {
            cases.push((l, rng.random_range(0.2..3.0), rng.random_range(0.2..3.0)));
        }
    }
    let results: Vec<_> = cases.par_iter().map(|&(l, r1, r2)| pv_integral_il(l, r1, r2, 1.0, true)).collect::<Result<_, _>>()?;
    for l in -1..=3 {
        let mut worst = 0.0f64;
        for r in results.iter().filter(|r| r.l == l) {
            let numeric_converged = r.numeric.as_ref().is_some_and(|n| n.converged);
            let d = if numeric_converged { r.discrepancy().unwrap_or(f64::INFINITY) / r.closed_form.norm() } else { f64::INFINITY };
            worst = worst.max(d);
        }
        report.push_max(&format!("kernel/pv_integral_l={l}"), worst, 1e-4);
    }
    Ok(())
}

fn commutators(report: &mut Report) -> Result<(), CliError> {
    let spec = DiscreteSpectrum::oscillator(4, 1.0, 0.5)?;
    let rev = revival_time(&spec, 1000, 1e-9)?;
    let mut worst = 0.0f64;
    for j in 0..spec.len() {
        let stat = SpectralState::stationary(spec.levels(), j)?;
        worst = worst.max(commutator_periodic_term(&stat, &rev, 0.0)?.norm());
    }
    report.push_max("commutator/periodic_stationary", worst, 1e-12);

    let two = DiscreteSpectrum::from_levels(vec![0.0, 1.0])?;
    let trev = revival_time(&two, 1000, 1e-9)?;
    let h = Complex64::new(1.0 / SQRT_2, 0.0);
    let pair = SpectralState::discrete(two.levels(), vec![h, h])?;
    report.push_complex("commutator/periodic_node", Complex64::i(), commutator_periodic_term(&pair, &trev, PI)?, 1e-10);
    report.push_complex("commutator/periodic_antinode", -Complex64::i(), commutator_periodic_term(&pair, &trev, 0.0)?, 1e-10);

    let f = GaussianTestFunction::new([0.2, -0.1, 0.3], 0.8)?;
    let odd = GaussianTestFunction::dipole([0.2, -0.1, 0.3], 0.8, 1)?;
    report.push_complex("commutator/space_gaussian", Complex64::i(), commutator_3d_check(&f, &f, 1.0, 1e-6)?, 5e-3);
    report.push_complex("commutator/space_orthogonal", Complex64::new(0.0, 0.0), commutator_3d_check(&f, &odd, 1.0, 1e-6)?, 5e-3);

    let grid: Vec<f64> = (0..=4000).map(|i| -20.0 + 0.01 * i as f64).collect();
    let (k, w) = (0.7, 1.3);
    let n = (PI * w * w).powf(-0.25);
    let psi: Vec<Complex64> = grid.iter().map(|&x| Complex64::from_polar(n * (-x * x / (2.0 * w * w)).exp(), k * x)).collect();
    let ff = freefall_commutator_expectation(&grid, &psi, PhysicalParams::new(1.0, 2.0)?)?;
    report.push_complex("commutator/freefall", Complex64::i(), ff, 1e-6);
    Ok(())
}

/// Runs a suite. `tol` replaces every per-check tolerance when given.
pub fn cmd_verify(suite: Suite, tol: Option<f64>) -> Result<Vec<Check>, CliError> {
    let mut report = Report { tol, checks: Vec::new() };
    let all = suite == Suite::All;
    if all || suite == Suite::Symmetries {
        symmetries(&mut report)?;
    }
    if all || suite == Suite::Closure {
        closure(&mut report)?;
    }
    if all || suite == Suite::Kernels {
        kernels(&mut report)?;
    }
    if all || suite == Suite::Commutators {
        commutators(&mut report)?;
    }
    Ok(report.checks)
}
