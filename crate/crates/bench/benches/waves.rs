use std::f64::consts::PI;
use std::hint::black_box;

use chronoline::spectra::{revival_time, ContinuumBand, DiscreteSpectrum, PhysicalParams, SpectralState};
use chronoline::systems::{defining_integral, WaveKind};
use chronoline::timeline::{phasor_closure_sum, timeline_transform, TimeMesh};
use criterion::{criterion_group, criterion_main, Criterion};
use num_complex::Complex64;

fn figure_grids(c: &mut Criterion) {
    let params = PhysicalParams::free(1.0).unwrap();
    let grid: Vec<f64> = (0..801).map(|i| -1.0 + 2.0 * i as f64 / 800.0).collect();
    for kind in [WaveKind::Free1dRight, WaveKind::Free3dUniversal] {
        c.bench_function(&format!("{} on 801 points", kind.name()), |b| {
            b.iter(|| grid.iter().map(|&x| kind.evaluate(x, black_box(-0.005), params).unwrap()).sum::<Complex64>())
        });
    }
}

fn oracles(c: &mut Criterion) {
    let mut group = c.benchmark_group("defining integral");
    group.sample_size(10);
    let params = PhysicalParams::free(1.0).unwrap();
    for kind in [WaveKind::Free1dRight, WaveKind::Free3dRadial(2), WaveKind::Free3dUniversal] {
        group.bench_function(kind.name(), |b| b.iter(|| defining_integral(kind, black_box(0.7), black_box(0.4), params, 1e-9).unwrap()));
    }
    group.finish();
}

fn timelines(c: &mut Criterion) {
    let spec = DiscreteSpectrum::hydrogen(3).unwrap();
    let rev = revival_time(&spec, 1000, 1e-9).unwrap();
    let mesh = TimeMesh::closing(0.0, &rev).unwrap();
    c.bench_function("phasor closure, hydrogen closing mesh", |b| b.iter(|| phasor_closure_sum(&spec, &rev, &mesh, black_box(0), black_box(1)).unwrap()));

    let sigma: f64 = 0.6;
    let norm = (2.0 * PI * sigma * sigma).powf(-0.25);
    let packet = SpectralState::continuum(move |e: Complex64| norm * (-(e - 2.0) * (e - 2.0) / (4.0 * sigma * sigma)).exp());
    let band = ContinuumBand::whole_line();
    let grid: Vec<f64> = (0..31).map(|i| -3.0 + 0.2 * i as f64).collect();
    let mut group = c.benchmark_group("timeline transform");
    group.sample_size(10);
    group.bench_function("gaussian packet, 31 points", |b| b.iter(|| timeline_transform(&packet, None, Some(&band), black_box(&grid), 1e-10).unwrap()));
    group.finish();
}

criterion_group!(benches, figure_grids, oracles, timelines);
criterion_main!(benches);
