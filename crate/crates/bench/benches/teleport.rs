use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ising_bench::random_state;
use ising_core::teleport::{run_teleport, Mode, TeleportOptions};
use ising_core::{Complex64, CycScalar};

fn exhaustive(c: &mut Criterion) {
    let mut g = c.benchmark_group("teleport/exhaustive");
    g.sample_size(10);
    let opts = TeleportOptions::default();
    for (m, n) in [(2, 1), (3, 1), (4, 2), (5, 2)] {
        let exact = random_state::<CycScalar>(m, 3).unwrap();
        g.bench_with_input(BenchmarkId::new("exact", format!("M{m}N{n}")), &n, |b, &n| {
            b.iter(|| run_teleport(&exact, n, &opts).unwrap())
        });
        let float = random_state::<Complex64>(m, 3).unwrap();
        g.bench_with_input(BenchmarkId::new("float", format!("M{m}N{n}")), &n, |b, &n| {
            b.iter(|| run_teleport(&float, n, &opts).unwrap())
        });
    }
    g.finish();
}

fn sampled(c: &mut Criterion) {
    let mut g = c.benchmark_group("teleport/sample");
    g.sample_size(10);
    let opts = TeleportOptions { mode: Mode::Sample(64), seed: 5, ..TeleportOptions::default() };
    let phi = random_state::<Complex64>(7, 3).unwrap();
    g.bench_function("float/M7N3", |b| b.iter(|| run_teleport(&phi, 3, &opts).unwrap()));
    g.finish();
}

criterion_group!(benches, exhaustive, sampled);
criterion_main!(benches);
