//! Compares the rayon-backed kernels against their sequential fallbacks on
//! the three enumeration-heavy workloads: minimal-cover enumeration,
//! brute-force separation, and batched cutting-plane solves.

use criterion::{criterion_group, criterion_main, Criterion};

use circulant_cover::covers::{enumerate_minimal_covers, enumerate_minimal_covers_seq};
use circulant_cover::ratio::{rat, Rat};
use circulant_cover::separation::{brute_force_separate, brute_force_separate_seq};
use circulant_cover::solver::{
    random_weights, solve_cutting_plane_batch, solve_cutting_plane_batch_seq,
};
use circulant_cover::{CirculantInstance, Limits};

fn bench_cover_enumeration(c: &mut Criterion) {
    let inst = CirculantInstance::new(36, 4).unwrap();
    let limits = Limits::default();
    let mut group = c.benchmark_group("minimal_covers_c36_4");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| enumerate_minimal_covers(&inst, &limits).unwrap().len())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| enumerate_minimal_covers_seq(&inst, &limits).unwrap().len())
    });
    group.finish();
}

fn bench_brute_separation(c: &mut Criterion) {
    let inst = CirculantInstance::new(36, 12).unwrap();
    let limits = Limits::default();
    let xhat: Vec<Rat> = (0..36).map(|i| rat(i % 5, 7)).collect();
    let mut group = c.benchmark_group("brute_force_separation_c36_12");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| brute_force_separate(&inst, &xhat, &limits).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| brute_force_separate_seq(&inst, &xhat, &limits).unwrap())
    });
    group.finish();
}

fn bench_solve_batch(c: &mut Criterion) {
    let inst = CirculantInstance::new(12, 4).unwrap();
    let batch: Vec<Vec<Rat>> = (0..32).map(|t| random_weights(12, 1, 10, t)).collect();
    let mut group = c.benchmark_group("cutting_plane_batch_c12_4");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| {
            solve_cutting_plane_batch(&inst, &batch)
                .into_iter()
                .map(|r| r.unwrap().iterations)
                .sum::<u32>()
        })
    });
    group.bench_function("sequential", |b| {
        b.iter(|| {
            solve_cutting_plane_batch_seq(&inst, &batch)
                .into_iter()
                .map(|r| r.unwrap().iterations)
                .sum::<u32>()
        })
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_cover_enumeration,
    bench_brute_separation,
    bench_solve_batch
);
criterion_main!(benches);
