use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use degen_core::genfun::beta_series;
use degen_core::rational::rat;
use degen_core::recurrence::{build_trapezoid, InitialSequence};
use degen_core::stirling::{StirlingKind, StirlingTriangle};

/// The standing benchmark: symbolic degenerate Stirling triangle generation.
fn triangle_generation(c: &mut Criterion) {
    let mut group = c.benchmark_group("stirling2deg_triangle");
    for n in [16usize, 32, 64] {
        if n == 64 {
            group.sample_size(10);
        }
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| {
                let triangle = StirlingTriangle::new(StirlingKind::Degenerate2);
                triangle.ensure_rows(n);
                triangle.entry(n, 1)
            })
        });
    }
    group.finish();
}

fn series_and_recurrence(c: &mut Criterion) {
    c.bench_function("beta_series_order_24", |b| {
        b.iter(|| beta_series(&rat(0), 24).unwrap())
    });
    c.bench_function("trapezoid_harmonic_r2_n24", |b| {
        b.iter(|| build_trapezoid(&InitialSequence::Harmonic, 2, 24).unwrap())
    });
}

criterion_group!(benches, triangle_generation, series_and_recurrence);
criterion_main!(benches);
