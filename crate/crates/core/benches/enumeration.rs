use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use silt_core::algebra::build::build;
use silt_core::algebra::catalog::catalog;
use silt_core::algebra::fdalg::FiniteDimAlgebra;
use silt_core::enumerate::{enumerate, Parallelism};
use silt_core::Q;

fn bench_enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for name in ["A4", "A3", "L10", "preproj-A4"] {
        let a: FiniteDimAlgebra<Q> = build(&catalog(name, None).unwrap()).unwrap();
        for (label, par) in [("sequential", Parallelism::Sequential), ("parallel", Parallelism::Parallel)] {
            group.bench_with_input(BenchmarkId::new(label, name), &a, |b, a| {
                b.iter(|| enumerate(a, 100_000, par).unwrap().nodes.len())
            });
        }
    }
    group.finish();
}

fn bench_budget(c: &mut Criterion) {
    let a: FiniteDimAlgebra<Q> = build(&catalog("ladder-5", None).unwrap()).unwrap();
    let mut group = c.benchmark_group("ladder-5 to 2000 nodes");
    group.sample_size(10);
    group.bench_function("sequential", |b| b.iter(|| enumerate(&a, 2_000, Parallelism::Sequential).unwrap().nodes.len()));
    group.bench_function("parallel", |b| b.iter(|| enumerate(&a, 2_000, Parallelism::Parallel).unwrap().nodes.len()));
    group.finish();
}

criterion_group!(benches, bench_enumerate, bench_budget);
criterion_main!(benches);
