use bchrom::generators;
use bchrom::harness::{self, CheckSet, SweepOptions};
use bchrom::io::write_graph6_string;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn corpus() -> Vec<String> {
    let mut lines = Vec::new();
    for seed in 0..40u64 {
        lines.push(write_graph6_string(&generators::gnp(12, 0.4, seed).unwrap()));
    }
    for seed in 0..20u64 {
        lines.push(write_graph6_string(
            &generators::random_chordal(12, 3, seed).unwrap(),
        ));
    }
    lines
}

fn bench_sweep(c: &mut Criterion) {
    let lines = corpus();
    let opts = SweepOptions {
        checks: CheckSet::Bounds,
        solver_cap: harness::DEFAULT_SOLVER_CAP,
    };
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    group.bench_with_input(BenchmarkId::new("sequential", lines.len()), &lines, |b, l| {
        b.iter(|| harness::sweep_sequential(l, &opts))
    });
    #[cfg(feature = "parallel")]
    group.bench_with_input(BenchmarkId::new("parallel", lines.len()), &lines, |b, l| {
        b.iter(|| harness::sweep_parallel(l, &opts))
    });
    group.finish();
}

criterion_group!(benches, bench_sweep);
criterion_main!(benches);
