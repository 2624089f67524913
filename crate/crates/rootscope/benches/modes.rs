//! Parallel vs. sequential trial execution on the two heaviest
//! workloads: bracket-based relation checks (cheap per trial) and
//! exponential-based radiality sampling (expensive per trial).
//!
//! Run with `cargo bench`; build with `--no-default-features` to measure
//! the build without the parallel runtime compiled in at all.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rootscope::catalog::{build, AlgebraSpec};
use rootscope::exec::set_serial_override;
use rootscope::radiality::{radiality_samples, FunctionKind, InvariantFunction};
use rootscope::report::CheckCtx;
use rootscope::rootspace::decompose;
use rootscope::theorem::relation1_report;

fn bench_modes(c: &mut Criterion) {
    let spec = AlgebraSpec::so(1, 4);
    let (alg, cartan) = build(&spec).expect("catalog algebra builds");
    let datum = decompose(&alg, &cartan, 1e-9, 42).expect("decomposition succeeds");
    let ctx = CheckCtx {
        algebra: spec.to_string(),
        seed: 42,
        trials: 0,
    };
    let f = InvariantFunction::new(FunctionKind::TraceP2);

    let mut group = c.benchmark_group("relation1");
    for trials in [64usize, 512] {
        group.bench_with_input(BenchmarkId::new("parallel", trials), &trials, |b, &t| {
            set_serial_override(false);
            b.iter(|| relation1_report(&alg, &cartan, &datum, t, 1e-9, 42, &ctx));
        });
        group.bench_with_input(BenchmarkId::new("serial", trials), &trials, |b, &t| {
            set_serial_override(true);
            b.iter(|| relation1_report(&alg, &cartan, &datum, t, 1e-9, 42, &ctx));
            set_serial_override(false);
        });
    }
    group.finish();

    let mut group = c.benchmark_group("radiality_samples");
    for trials in [32usize, 256] {
        group.bench_with_input(BenchmarkId::new("parallel", trials), &trials, |b, &t| {
            set_serial_override(false);
            b.iter(|| radiality_samples(&alg, &cartan, &datum, 0, &f, t, 42).unwrap());
        });
        group.bench_with_input(BenchmarkId::new("serial", trials), &trials, |b, &t| {
            set_serial_override(true);
            b.iter(|| radiality_samples(&alg, &cartan, &datum, 0, &f, t, 42).unwrap());
            set_serial_override(false);
        });
    }
    group.finish();
}

criterion_group!(benches, bench_modes);
criterion_main!(benches);
