//! Compares the rayon-backed execution mode against the sequential
//! fallback on the three parallel inner loops: RHom table recomputation,
//! the check registry pool, and a corpus sweep.
//!
//! Run with `cargo bench -p dercat`; pass `--no-default-features` to build
//! the purely sequential library (the "parallel" mode then degrades to the
//! sequential path, which is useful as a baseline sanity check).

use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use dercat::braid::twisted_collection_with;
use dercat::checks::{run_all, CheckParams};
use dercat::exec::map_slice;
use dercat::{build_algebra, corpus, rhom_dims, ExecMode};

const MODES: [(&str, ExecMode); 2] = [
    ("sequential", ExecMode::Sequential),
    ("parallel", ExecMode::Parallel),
];

fn bench_twisted_table(c: &mut Criterion) {
    let alg = build_algebra(6).unwrap();
    let coll = twisted_collection_with(&alg, 2, ExecMode::Sequential).unwrap();
    let mut g = c.benchmark_group("twisted_rhom_table_mu6_k2");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| coll.recompute_table(mode));
        });
    }
    g.finish();
}

fn bench_registry(c: &mut Criterion) {
    let params = CheckParams::default();
    let mut g = c.benchmark_group("verify_registry_full_sweep");
    g.sample_size(10);
    g.measurement_time(Duration::from_secs(12));
    for (name, mode) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| {
                let reports = run_all(&params, mode);
                assert!(reports.iter().all(|r| r.passed()));
                reports.len()
            });
        });
    }
    g.finish();
}

fn bench_corpus_sweep(c: &mut Criterion) {
    let objs = corpus::complexes(5, 64, 7);
    let probe = dercat::functors::one_spherical(5, 2);
    let mut g = c.benchmark_group("corpus_minimize_and_rhom_mu5");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| {
                map_slice(mode, &objs, |x| {
                    let m = x.minimize();
                    rhom_dims(&probe, &m).total()
                })
                .into_iter()
                .sum::<usize>()
            });
        });
    }
    g.finish();
}

criterion_group!(
    benches,
    bench_twisted_table,
    bench_registry,
    bench_corpus_sweep
);
criterion_main!(benches);
