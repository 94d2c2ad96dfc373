use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use centralbound::exec::Execution;
use centralbound::verify::{compute_table, run_sweep, SweepConfig, TableId};
use centralbound::real::PrecisionPolicy;

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sandwich_sweep");
    group.sample_size(10);
    for max_n in [256u64, 2048] {
        for exec in [Execution::Sequential, Execution::Parallel] {
            let cfg = SweepConfig {
                execution: exec,
                timing: false,
                ..SweepConfig::new(max_n, vec![1, 2])
            };
            group.bench_with_input(BenchmarkId::new(format!("{exec:?}"), max_n), &cfg, |b, cfg| {
                b.iter(|| run_sweep(cfg).unwrap())
            });
        }
    }
    group.finish();
}

fn tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("table_reproduction");
    let policy = PrecisionPolicy::default();
    for exec in [Execution::Sequential, Execution::Parallel] {
        group.bench_function(format!("{exec:?}"), |b| {
            b.iter(|| {
                for t in TableId::ALL {
                    compute_table(t, t.native_digits(), &policy, exec).unwrap();
                }
            })
        });
    }
    group.finish();
}

criterion_group!(benches, sweep, tables);
criterion_main!(benches);
