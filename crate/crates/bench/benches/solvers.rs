use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fuzzy_labeling::principles::{random_fas, sweep, InstanceFamily, PrincipleId};
use fuzzy_labeling::semantics::{enumerate_complete, grounded_fixpoint};
use fuzzy_labeling::{Fas, Limits, SemanticsId};
use std::hint::black_box;

fn cycle(n: usize) -> Fas {
    let mut f = Fas::new();
    for i in 0..n {
        f.add_argument(format!("a{i}").parse().unwrap(), "1".parse().unwrap())
            .unwrap();
    }
    for i in 0..n {
        let (x, y) = (format!("a{i}"), format!("a{}", (i + 1) % n));
        f.add_attack(x.parse().unwrap(), y.parse().unwrap(), "0.7".parse().unwrap())
            .unwrap();
    }
    f
}

fn grounded(c: &mut Criterion) {
    let mut g = c.benchmark_group("grounded_fixpoint");
    for n in [4, 16, 64] {
        let f = cycle(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &f, |b, f| {
            b.iter(|| grounded_fixpoint(black_box(f)))
        });
    }
    g.finish();
}

fn complete(c: &mut Criterion) {
    let fam = InstanceFamily {
        max_args: 5,
        ..InstanceFamily::default()
    };
    let systems: Vec<Fas> = (0..20).map(|i| random_fas(&fam, i).unwrap()).collect();
    let limits = Limits::default();
    c.bench_function("enumerate_complete/random_20", |b| {
        b.iter(|| {
            for f in &systems {
                black_box(enumerate_complete(f, &limits).unwrap());
            }
        })
    });
}

fn principles(c: &mut Criterion) {
    let fam = InstanceFamily {
        count: 50,
        ..InstanceFamily::default()
    };
    let cells: Vec<_> = SemanticsId::ALL
        .into_iter()
        .map(|s| (s, PrincipleId::Existence))
        .collect();
    let limits = Limits::default();
    let mut g = c.benchmark_group("sweep");
    g.sample_size(10);
    g.bench_function("existence_50", |b| b.iter(|| sweep(&fam, &cells, &limits).unwrap()));
    g.finish();
}

criterion_group!(benches, grounded, complete, principles);
criterion_main!(benches);
