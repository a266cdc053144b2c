use criterion::{black_box, criterion_group, criterion_main, Criterion};
use octaq::classify::{parse_range, sweep, SweepFamily, SweepSpec};
use octaq::oracle::{choose_box, count_components, verify_at, SignGrid};
use octaq::quadric::QuarticCoefficients;
use octaq::rational::{q, qf};
use octaq::classify;

fn cases() -> Vec<QuarticCoefficients> {
    [(1, 0, -1, qf(1, 2)), (0, 1, -1, qf(1, 8)), (1, 1, -1, qf(1, 8)), (3, -1, 1, qf(-1, 4))]
        .into_iter()
        .map(|(a, b, c, d)| QuarticCoefficients::new(q(a), q(b), q(c), d).unwrap())
        .collect()
}

fn bench_classify(c: &mut Criterion) {
    let fs = cases();
    c.bench_function("classify/4 cases", |b| {
        b.iter(|| {
            for f in &fs {
                black_box(classify(black_box(f)));
            }
        })
    });
}

fn bench_sweep(c: &mut Criterion) {
    let spec = SweepSpec {
        family: SweepFamily::Eps { eps1: -1, eps2: 1 },
        outer: parse_range("1:5:1/2").unwrap(),
        inner: parse_range("-2:6:1/4").unwrap(),
    };
    c.bench_function("sweep/eps 9x33", |b| b.iter(|| black_box(sweep(&spec))));
}

fn bench_grid(c: &mut Criterion) {
    let f = &cases()[0];
    let l = choose_box(f);
    let mut g = c.benchmark_group("sign grid");
    g.sample_size(20);
    g.bench_function("sample n=64", |b| b.iter(|| black_box(SignGrid::sample(f, &l, 64))));
    let grid = SignGrid::sample(f, &l, 64);
    g.bench_function("components n=64", |b| b.iter(|| black_box(count_components(&grid))));
    g.finish();
}

fn bench_verify(c: &mut Criterion) {
    let f = &cases()[0];
    let report = classify(f);
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    g.bench_function("n=32", |b| b.iter(|| black_box(verify_at(f, &report, 32))));
    g.finish();
}

criterion_group!(benches, bench_classify, bench_sweep, bench_grid, bench_verify);
criterion_main!(benches);
