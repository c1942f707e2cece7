use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gpfkit_core::{
    ass_enumerate, rpe_filtration, verify_rpe, AssSource, Config, Exec, Field, Ideal, Oracle, PolyRing, QuotientModule,
    Submodule,
};

fn fixture() -> (Submodule, QuotientModule) {
    let r = PolyRing::new(Field::Rational, &["x", "y", "z", "w"]).unwrap();
    let gens = ["x^2*y", "x*y*z", "y^2*z^2", "z*w^2", "x*w", "y^3"];
    let n = Ideal::new(&r, gens.iter().map(|g| r.parse(g).unwrap()).collect()).unwrap();
    (n.as_submodule().clone(), QuotientModule::free(&r, 1))
}

fn modes() -> [(&'static str, Exec); 2] {
    [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)]
}

fn ass(c: &mut Criterion) {
    let (n, m) = fixture();
    let q = QuotientModule::new(m.top().clone(), n).unwrap();
    let mut group = c.benchmark_group("ass_enumerate");
    for (name, exec) in modes() {
        let cfg = Config::default().with_exec(exec);
        group.bench_with_input(BenchmarkId::from_parameter(name), &cfg, |b, cfg| {
            b.iter(|| ass_enumerate(black_box(&q), &AssSource::Monomial, cfg).unwrap())
        });
    }
    group.finish();
}

fn verify(c: &mut Criterion) {
    let (n, m) = fixture();
    let f = rpe_filtration(&n, &m, &AssSource::Monomial, &Config::default()).unwrap();
    let mut group = c.benchmark_group("verify_rpe");
    for (name, exec) in modes() {
        let cfg = Config::default().with_exec(exec);
        group.bench_with_input(BenchmarkId::from_parameter(name), &cfg, |b, cfg| {
            b.iter(|| verify_rpe(black_box(&f), &AssSource::Monomial, cfg).unwrap())
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let r = PolyRing::new(Field::Rational, &["x", "y", "z"]).unwrap();
    let n = Ideal::new(&r, ["x^2*y", "y*z^2", "x*z"].iter().map(|g| r.parse(g).unwrap()).collect()).unwrap();
    let top = Submodule::free(&r, 1);
    let o = Oracle::for_fixture(&[&top, n.as_submodule()], 4, 1 << 14).unwrap();
    let (ft, fb) = (o.load(&top).unwrap(), o.load(n.as_submodule()).unwrap());
    let mut group = c.benchmark_group("oracle_ass");
    for (name, exec) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, exec| {
            b.iter(|| o.ass_bruteforce(black_box(&fb), &ft, *exec))
        });
    }
    group.finish();
}

criterion_group!(benches, ass, verify, oracle);
criterion_main!(benches);
