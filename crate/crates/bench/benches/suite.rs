use criterion::{criterion_group, criterion_main, Criterion};

fn bench_smoke(c: &mut Criterion) {
    c.bench_function("smoke", |b| b.iter(rqc_core::qsim::smoke));
}

criterion_group!(benches, bench_smoke);
criterion_main!(benches);
