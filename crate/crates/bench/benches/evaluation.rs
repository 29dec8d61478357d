use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gassner_bench::{exact, truncated, weight_five_word};

fn evaluation(c: &mut Criterion) {
    let word = weight_five_word();
    let mut group = c.benchmark_group("evaluate_weight_five_word");
    group.sample_size(10);
    group.bench_function("exact", |b| b.iter(|| exact(&word)));
    for d in [5u32, 6, 8] {
        group.bench_with_input(BenchmarkId::new("truncated", d), &d, |b, &d| b.iter(|| truncated(&word, d)));
    }
    group.finish();
}

criterion_group!(benches, evaluation);
criterion_main!(benches);
