use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hyperfuzz_core::enumeration::{sample_structure_at, Domain, HyperoperationSpace};
use hyperfuzz_core::theorem::{self, TheoremId, VerifyDomain};

fn exhaustive_order_two(c: &mut Criterion) {
    let mut group = c.benchmark_group("exhaustive_order_2");
    for t in [TheoremId::Prop678, TheoremId::Prop12, TheoremId::Prop17] {
        group.bench_function(t.name(), |b| {
            b.iter(|| theorem::verify(t, &VerifyDomain::Exhaustive { order: 2 }, 2).unwrap())
        });
    }
    group.finish();
}

fn single_pair_order_three(c: &mut Criterion) {
    let (s, r) = sample_structure_at(3, 1, 0);
    c.bench_function("check_prop6_7_8/order_3", |b| {
        b.iter(|| theorem::check_prop6_7_8(black_box(&s), black_box(&r)))
    });
    c.bench_function("check_prop17_k2/order_3", |b| {
        b.iter(|| theorem::check_prop17(black_box(&s), black_box(&r), 2).unwrap())
    });
}

fn decode_tables(c: &mut Criterion) {
    let space = HyperoperationSpace::new(3).unwrap();
    c.bench_function("hyperoperation_get/order_3", |b| {
        let mut i = 0u64;
        b.iter(|| {
            i = (i + 7_919) % space.total();
            space.get(black_box(i))
        })
    });
}

criterion_group!(
    benches,
    exhaustive_order_two,
    single_pair_order_three,
    decode_tables
);
criterion_main!(benches);
