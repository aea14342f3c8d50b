use std::hint::black_box;
use std::path::Path;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sylowfact_core::*;

fn closure(c: &mut Criterion) {
    let mut group = c.benchmark_group("closure");
    for n in [4, 5, 6, 7] {
        group.bench_with_input(BenchmarkId::new("symmetric", n), &n, |b, &n| {
            b.iter(|| symmetric(black_box(n)).unwrap().order())
        });
    }
    group.finish();
}

fn property_a(c: &mut Criterion) {
    let mut group = c.benchmark_group("property_a");
    for name in ["C30", "D12", "S5", "C6xC5", "S6"] {
        let g = Family::from_name(name).unwrap().build().unwrap();
        group.bench_function(name, |b| b.iter(|| check_property_a(black_box(&g)).holds));
    }
    group.finish();
}

fn nilpotency(c: &mut Criterion) {
    let mut group = c.benchmark_group("nilpotency");
    for name in ["D16", "S4", "C2xA4", "A6"] {
        let g = Family::from_name(name).unwrap().build().unwrap();
        group.bench_function(BenchmarkId::new("sylow", name), |b| {
            b.iter(|| is_nilpotent_sylow(black_box(&g)).unwrap().nilpotent)
        });
        group.bench_function(BenchmarkId::new("lcs", name), |b| {
            b.iter(|| is_nilpotent_lcs(black_box(&g)).nilpotent)
        });
    }
    group.finish();
}

fn factorization(c: &mut Criterion) {
    let a5 = alternating(5).unwrap();
    c.bench_function("factorize/A5_exhaustive", |b| {
        b.iter(|| {
            search_sylow_factorization(black_box(&a5), SearchMode::Exhaustive, DEFAULT_BUDGET)
                .unwrap()
        })
    });
    let s4 = symmetric(4).unwrap();
    c.bench_function("factorize/S4_first_hit", |b| {
        b.iter(|| {
            search_sylow_factorization(black_box(&s4), SearchMode::FirstHit, DEFAULT_BUDGET)
                .unwrap()
        })
    });
}

fn catalog_sweep(c: &mut Criterion) {
    let groups = expand_catalog(
        &CatalogSpec::default_catalog(),
        DEFAULT_MAX_ELEMENTS,
        Path::new("."),
    )
    .unwrap();
    let mut group = c.benchmark_group("catalog");
    group.sample_size(10);
    group.bench_function("verify_theorem", |b| {
        b.iter(|| {
            groups
                .iter()
                .all(|(_, g)| verify_theorem(g).unwrap().consistent)
        })
    });
    group.finish();
}

criterion_group!(
    benches,
    closure,
    property_a,
    nilpotency,
    factorization,
    catalog_sweep
);
criterion_main!(benches);
