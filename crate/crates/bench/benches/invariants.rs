use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hfknot::algebra::{parse_expr, poly_gcd};
use hfknot::corpus::entry;
use hfknot::invariants::{compute_report, magnus_matrix, torsion_determinant, torsion_matrix};

const ENTRIES: [&str; 5] = ["trefoil", "0057", "0210", "0464", "0650"];

fn torsion(c: &mut Criterion) {
    let mut group = c.benchmark_group("torsion_determinant");
    for name in ENTRIES {
        let p = entry(name).unwrap().presentation();
        group.bench_with_input(BenchmarkId::from_parameter(name), &p, |b, p| {
            b.iter(|| torsion_determinant(black_box(p)).unwrap())
        });
    }
    group.finish();
}

fn magnus(c: &mut Criterion) {
    let mut group = c.benchmark_group("magnus_matrix");
    for name in ENTRIES {
        let p = entry(name).unwrap().presentation();
        group.bench_with_input(BenchmarkId::from_parameter(name), &p, |b, p| {
            b.iter(|| magnus_matrix(black_box(p)).unwrap())
        });
    }
    group.finish();
}

fn full_report(c: &mut Criterion) {
    let p = entry("0210").unwrap().presentation();
    c.bench_function("compute_report/0210", |b| {
        b.iter(|| compute_report(black_box(&p)).unwrap())
    });
}

fn determinant_only(c: &mut Criterion) {
    let m = torsion_matrix(&entry("0815").unwrap().presentation()).unwrap();
    c.bench_function("field_det/0815", |b| {
        b.iter(|| black_box(&m).det().unwrap())
    });
}

fn gcd(c: &mut Criterion) {
    let f = parse_expr("(1 + g1*g3 - g2^2)*(g1 + g2)^3", 3).unwrap();
    let g = parse_expr("(1 + g1*g3 - g2^2)*(g3 - 2)^2", 3).unwrap();
    let (f, g) = (f.numerator().clone(), g.numerator().clone());
    c.bench_function("poly_gcd/3vars", |b| {
        b.iter(|| poly_gcd(black_box(&f), black_box(&g)).unwrap())
    });
}

criterion_group!(benches, torsion, magnus, full_report, determinant_only, gcd);
criterion_main!(benches);
