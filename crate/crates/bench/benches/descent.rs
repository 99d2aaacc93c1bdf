use std::hint::black_box;

use adc_core::{
    check_euclidean, chord_zero, descend, parse_form, parse_point, FractionPoint, Integers,
    NormedDomain, PrimeFieldPolynomials,
};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_bigint::BigInt;

fn worked_step(c: &mut Criterion) {
    let f = parse_form(&Integers, "x^2+y^2-5", 2).unwrap();
    let x = parse_point(&Integers, "-11,2/5").unwrap();
    c.bench_function("descend circle 5", |b| {
        b.iter(|| descend(&Integers, black_box(&f), black_box(&x), 2))
    });
}

fn sphere_heights(c: &mut Criterion) {
    let f = parse_form(&Integers, "x^2+y^2+z^2-29", 3).unwrap();
    let y0: Vec<BigInt> = [2, 3, 4].into_iter().map(BigInt::from).collect();
    let mut group = c.benchmark_group("descend sphere 29");
    for k in [3i64, 30, 300, 3000] {
        let w: Vec<BigInt> = [k, 1 - k, 7].into_iter().map(BigInt::from).collect();
        let x: FractionPoint<BigInt> = chord_zero(&Integers, &f, &y0, &w).unwrap();
        group.bench_with_input(
            BenchmarkId::from_parameter(Integers.norm(x.den())),
            &x,
            |b, x| b.iter(|| descend(&Integers, &f, x, 2)),
        );
    }
    group.finish();
}

fn char_two(c: &mut Criterion) {
    let d = PrimeFieldPolynomials::new(2).unwrap();
    let f = parse_form(&d, "x^2+t*y^2+x+t^2+t", 2).unwrap();
    let y0 = vec![d.poly(&[0, 1]), d.zero()];
    let w = vec![d.poly(&[1, 0, 1, 1]), d.poly(&[1, 1, 0, 1])];
    let x = chord_zero(&d, &f, &y0, &w).unwrap();
    c.bench_function("descend F2[t]", |b| {
        b.iter(|| descend(&d, &f, black_box(&x), 2))
    });
}

fn euclidean_check(c: &mut Criterion) {
    let f = parse_form(&Integers, "x^2+y^2+z^2", 3).unwrap();
    c.bench_function("check euclidean three squares h4 b2", |b| {
        b.iter(|| check_euclidean(&Integers, &f, 4, 2, 2))
    });
}

criterion_group!(
    benches,
    worked_step,
    sphere_heights,
    char_two,
    euclidean_check
);
criterion_main!(benches);
