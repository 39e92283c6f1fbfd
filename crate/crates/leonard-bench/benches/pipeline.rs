use criterion::{black_box, criterion_group, criterion_main, Criterion};

use leonard::families::{kr3, qr3};
use leonard::realize::{realize, Basis};
use leonard::{classify, derived_scalars, polynomial_set, solve_askey_wilson, validate, verify_identities, FamilyParams, FamilyTag, FieldSpec};

fn krawtchouk(d: usize) -> leonard::ParameterArray {
    let f = FieldSpec::Rationals;
    let fp = FamilyParams::new(FamilyTag::Krawtchouk, d)
        .with("theta0", f.from_i64(d as i64))
        .with("thetastar0", f.from_i64(d as i64))
        .with("s", f.from_i64(-2))
        .with("sstar", f.from_i64(-2))
        .with("r", f.from_i64(2));
    leonard::make_family(&fp, f).expect("admissible")
}

fn pipeline(c: &mut Criterion) {
    let small = kr3();
    let q = qr3();
    let big = krawtchouk(8);
    c.bench_function("validate/kr3", |b| b.iter(|| validate(black_box(&small))));
    c.bench_function("scalars/krawtchouk8", |b| b.iter(|| derived_scalars(black_box(&big))));
    c.bench_function("polynomials/krawtchouk8", |b| b.iter(|| polynomial_set(black_box(&big))));
    c.bench_function("realize/standard/krawtchouk8", |b| b.iter(|| realize(black_box(&big), Basis::Standard)));
    c.bench_function("classify/qr3", |b| b.iter(|| classify(black_box(&q))));
    let r = realize(&q, Basis::Standard).expect("realizes");
    c.bench_function("askey_wilson/qr3", |b| b.iter(|| solve_askey_wilson(black_box(&r))));
    c.bench_function("verify/kr3", |b| b.iter(|| verify_identities(black_box(&small))));
}

criterion_group!(benches, pipeline);
criterion_main!(benches);
