//! Admissible parameter choices shared by the integration tests.

#![allow(dead_code)]

use leonard::{Elem, FamilyParams, FamilyTag, FieldSpec};

/// Parses `(name, value)` pairs into family parameters over `field`.
pub fn params(family: FamilyTag, d: usize, field: FieldSpec, values: &[(&str, &str)]) -> FamilyParams {
    values
        .iter()
        .fold(FamilyParams::new(family, d), |fp, (k, v)| fp.with(k, field.parse(v).expect("sample value parses")))
}

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).expect("prime")
}

/// GF(8) with modulus x³ + x + 1.
pub fn gf8() -> FieldSpec {
    FieldSpec::binary_from_mask(3, 0b1011).expect("irreducible")
}

/// Three or more admissible parameter sets for every family.
pub fn samples() -> Vec<(FamilyParams, FieldSpec)> {
    use FamilyTag::*;
    let th = |a: &'static str, b: &'static str| [("theta0", a), ("thetastar0", b)];
    let mut out = Vec::new();
    let mut add = |fam: FamilyTag, d: usize, field: FieldSpec, base: [(&'static str, &'static str); 2], rest: &[(&'static str, &'static str)]| {
        let mut v: Vec<(&str, &str)> = base.to_vec();
        v.extend_from_slice(rest);
        out.push((params(fam, d, field, &v), field));
    };
    add(QRacah, 3, q(), th("0", "0"), &[("q", "2"), ("h", "1"), ("hstar", "1"), ("s", "1"), ("sstar", "1"), ("r1", "16"), ("r2", "1")]);
    add(QRacah, 4, q(), th("1", "-2"), &[("q", "3"), ("h", "1"), ("hstar", "2"), ("s", "2"), ("sstar", "1/3"), ("r1", "2"), ("r2", "81")]);
    add(QRacah, 3, gf(13), th("0", "5"), &[("q", "2"), ("h", "1"), ("hstar", "1"), ("s", "3"), ("sstar", "6"), ("r1", "2"), ("r2", "1")]);
    add(QHahn, 3, q(), th("0", "0"), &[("q", "2"), ("h", "1"), ("hstar", "1"), ("sstar", "3"), ("r", "5")]);
    add(QHahn, 4, q(), th("2", "1/2"), &[("q", "1/3"), ("h", "2"), ("hstar", "-1"), ("sstar", "1/2"), ("r", "7")]);
    add(QHahn, 3, gf(11), th("1", "0"), &[("q", "2"), ("h", "1"), ("hstar", "3"), ("sstar", "4"), ("r", "9")]);
    add(DualQHahn, 3, q(), th("0", "0"), &[("q", "2"), ("h", "1"), ("hstar", "1"), ("s", "3"), ("r", "5")]);
    add(DualQHahn, 4, q(), th("-1", "3"), &[("q", "1/3"), ("h", "2"), ("hstar", "-1"), ("s", "1/2"), ("r", "7")]);
    add(DualQHahn, 3, gf(11), th("0", "1"), &[("q", "2"), ("h", "1"), ("hstar", "3"), ("s", "4"), ("r", "9")]);
    add(QuantumQKrawtchouk, 3, q(), th("0", "0"), &[("q", "2"), ("hstar", "1"), ("s", "3"), ("r", "5")]);
    add(QuantumQKrawtchouk, 4, q(), th("1", "1"), &[("q", "3"), ("hstar", "2"), ("s", "1"), ("r", "-1")]);
    add(QuantumQKrawtchouk, 3, gf(11), th("2", "0"), &[("q", "3"), ("hstar", "1"), ("s", "2"), ("r", "5")]);
    add(QKrawtchouk, 3, q(), th("0", "0"), &[("q", "2"), ("h", "1"), ("hstar", "1"), ("sstar", "3")]);
    add(QKrawtchouk, 5, q(), th("0", "1"), &[("q", "-2"), ("h", "1/2"), ("hstar", "3"), ("sstar", "5")]);
    add(QKrawtchouk, 3, gf(13), th("4", "0"), &[("q", "2"), ("h", "1"), ("hstar", "2"), ("sstar", "6")]);
    add(AffineQKrawtchouk, 3, q(), th("0", "0"), &[("q", "2"), ("h", "1"), ("hstar", "1"), ("r", "3")]);
    add(AffineQKrawtchouk, 4, q(), th("3", "-1"), &[("q", "1/2"), ("h", "-1"), ("hstar", "2"), ("r", "3/5")]);
    add(AffineQKrawtchouk, 3, gf(13), th("0", "2"), &[("q", "2"), ("h", "2"), ("hstar", "1"), ("r", "3")]);
    add(DualQKrawtchouk, 3, q(), th("0", "0"), &[("q", "2"), ("h", "1"), ("hstar", "1"), ("s", "3")]);
    add(DualQKrawtchouk, 5, q(), th("1", "0"), &[("q", "-2"), ("h", "3"), ("hstar", "1/2"), ("s", "5")]);
    add(DualQKrawtchouk, 3, gf(13), th("0", "4"), &[("q", "2"), ("h", "2"), ("hstar", "1"), ("s", "6")]);
    add(Racah, 3, q(), th("0", "0"), &[("h", "1"), ("hstar", "1"), ("s", "1"), ("sstar", "1"), ("r1", "1/2"), ("r2", "11/2")]);
    add(Racah, 4, q(), th("1", "2"), &[("h", "2"), ("hstar", "1"), ("s", "3"), ("sstar", "-1/2"), ("r1", "10"), ("r2", "-5/2")]);
    add(Racah, 3, gf(11), th("0", "3"), &[("h", "1"), ("hstar", "2"), ("s", "1"), ("sstar", "2"), ("r1", "1"), ("r2", "6")]);
    add(Hahn, 3, q(), th("0", "0"), &[("hstar", "1"), ("s", "2"), ("sstar", "1"), ("r", "1/2")]);
    add(Hahn, 4, q(), th("1", "-1"), &[("hstar", "-1"), ("s", "1"), ("sstar", "3"), ("r", "9")]);
    add(Hahn, 3, gf(11), th("0", "2"), &[("hstar", "1"), ("s", "1"), ("sstar", "1"), ("r", "1")]);
    add(DualHahn, 3, q(), th("0", "0"), &[("h", "1"), ("s", "1"), ("sstar", "2"), ("r", "1/2")]);
    add(DualHahn, 4, q(), th("-1", "1"), &[("h", "-1"), ("s", "3"), ("sstar", "1"), ("r", "9")]);
    add(DualHahn, 3, gf(11), th("2", "0"), &[("h", "1"), ("s", "1"), ("sstar", "1"), ("r", "1")]);
    add(Krawtchouk, 3, q(), th("3", "3"), &[("s", "-2"), ("sstar", "-2"), ("r", "2")]);
    add(Krawtchouk, 4, q(), th("0", "1"), &[("s", "1"), ("sstar", "2"), ("r", "3")]);
    add(Krawtchouk, 3, gf(7), th("0", "0"), &[("s", "1"), ("sstar", "1"), ("r", "2")]);
    add(BannaiIto, 3, q(), th("0", "0"), &[("h", "1"), ("hstar", "1"), ("s", "1"), ("sstar", "1"), ("r1", "1/2"), ("r2", "3/2")]);
    add(BannaiIto, 4, q(), th("1", "0"), &[("h", "1"), ("hstar", "2"), ("s", "3"), ("sstar", "-1"), ("r1", "0"), ("r2", "3")]);
    add(BannaiIto, 3, gf(7), th("0", "1"), &[("h", "1"), ("hstar", "1"), ("s", "1"), ("sstar", "1"), ("r1", "1"), ("r2", "1")]);
    let gf4 = FieldSpec::gf4();
    add(Orphan, 3, gf4, th("0", "0"), &[("h", "1"), ("hstar", "1"), ("s", "2"), ("sstar", "2"), ("r", "2")]);
    add(Orphan, 3, gf4, th("1", "0"), &[("h", "2"), ("hstar", "1"), ("s", "3"), ("sstar", "3"), ("r", "3")]);
    add(Orphan, 3, gf8(), th("0", "5"), &[("h", "1"), ("hstar", "3"), ("s", "2"), ("sstar", "4"), ("r", "3")]);
    out
}

/// Shorthand for a rational.
pub fn rat(s: &str) -> Elem {
    FieldSpec::Rationals.parse(s).expect("rational")
}
