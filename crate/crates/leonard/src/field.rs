//! Exact scalars over the rationals, prime fields GF(p) and binary fields GF(2^k).
//!
//! Every [`Elem`] carries the parameters of its field, so arithmetic needs no
//! context object. Mixing elements of different fields is a programming error
//! and panics; inputs from the outside world are checked with
//! [`FieldSpec::contains`] before any arithmetic happens.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest admissible prime modulus (exclusive).
pub const MAX_PRIME: u64 = 1 << 31;
/// Largest admissible binary extension degree.
pub const MAX_BINARY_DEGREE: u32 = 16;

/// A field: Q, GF(p) or GF(2^k) with an explicit irreducible modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
    /// `modulus` holds the bits of the modulus polynomial, bit `i` being the
    /// coefficient of `x^i`; bit `k` is always set.
    Binary { k: u32, modulus: u32 },
}

impl FieldSpec {
    /// GF(p), checking primality by trial division.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= MAX_PRIME {
            return Err(Error::InvalidField(format!("p = {p} exceeds 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("p = {p} is not prime")));
        }
        Ok(FieldSpec::Prime(p))
    }

    /// GF(2^k) from modulus coefficients listed lowest degree first.
    pub fn binary(k: u32, modulus: &[u8]) -> Result<Self> {
        if modulus.len() != k as usize + 1 {
            return Err(Error::InvalidField(format!(
                "modulus needs {} coefficients, got {}",
                k + 1,
                modulus.len()
            )));
        }
        let mut mask = 0u32;
        for (i, &b) in modulus.iter().enumerate() {
            match b {
                0 => {}
                1 => mask |= 1 << i,
                _ => return Err(Error::InvalidField(format!("modulus coefficient {b} is not a bit"))),
            }
        }
        Self::binary_from_mask(k, mask)
    }

    /// GF(2^k) from the modulus bit mask.
    pub fn binary_from_mask(k: u32, modulus: u32) -> Result<Self> {
        if k == 0 || k > MAX_BINARY_DEGREE {
            return Err(Error::InvalidField(format!("degree k = {k} outside 1..=16")));
        }
        if modulus >> k != 1 {
            return Err(Error::InvalidField(format!("modulus {modulus:#b} does not have degree {k}")));
        }
        if !is_irreducible_gf2(modulus) {
            return Err(Error::InvalidField(format!("modulus {modulus:#b} is reducible over GF(2)")));
        }
        Ok(FieldSpec::Binary { k, modulus })
    }

    /// GF(2^k) with the numerically smallest irreducible modulus.
    pub fn binary_default(k: u32) -> Result<Self> {
        if k == 0 || k > MAX_BINARY_DEGREE {
            return Err(Error::InvalidField(format!("degree k = {k} outside 1..=16")));
        }
        (1u32 << k..1u32 << (k + 1))
            .find(|&m| is_irreducible_gf2(m))
            .map(|modulus| FieldSpec::Binary { k, modulus })
            .ok_or_else(|| Error::InvalidField(format!("no irreducible modulus of degree {k}")))
    }

    /// GF(4) with modulus x^2+x+1.
    pub fn gf4() -> Self {
        FieldSpec::Binary { k: 2, modulus: 0b111 }
    }

    /// Modulus coefficients, lowest degree first (binary fields only).
    pub fn modulus_bits(&self) -> Option<Vec<u8>> {
        match *self {
            FieldSpec::Binary { k, modulus } => Some((0..=k).map(|i| ((modulus >> i) & 1) as u8).collect()),
            _ => None,
        }
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p,
            FieldSpec::Binary { .. } => 2,
        }
    }

    /// Number of elements, `None` for Q.
    pub fn order(&self) -> Option<u64> {
        match *self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some(p),
            FieldSpec::Binary { k, .. } => Some(1 << k),
        }
    }

    pub fn zero(&self) -> Elem {
        self.from_i64(0)
    }

    pub fn one(&self) -> Elem {
        self.from_i64(1)
    }

    /// Image of an integer under the canonical ring map Z -> K.
    pub fn from_i64(&self, n: i64) -> Elem {
        match *self {
            FieldSpec::Rationals => Elem::Q(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => Elem::Fp { v: n.rem_euclid(p as i64) as u64, p },
            FieldSpec::Binary { k, modulus } => Elem::F2k { v: (n.rem_euclid(2)) as u32, k, modulus },
        }
    }

    /// Image of a big integer under Z -> K.
    pub fn from_bigint(&self, n: &BigInt) -> Elem {
        match *self {
            FieldSpec::Rationals => Elem::Q(BigRational::from_integer(n.clone())),
            FieldSpec::Prime(p) => {
                let r = ((n % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                Elem::Fp { v: r.to_u64().expect("residue fits"), p }
            }
            FieldSpec::Binary { k, modulus } => {
                let odd = (n % BigInt::from(2)) != BigInt::zero();
                Elem::F2k { v: odd as u32, k, modulus }
            }
        }
    }

    /// The element `n/d`.
    pub fn ratio(&self, n: i64, d: i64) -> Result<Elem> {
        self.from_i64(n).try_div(&self.from_i64(d))
    }

    /// The element with index `i` in a fixed enumeration of a finite field.
    pub fn element(&self, i: u64) -> Option<Elem> {
        match *self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => (i < p).then_some(Elem::Fp { v: i, p }),
            FieldSpec::Binary { k, modulus } => (i < 1 << k).then_some(Elem::F2k { v: i as u32, k, modulus }),
        }
    }

    /// All elements of a finite field, `None` for Q.
    pub fn elements(&self) -> Option<impl Iterator<Item = Elem> + '_> {
        let n = self.order()?;
        Some((0..n).map(move |i| self.element(i).expect("index in range")))
    }

    pub fn contains(&self, x: &Elem) -> bool {
        x.field() == *self
    }

    /// Parse the external string form of an element.
    ///
    /// Q accepts `a` or `a/b`. GF(p) accepts any integer or `a/b` and reduces
    /// it. GF(2^k) accepts the integer whose bits are the polynomial
    /// coefficients.
    pub fn parse(&self, s: &str) -> Result<Elem> {
        let t = s.trim();
        let err = || Error::Parse { input: s.to_string(), field: self.to_string() };
        match *self {
            FieldSpec::Rationals | FieldSpec::Prime(_) => {
                let (n, d) = match t.split_once('/') {
                    Some((a, b)) => (a.trim(), b.trim()),
                    None => (t, "1"),
                };
                let n: BigInt = n.parse().map_err(|_| err())?;
                let d: BigInt = d.parse().map_err(|_| err())?;
                self.from_bigint(&n).try_div(&self.from_bigint(&d)).map_err(|_| err())
            }
            FieldSpec::Binary { k, modulus } => {
                let v: u64 = t.parse().map_err(|_| err())?;
                if v >> k != 0 {
                    return Err(err());
                }
                Ok(Elem::F2k { v: v as u32, k, modulus })
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Binary { k, modulus } => write!(f, "GF(2^{k}) mod {modulus:#b}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// `Q`, `GF(p)`, `GF(2^k)` (smallest irreducible modulus), `GF(q)` with
    /// `q = 2^k` read the same way, or `GF(2^k,m)` with the modulus `m`
    /// written as bits from the highest degree down, e.g. `GF(2^3,1011)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let err = || Error::InvalidField(format!("cannot read {s:?}; expected Q, GF(p), GF(2^k) or GF(2^k,bits)"));
        if t == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        let inner = t.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')).ok_or_else(err)?;
        let (size, modulus) = match inner.split_once(',') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (inner.trim(), None),
        };
        let k = match size.strip_prefix("2^") {
            Some(k) => Some(k.parse::<u32>().map_err(|_| err())?),
            None => {
                let n: u64 = size.parse().map_err(|_| err())?;
                (n > 2 && n.is_power_of_two()).then(|| n.trailing_zeros())
            }
        };
        match (k, modulus) {
            (None, None) => FieldSpec::prime(size.parse().map_err(|_| err())?),
            (None, Some(_)) => Err(err()),
            (Some(k), Some(bits)) => FieldSpec::binary_from_mask(k, u32::from_str_radix(bits, 2).map_err(|_| err())?),
            (Some(k), None) => FieldSpec::binary_default(k),
        }
    }
}

/// The characteristic: 0 for Q, p for GF(p), 2 for GF(2^k).
pub fn field_char(spec: &FieldSpec) -> u64 {
    spec.characteristic()
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn gf2_poly_rem(mut a: u32, b: u32) -> u32 {
    let db = 31 - b.leading_zeros();
    while a != 0 && 31 - a.leading_zeros() >= db {
        a ^= b << (31 - a.leading_zeros() - db);
    }
    a
}

fn is_irreducible_gf2(m: u32) -> bool {
    let k = 31 - m.leading_zeros();
    // any proper factorization has a factor of degree <= k/2
    (2u32..(1 << (k / 2 + 1))).all(|g| gf2_poly_rem(m, g) != 0)
}

fn gf2k_mul(a: u32, b: u32, k: u32, modulus: u32) -> u32 {
    let mut r = 0u64;
    for i in 0..k {
        if (b >> i) & 1 == 1 {
            r ^= (a as u64) << i;
        }
    }
    for i in (k..2 * k).rev() {
        if (r >> i) & 1 == 1 {
            r ^= (modulus as u64) << (i - k);
        }
    }
    r as u32
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// A field element in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    Q(BigRational),
    Fp { v: u64, p: u64 },
    F2k { v: u32, k: u32, modulus: u32 },
}

impl Elem {
    pub fn field(&self) -> FieldSpec {
        match *self {
            Elem::Q(_) => FieldSpec::Rationals,
            Elem::Fp { p, .. } => FieldSpec::Prime(p),
            Elem::F2k { k, modulus, .. } => FieldSpec::Binary { k, modulus },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Elem::Q(x) => x.is_zero(),
            Elem::Fp { v, .. } => *v == 0,
            Elem::F2k { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.field().one()
    }

    pub fn zero_like(&self) -> Elem {
        self.field().zero()
    }

    pub fn one_like(&self) -> Elem {
        self.field().one()
    }

    pub fn inv(&self) -> Result<Elem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Elem::Q(x) => Elem::Q(x.recip()),
            Elem::Fp { v, p } => Elem::Fp { v: pow_mod(*v, p - 2, *p), p: *p },
            Elem::F2k { k, .. } => self.pow_u((1u64 << k) - 2),
        })
    }

    pub fn try_div(&self, rhs: &Elem) -> Result<Elem> {
        Ok(self * &rhs.inv()?)
    }

    pub fn square(&self) -> Elem {
        self * self
    }

    pub fn pow_u(&self, mut e: u64) -> Elem {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Elem> {
        if e >= 0 {
            Ok(self.pow_u(e as u64))
        } else {
            Ok(self.inv()?.pow_u(e.unsigned_abs()))
        }
    }

    /// Integer representative used for canonical ordering of finite-field
    /// elements.
    pub fn residue(&self) -> Option<u64> {
        match *self {
            Elem::Q(_) => None,
            Elem::Fp { v, .. } => Some(v),
            Elem::F2k { v, .. } => Some(v as u64),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Elem::Q(x) => Some(x),
            _ => None,
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Q(x) if x.denom().is_one() => write!(f, "{}", x.numer()),
            Elem::Q(x) => write!(f, "{}/{}", x.numer(), x.denom()),
            Elem::Fp { v, .. } => write!(f, "{v}"),
            Elem::F2k { v, .. } => write!(f, "{v}"),
        }
    }
}

fn mismatch(a: &Elem, b: &Elem) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

impl<'a> Add<&'a Elem> for &'a Elem {
    type Output = Elem;
    fn add(self, rhs: &Elem) -> Elem {
        match (self, rhs) {
            (Elem::Q(a), Elem::Q(b)) => Elem::Q(a + b),
            (Elem::Fp { v: a, p }, Elem::Fp { v: b, p: q }) if p == q => Elem::Fp { v: (a + b) % p, p: *p },
            (Elem::F2k { v: a, k, modulus }, Elem::F2k { v: b, k: k2, modulus: m2 }) if k == k2 && modulus == m2 => {
                Elem::F2k { v: a ^ b, k: *k, modulus: *modulus }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Elem {
    type Output = Elem;
    fn neg(self) -> Elem {
        match self {
            Elem::Q(a) => Elem::Q(-a),
            Elem::Fp { v, p } => Elem::Fp { v: (p - v) % p, p: *p },
            Elem::F2k { .. } => self.clone(),
        }
    }
}

impl<'a> Sub<&'a Elem> for &'a Elem {
    type Output = Elem;
    fn sub(self, rhs: &Elem) -> Elem {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Elem> for &'a Elem {
    type Output = Elem;
    fn mul(self, rhs: &Elem) -> Elem {
        match (self, rhs) {
            (Elem::Q(a), Elem::Q(b)) => Elem::Q(a * b),
            (Elem::Fp { v: a, p }, Elem::Fp { v: b, p: q }) if p == q => Elem::Fp { v: a * b % p, p: *p },
            (Elem::F2k { v: a, k, modulus }, Elem::F2k { v: b, k: k2, modulus: m2 }) if k == k2 && modulus == m2 => {
                Elem::F2k { v: gf2k_mul(*a, *b, *k, *modulus), k: *k, modulus: *modulus }
            }
            _ => mismatch(self, rhs),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Elem> for Elem {
            type Output = Elem;
            fn $m(self, rhs: Elem) -> Elem {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Elem> for Elem {
            type Output = Elem;
            fn $m(self, rhs: &Elem) -> Elem {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Elem> for &'a Elem {
            type Output = Elem;
            fn $m(self, rhs: Elem) -> Elem {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Elem {
    type Output = Elem;
    fn neg(self) -> Elem {
        -&self
    }
}

/// Canonical square root, if one exists in the field.
///
/// Over Q the nonnegative root is returned, over GF(p) the root with the
/// smaller residue, and over GF(2^k) the unique root `x^(2^(k-1))`.
pub fn field_sqrt(x: &Elem) -> Option<Elem> {
    match x {
        Elem::Q(r) => {
            if r.is_negative() {
                return None;
            }
            let (n, d) = (r.numer(), r.denom());
            let (sn, sd) = (n.sqrt(), d.sqrt());
            (&sn * &sn == *n && &sd * &sd == *d).then(|| Elem::Q(BigRational::new(sn, sd)))
        }
        Elem::Fp { v, p } => {
            let (v, p) = (*v, *p);
            if v == 0 || p == 2 {
                return Some(x.clone());
            }
            if pow_mod(v, (p - 1) / 2, p) != 1 {
                return None;
            }
            let y = tonelli_shanks(v, p);
            Some(Elem::Fp { v: y.min(p - y), p })
        }
        Elem::F2k { k, .. } => Some(x.pow_u(1u64 << (k - 1))),
    }
}

fn tonelli_shanks(n: u64, p: u64) -> u64 {
    if p % 4 == 3 {
        return pow_mod(n, (p + 1) / 4, p);
    }
    let mut q = p - 1;
    let mut s = 0;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(n, q, p);
    let mut r = pow_mod(n, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = t2 * t2 % p;
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    r
}

/// Distinct roots of `a x^2 + b x + c` lying in the field of `a`.
///
/// Odd characteristic and Q use the discriminant; characteristic 2 searches
/// the finite field exhaustively. Roots come out in a deterministic order.
pub fn solve_quadratic(a: &Elem, b: &Elem, c: &Elem) -> Result<Vec<Elem>> {
    if a.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let f = a.field();
    if f.characteristic() == 2 {
        let roots = f
            .elements()
            .expect("characteristic 2 fields are finite")
            .filter(|x| (&(a * x + b) * x + c).is_zero())
            .collect();
        return Ok(roots);
    }
    let two = f.from_i64(2);
    let disc = b * b - f.from_i64(4) * a * c;
    let Some(s) = field_sqrt(&disc) else { return Ok(Vec::new()) };
    let den = &two * a;
    let r1 = (-b + &s).try_div(&den)?;
    if s.is_zero() {
        return Ok(vec![r1]);
    }
    let r2 = (-b - &s).try_div(&den)?;
    Ok(vec![r1, r2])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Elem {
        FieldSpec::Rationals.parse(s).unwrap()
    }

    #[test]
    fn rational_sqrt() {
        assert_eq!(field_sqrt(&q("9/4")), Some(q("3/2")));
        assert_eq!(field_sqrt(&q("2")), None);
        assert_eq!(field_sqrt(&q("-4")), None);
    }

    #[test]
    fn prime_sqrt_matches_exhaustive_search() {
        for p in [2u64, 3, 5, 7, 13, 17, 41, 97] {
            let f = FieldSpec::prime(p).unwrap();
            for x in f.elements().unwrap() {
                let roots: Vec<u64> =
                    f.elements().unwrap().filter(|y| y.square() == x).map(|y| y.residue().unwrap()).collect();
                let got = field_sqrt(&x).map(|y| y.residue().unwrap());
                assert_eq!(got, roots.iter().copied().min(), "p={p} x={x}");
            }
        }
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(field_sqrt(&f7.from_i64(2)), Some(f7.from_i64(3)));
    }

    #[test]
    fn characteristic() {
        assert_eq!(field_char(&FieldSpec::Rationals), 0);
        assert_eq!(field_char(&FieldSpec::prime(7).unwrap()), 7);
        assert_eq!(field_char(&FieldSpec::binary(2, &[1, 1, 1]).unwrap()), 2);
    }

    #[test]
    fn rejects_bad_fields() {
        assert!(FieldSpec::prime(9).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::binary(2, &[1, 0, 1]).is_err());
        assert!(FieldSpec::binary(2, &[1, 1]).is_err());
        assert!(FieldSpec::binary(17, &[1; 18]).is_err());
        assert!(FieldSpec::binary(4, &[1, 1, 0, 0, 1]).is_ok());
    }

    #[test]
    fn gf4_multiplication_table() {
        let f = FieldSpec::gf4();
        let w = f.element(2).unwrap();
        let w2 = f.element(3).unwrap();
        assert_eq!(w.square(), w2);
        assert_eq!(&w * &w2, f.one());
        assert_eq!(&w + &f.one(), w2);
        assert_eq!(w.inv().unwrap(), w2);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        for f in [FieldSpec::Rationals, FieldSpec::Prime(5), FieldSpec::gf4()] {
            assert_eq!(f.one().try_div(&f.zero()), Err(Error::DivisionByZero));
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(q("6/-4").to_string(), "-3/2");
        assert_eq!(q("  7 ").to_string(), "7");
        let f7 = FieldSpec::Prime(7);
        assert_eq!(f7.parse("-1").unwrap().to_string(), "6");
        assert_eq!(f7.parse("1/2").unwrap().to_string(), "4");
        assert!(FieldSpec::gf4().parse("4").is_err());
        assert!(FieldSpec::Rationals.parse("1/0").is_err());
    }

    #[test]
    fn quadratics() {
        let f = FieldSpec::Rationals;
        let roots = solve_quadratic(&f.one(), &q("-5/2"), &f.one()).unwrap();
        assert_eq!(roots, vec![q("2"), q("1/2")]);
        assert!(solve_quadratic(&f.one(), &f.zero(), &f.one()).unwrap().is_empty());
        let g = FieldSpec::gf4();
        // x^2 + x + 1 splits over GF(4) with roots w, w^2
        let roots = solve_quadratic(&g.one(), &g.one(), &g.one()).unwrap();
        assert_eq!(roots, vec![g.element(2).unwrap(), g.element(3).unwrap()]);
    }

    #[test]
    fn field_text_forms() {
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("GF(7)".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(7));
        assert_eq!("GF(4)".parse::<FieldSpec>().unwrap(), FieldSpec::gf4());
        assert_eq!("GF(2^2)".parse::<FieldSpec>().unwrap(), FieldSpec::gf4());
        assert_eq!("GF(2^3,1011)".parse::<FieldSpec>().unwrap(), FieldSpec::binary_from_mask(3, 0b1011).unwrap());
        assert_eq!("GF(2)".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(2));
        for bad in ["GF(9)", "GF(2^3,1001)", "R", "GF(7", "GF(7,11)", "GF(2^0)"] {
            assert!(matches!(bad.parse::<FieldSpec>(), Err(Error::InvalidField(_))), "{bad}");
        }
    }
}
