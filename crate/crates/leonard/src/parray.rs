//! Parameter arrays, the PA1–PA5 conditions, the D4 action and the two
//! alternative characterizations (polynomial proportionality and the
//! bidiagonal intertwiner `G`).

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::linalg::{Matrix, Poly};

/// `(θ_i, θ*_i, i=0..d; φ_j, ϕ_j, j=1..d)` over a field.
///
/// `varphi` holds the first split sequence φ and `phi` the second split
/// sequence ϕ, both stored from index 1 (so `varphi[0]` is φ_1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterArray {
    pub field: FieldSpec,
    pub d: usize,
    pub theta: Vec<Elem>,
    pub theta_star: Vec<Elem>,
    pub varphi: Vec<Elem>,
    pub phi: Vec<Elem>,
}

impl ParameterArray {
    /// Assemble an array, checking lengths and field membership only.
    pub fn new(field: FieldSpec, theta: Vec<Elem>, theta_star: Vec<Elem>, varphi: Vec<Elem>, phi: Vec<Elem>) -> Result<Self> {
        let d = theta.len().checked_sub(1).ok_or_else(|| Error::Length("theta is empty".into()))?;
        let pa = ParameterArray { field, d, theta, theta_star, varphi, phi };
        pa.check_shape()?;
        Ok(pa)
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(field: FieldSpec, theta: &[i64], theta_star: &[i64], varphi: &[i64], phi: &[i64]) -> Result<Self> {
        let conv = |v: &[i64]| v.iter().map(|&x| field.from_i64(x)).collect();
        Self::new(field, conv(theta), conv(theta_star), conv(varphi), conv(phi))
    }

    /// Lengths consistent with `d`, every entry in `field`.
    pub fn check_shape(&self) -> Result<()> {
        let d = self.d;
        for (name, seq, want) in [
            ("theta", &self.theta, d + 1),
            ("theta_star", &self.theta_star, d + 1),
            ("varphi", &self.varphi, d),
            ("phi", &self.phi, d),
        ] {
            if seq.len() != want {
                return Err(Error::Length(format!("{name} has {} entries, expected {want} for d = {d}", seq.len())));
            }
            if let Some(bad) = seq.iter().find(|e| !self.field.contains(e)) {
                return Err(Error::NotInField(format!("{name} entry {bad} ({})", bad.field())));
            }
        }
        Ok(())
    }

    pub fn th(&self, i: usize) -> &Elem {
        &self.theta[i]
    }

    pub fn ths(&self, i: usize) -> &Elem {
        &self.theta_star[i]
    }

    /// φ_i, zero outside `1..=d`.
    pub fn varphi_at(&self, i: usize) -> Elem {
        if (1..=self.d).contains(&i) {
            self.varphi[i - 1].clone()
        } else {
            self.field.zero()
        }
    }

    /// ϕ_i, zero outside `1..=d`.
    pub fn phi_at(&self, i: usize) -> Elem {
        if (1..=self.d).contains(&i) {
            self.phi[i - 1].clone()
        } else {
            self.field.zero()
        }
    }

    /// Error unless the array satisfies PA1–PA5.
    pub fn ensure_valid(&self) -> Result<()> {
        let v = validate(self)?;
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidArray(v))
        }
    }
}

/// One of the five defining conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PaRule {
    PA1,
    PA2,
    PA3,
    PA4,
    PA5,
}

impl fmt::Display for PaRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A violated condition with the two sides that fail to match.
///
/// For PA1 `lhs`/`rhs` are the equal entries at `i` and `j`; for PA2 `lhs`
/// is the vanishing entry; for PA3/PA4 `lhs` is the stored split value and
/// `rhs` the value the condition demands; for PA5 `lhs` is the ratio at `i`
/// and `rhs` the reference ratio `(θ_0−θ_3)/(θ_1−θ_2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaViolation {
    pub rule: PaRule,
    pub i: usize,
    pub j: Option<usize>,
    pub sequence: &'static str,
    pub lhs: Elem,
    pub rhs: Elem,
}

impl fmt::Display for PaViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.j {
            Some(j) => write!(f, "{} at ({}, {}) in {}: {} = {}", self.rule, self.i, j, self.sequence, self.lhs, self.rhs),
            None => write!(f, "{} at i={} in {}: {} vs {}", self.rule, self.i, self.sequence, self.lhs, self.rhs),
        }
    }
}

/// `Σ_{h<i} (θ_h − θ_{d−h}) / (θ_0 − θ_d)`; requires θ_0 ≠ θ_d.
fn theta_partial_sum(pa: &ParameterArray, i: usize) -> Result<Elem> {
    let d = pa.d;
    let den = pa.th(0) - pa.th(d);
    (0..i).try_fold(pa.field.zero(), |acc, h| Ok(acc + (pa.th(h) - pa.th(d - h)).try_div(&den)?))
}

/// The value of φ_i demanded by PA3.
pub fn pa3_rhs(pa: &ParameterArray, i: usize) -> Result<Elem> {
    let d = pa.d;
    Ok(pa.phi_at(1) * theta_partial_sum(pa, i)? + (pa.ths(i) - pa.ths(0)) * (pa.th(i - 1) - pa.th(d)))
}

/// The value of ϕ_i demanded by PA4.
pub fn pa4_rhs(pa: &ParameterArray, i: usize) -> Result<Elem> {
    let d = pa.d;
    Ok(pa.varphi_at(1) * theta_partial_sum(pa, i)? + (pa.ths(i) - pa.ths(0)) * (pa.th(d - i + 1) - pa.th(0)))
}

fn pa1_violations(pa: &ParameterArray) -> Vec<PaViolation> {
    let mut out = Vec::new();
    for (name, seq) in [("theta", &pa.theta), ("theta_star", &pa.theta_star)] {
        for i in 0..seq.len() {
            for j in i + 1..seq.len() {
                if seq[i] == seq[j] {
                    out.push(PaViolation { rule: PaRule::PA1, i, j: Some(j), sequence: name, lhs: seq[i].clone(), rhs: seq[j].clone() });
                }
            }
        }
    }
    out
}

fn pa2_violations(pa: &ParameterArray) -> Vec<PaViolation> {
    let mut out = Vec::new();
    for (name, seq) in [("varphi", &pa.varphi), ("phi", &pa.phi)] {
        for (k, x) in seq.iter().enumerate() {
            if x.is_zero() {
                out.push(PaViolation { rule: PaRule::PA2, i: k + 1, j: None, sequence: name, lhs: x.clone(), rhs: pa.field.zero() });
            }
        }
    }
    out
}

/// Every violated condition with witnesses; empty iff `pa` is a parameter array.
///
/// PA3–PA5 divide by differences of eigenvalues, so they are only evaluated
/// when PA1 holds.
pub fn validate(pa: &ParameterArray) -> Result<Vec<PaViolation>> {
    pa.check_shape()?;
    let mut out = pa1_violations(pa);
    let pa1_ok = out.is_empty();
    out.extend(pa2_violations(pa));
    if !pa1_ok {
        return Ok(out);
    }
    for i in 1..=pa.d {
        let rhs = pa3_rhs(pa, i)?;
        let lhs = pa.varphi_at(i);
        if lhs != rhs {
            out.push(PaViolation { rule: PaRule::PA3, i, j: None, sequence: "varphi", lhs, rhs });
        }
    }
    for i in 1..=pa.d {
        let rhs = pa4_rhs(pa, i)?;
        let lhs = pa.phi_at(i);
        if lhs != rhs {
            out.push(PaViolation { rule: PaRule::PA4, i, j: None, sequence: "phi", lhs, rhs });
        }
    }
    if pa.d >= 3 {
        let ratio = |seq: &[Elem], i: usize| (&seq[i - 2] - &seq[i + 1]).try_div(&(&seq[i - 1] - &seq[i]));
        let reference = ratio(&pa.theta, 2)?;
        for i in 2..pa.d {
            let r = ratio(&pa.theta, i)?;
            if r != reference {
                out.push(PaViolation { rule: PaRule::PA5, i, j: None, sequence: "theta", lhs: r, rhs: reference.clone() });
            }
            let rs = ratio(&pa.theta_star, i)?;
            if rs != reference {
                out.push(PaViolation { rule: PaRule::PA5, i, j: None, sequence: "theta_star", lhs: rs, rhs: reference.clone() });
            }
        }
    }
    Ok(out)
}

/// Generators of the D4 action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Star,
    Down,
    DDown,
}

/// An element of D4 in the normal form `*^a ↓^b ⇓^c`, read left to right as
/// the order in which generators are applied to an array.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct D4Element {
    star: bool,
    down: bool,
    ddown: bool,
}

impl D4Element {
    pub const IDENTITY: D4Element = D4Element { star: false, down: false, ddown: false };
    pub const STAR: D4Element = D4Element { star: true, down: false, ddown: false };
    pub const DOWN: D4Element = D4Element { star: false, down: true, ddown: false };
    pub const DDOWN: D4Element = D4Element { star: false, down: false, ddown: true };

    pub fn generator(g: Generator) -> Self {
        match g {
            Generator::Star => Self::STAR,
            Generator::Down => Self::DOWN,
            Generator::DDown => Self::DDOWN,
        }
    }

    /// Apply `self`, then `then`.
    pub fn then(self, then: D4Element) -> D4Element {
        // ↓*=*⇓ and ⇓*=*↓: moving a star leftwards swaps the two arrows
        let (b, c) = if then.star { (self.ddown, self.down) } else { (self.down, self.ddown) };
        D4Element { star: self.star ^ then.star, down: b ^ then.down, ddown: c ^ then.ddown }
    }

    /// The element obtained by applying the generators in order.
    pub fn from_word(word: &[Generator]) -> Self {
        word.iter().fold(Self::IDENTITY, |acc, &g| acc.then(Self::generator(g)))
    }

    /// Reduced word in normal form.
    pub fn word(self) -> Vec<Generator> {
        let mut w = Vec::new();
        if self.star {
            w.push(Generator::Star);
        }
        if self.down {
            w.push(Generator::Down);
        }
        if self.ddown {
            w.push(Generator::DDown);
        }
        w
    }

    pub fn inverse(self) -> D4Element {
        Self::all().into_iter().find(|g| self.then(*g) == Self::IDENTITY).expect("D4 is a group")
    }

    /// The 8 elements in the order Φ, Φ↓, Φ⇓, Φ↓⇓, Φ*, Φ↓*, Φ⇓*, Φ↓⇓*.
    pub fn all() -> [D4Element; 8] {
        use Generator::*;
        [
            Self::from_word(&[]),
            Self::from_word(&[Down]),
            Self::from_word(&[DDown]),
            Self::from_word(&[Down, DDown]),
            Self::from_word(&[Star]),
            Self::from_word(&[Down, Star]),
            Self::from_word(&[DDown, Star]),
            Self::from_word(&[Down, DDown, Star]),
        ]
    }
}

impl fmt::Display for D4Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Self::IDENTITY {
            return write!(f, "1");
        }
        for g in self.word() {
            write!(f, "{}", match g {
                Generator::Star => "*",
                Generator::Down => "↓",
                Generator::DDown => "⇓",
            })?;
        }
        Ok(())
    }
}

fn apply_generator(pa: &ParameterArray, g: Generator) -> ParameterArray {
    let d = pa.d;
    let rev = |v: &[Elem]| v.iter().rev().cloned().collect::<Vec<_>>();
    let (theta, theta_star, varphi, phi) = match g {
        Generator::Star => (pa.theta_star.clone(), pa.theta.clone(), pa.varphi.clone(), rev(&pa.phi)),
        Generator::Down => (pa.theta.clone(), rev(&pa.theta_star), rev(&pa.phi), rev(&pa.varphi)),
        Generator::DDown => (rev(&pa.theta), pa.theta_star.clone(), pa.phi.clone(), pa.varphi.clone()),
    };
    ParameterArray { field: pa.field, d, theta, theta_star, varphi, phi }
}

/// The array of the relative `Φ^g`.
pub fn d4_apply(pa: &ParameterArray, g: D4Element) -> Result<ParameterArray> {
    pa.ensure_valid()?;
    Ok(g.word().into_iter().fold(pa.clone(), |acc, gen| apply_generator(&acc, gen)))
}

/// The distinct arrays in the D4 orbit, in the order of [`D4Element::all`].
pub fn d4_orbit(pa: &ParameterArray) -> Result<Vec<ParameterArray>> {
    pa.ensure_valid()?;
    let mut out: Vec<ParameterArray> = Vec::new();
    for g in D4Element::all() {
        let img = g.word().into_iter().fold(pa.clone(), |acc, gen| apply_generator(&acc, gen));
        if !out.contains(&img) {
            out.push(img);
        }
    }
    Ok(out)
}

/// The common value of the PA5 ratios, or `None` when `d < 3`.
pub fn beta_plus_one(pa: &ParameterArray) -> Option<Elem> {
    if pa.d < 3 {
        return None;
    }
    (pa.th(0) - pa.th(3)).try_div(&(pa.th(1) - pa.th(2))).ok()
}

fn require_pa1_pa2(pa: &ParameterArray) -> Result<()> {
    pa.check_shape()?;
    let mut v = pa1_violations(pa);
    v.extend(pa2_violations(pa));
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidArray(v))
    }
}

/// Whether, for every `i`, `Σ_{n≤i} τ_n(λ)τ*_n(θ*_i)/(φ_1⋯φ_n)` is a scalar
/// multiple of `Σ_{n≤i} η_n(λ)τ*_n(θ*_i)/(ϕ_1⋯ϕ_n)`. Equivalent to PA3–PA5
/// for sequences satisfying PA1 and PA2.
pub fn pa_poly_characterization(pa: &ParameterArray) -> Result<bool> {
    require_pa1_pa2(pa)?;
    let f = pa.field;
    let d = pa.d;
    for i in 0..=d {
        let mut left = Poly::zero(f);
        let mut right = Poly::zero(f);
        let mut tau = Poly::one(f);
        let mut eta = Poly::one(f);
        let mut tau_star_at = f.one();
        let mut varphi_prod = f.one();
        let mut phi_prod = f.one();
        for n in 0..=i {
            if n > 0 {
                tau = &tau * &Poly::linear(pa.th(n - 1));
                eta = &eta * &Poly::linear(pa.th(d - n + 1));
                tau_star_at = tau_star_at * (pa.ths(i) - pa.ths(n - 1));
                varphi_prod = varphi_prod * pa.varphi_at(n);
                phi_prod = phi_prod * pa.phi_at(n);
            }
            left = &left + &tau.scale(&tau_star_at.try_div(&varphi_prod)?);
            right = &right + &eta.scale(&tau_star_at.try_div(&phi_prod)?);
        }
        if !left.is_scalar_multiple_of(&right) || !right.is_scalar_multiple_of(&left) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn lower_bidiagonal(f: FieldSpec, diag: &[Elem]) -> Matrix {
    let mut m = Matrix::diag(f, diag);
    for i in 1..diag.len() {
        m[(i, i - 1)] = f.one();
    }
    m
}

fn upper_bidiagonal(f: FieldSpec, diag: &[Elem], sup: &[Elem]) -> Matrix {
    let mut m = Matrix::diag(f, diag);
    for (i, s) in sup.iter().enumerate() {
        m[(i, i + 1)] = s.clone();
    }
    m
}

/// The four bidiagonal matrices `(L, L', U, U')` whose intertwiner is `G`.
pub fn g_matrix_targets(pa: &ParameterArray) -> (Matrix, Matrix, Matrix, Matrix) {
    let f = pa.field;
    let rev: Vec<Elem> = pa.theta.iter().rev().cloned().collect();
    (
        lower_bidiagonal(f, &pa.theta),
        lower_bidiagonal(f, &rev),
        upper_bidiagonal(f, &pa.theta_star, &pa.varphi),
        upper_bidiagonal(f, &pa.theta_star, &pa.phi),
    )
}

/// An invertible `G` with `G⁻¹LG = L'` and `G⁻¹UG = U'`, where `L`, `L'` are
/// lower bidiagonal with diagonals `θ_0..θ_d` and `θ_d..θ_0` and `U`, `U'` are
/// upper bidiagonal with diagonal `θ*` and superdiagonals φ and ϕ.
pub fn pa_bidiagonal_g(pa: &ParameterArray) -> Result<Option<Matrix>> {
    require_pa1_pa2(pa)?;
    let f = pa.field;
    let n = pa.d + 1;
    let (l, lp, u, up) = g_matrix_targets(pa);
    // X·G − G·Y = 0 as linear equations in the n² entries of G
    let mut sys = Matrix::zeros(f, 2 * n * n, n * n);
    for (block, (x, y)) in [(&l, &lp), (&u, &up)].into_iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                let row = block * n * n + i * n + j;
                for k in 0..n {
                    sys[(row, k * n + j)] = &sys[(row, k * n + j)] + &x[(i, k)];
                    sys[(row, i * n + k)] = &sys[(row, i * n + k)] - &y[(k, j)];
                }
            }
        }
    }
    let basis = sys.nullspace();
    let to_matrix = |v: &[Elem]| {
        let rows = (0..n).map(|i| v[i * n..(i + 1) * n].to_vec()).collect();
        Matrix::from_rows(f, rows).expect("square")
    };
    for b in &basis {
        let g = to_matrix(b);
        if g.inverse().is_some() {
            return Ok(Some(g));
        }
    }
    if basis.len() < 2 {
        return Ok(None);
    }
    let bound = pa.d as i64 + 2;
    let m = basis.len();
    let total = (bound as u64).checked_pow(m as u32).unwrap_or(u64::MAX).min(20_000);
    for idx in 0..total {
        let mut t = idx;
        let mut combo = vec![f.zero(); n * n];
        for b in &basis {
            let c = f.from_i64((t % bound as u64) as i64);
            t /= bound as u64;
            for (slot, e) in combo.iter_mut().zip(b) {
                *slot = &*slot + &(&c * e);
            }
        }
        let g = to_matrix(&combo);
        if g.inverse().is_some() {
            return Ok(Some(g));
        }
    }
    Ok(None)
}
