//! Identity catalog, Askey–Wilson solver and recognition of Leonard pairs in
//! bidiagonal or tridiagonal/diagonal form.
//!
//! # Check names
//!
//! [`verify_identities`] reports the checks below, sorted by name. The names
//! are a stable contract.
//!
//! | name | identity |
//! |---|---|
//! | `pa.pa1` … `pa.pa5` | the five defining conditions of a parameter array |
//! | `axioms.{monic,split,standard}` | for `i ≠ j`, `E_iA*E_j = 0` iff `\|i−j\| > 1`, and dually |
//! | `basis.lsmatbasis` | `A^rE*_0A^s` (`0 ≤ r,s ≤ d`) span all matrices; only for `d ≤ 4` |
//! | `dagger.{monic,standard}` | `AᵀD = DA` and `A*ᵀD = DA*` for the dagger diagonal `D` |
//! | `duality` | `u_i(θ_j) = u*_j(θ*_i)` |
//! | `frame` | `(θ_0−θ_1)⋯(θ_0−θ_d) = νc_1⋯c_d` |
//! | `gram` | the Gram matrix `G` has `G_00 = ν⁻¹` and `GA = AᵀG` in the standard basis |
//! | `idempotents.{monic,split,standard}` | `E_iE_j = δ_ijE_i`, `ΣE_i = I`, `AE_i = θ_iE_i`, and dually |
//! | `lemma.eispoly` | `x_1⋯x_i E*_i = p_i(A)E*_0p_i(A)` |
//! | `lemma.mid` | `E_iE*_0E_i = m_iE_i`, `E*_0E_iE*_0 = m_iE*_0`, `m_i ≠ 0`, `Σm_i = 1`, `m_0 = m*_0` |
//! | `lemma.pimon` | `p_i(A)E*_0 = E*_iA^iE*_0` |
//! | `lemma.threeone` | `νE_0E*_0E_0 = E_0` and `νE*_0E_0E*_0 = E*_0` |
//! | `lemma.vi3` | `E_0u = u` and `v_i(A)E*_0u = E*_iu` for `u` the all-ones vector of the standard basis |
//! | `lemma.xiprod` | `E*_iAE*_i = a_iE*_i`, `E*_iAE*_{i−1}AE*_i = x_iE*_i`, `E*_{i−1}AE*_iAE*_{i−1} = x_iE*_{i−1}` |
//! | `monic.transition` | the transition matrix `X` is invertible and `AX = X·diag(θ)` |
//! | `orthogonality.p` | `Σ_r p_ip_j(θ_r)m_r = δ_ij x_1⋯x_i` and `Σ_i p_i(θ_r)p_i(θ_s)/(x_1⋯x_i) = δ_rs/m_r` |
//! | `orthogonality.u` | `Σ_r u_iu_j(θ_r)k*_r = δ_ijν/k_i` and `Σ_i u_i(θ_r)u_i(θ_s)k_i = δ_rsν/k*_r` |
//! | `orthogonality.v_index` | `Σ_i v_i(θ_r)v_i(θ_s)/k_i = δ_rsν/k*_r` |
//! | `orthogonality.v_theta` | `Σ_r v_i(θ_r)v_j(θ_r)k*_r = δ_ijνk_i` |
//! | `pmatrix.flat_sharp` | `X♯P = PX♭` for `X = A, A*` |
//! | `pmatrix.inverse` | `P*P = νI` |
//! | `polynomials.consistency` | `u_i(θ_0) = 1`, `p_i = p_i(θ_0)u_i`, `v_i = k_iu_i`, `p_{d+1} = τ_{d+1}` |
//! | `recurrence.difference` | `θ*_iu_i(θ_j) = b*_ju_i(θ_{j+1}) + a*_ju_i(θ_j) + c*_ju_i(θ_{j−1})` |
//! | `recurrence.three_term` | `θ_ju_i(θ_j) = b_iu_{i+1}(θ_j) + a_iu_i(θ_j) + c_iu_{i−1}(θ_j)` |
//! | `scalars.relations` | `b_i + a_i + c_i = θ_0`, `x_i = b_{i−1}c_i`, `k_i = b_0⋯b_{i−1}/(c_1⋯c_i)`, `k*_i = m_iν` |
//! | `split.{monic,split,standard}` | the split vectors satisfy their raising and lowering relations |
//! | `trace.a` | `a_i = tr(E*_iA)` |
//! | `trace.k` | `k_i = m*_iν` with `m*_i = tr(E*_iE_0)` |
//! | `trace.m` | `m_i = tr(E_iE*_0)` |
//! | `trace.nu` | `ν⁻¹ = tr(E_0E*_0)` |
//! | `trace.x` | `x_i = tr(E*_iAE*_{i−1}A)` |
//!
//! Trace checks run on all three realizations and the lemma checks on the
//! standard one; their witnesses carry the basis.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::formulas::{derived_scalars, polynomial_set, DerivedScalars, PolynomialSet};
use crate::linalg::{mat_poly_eval, structure_check, Matrix, Shape};
use crate::parray::{d4_apply, pa4_rhs, validate, D4Element, PaRule, ParameterArray};
use crate::realize::{
    dagger_diag, gram_matrix, idempotents, monic_transition, p_matrix, realize, split_subspaces, Basis, IdempotentSet,
    Realization,
};

/// Every check name [`verify_identities`] can emit, in report order.
pub const CHECK_NAMES: &[&str] = &[
    "axioms.monic",
    "axioms.split",
    "axioms.standard",
    "basis.lsmatbasis",
    "dagger.monic",
    "dagger.standard",
    "duality",
    "frame",
    "gram",
    "idempotents.monic",
    "idempotents.split",
    "idempotents.standard",
    "lemma.eispoly",
    "lemma.mid",
    "lemma.pimon",
    "lemma.threeone",
    "lemma.vi3",
    "lemma.xiprod",
    "monic.transition",
    "orthogonality.p",
    "orthogonality.u",
    "orthogonality.v_index",
    "orthogonality.v_theta",
    "pa.pa1",
    "pa.pa2",
    "pa.pa3",
    "pa.pa4",
    "pa.pa5",
    "pmatrix.flat_sharp",
    "pmatrix.inverse",
    "polynomials.consistency",
    "recurrence.difference",
    "recurrence.three_term",
    "scalars.relations",
    "split.monic",
    "split.split",
    "split.standard",
    "trace.a",
    "trace.k",
    "trace.m",
    "trace.nu",
    "trace.x",
];

/// The relation a check expected between the two sides of its witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Equal,
    NotEqual,
}

/// A concrete counterexample: indices, the realization it was found in (if
/// any) and both sides, which violate `relation`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub basis: Option<String>,
    pub indices: BTreeMap<String, usize>,
    pub lhs: String,
    pub rhs: String,
    pub relation: Relation,
}

impl Witness {
    fn new(indices: &[(&str, usize)], lhs: impl fmt::Display, rhs: impl fmt::Display, relation: Relation) -> Self {
        Witness {
            basis: None,
            indices: indices.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            relation,
        }
    }

    fn in_basis(mut self, b: Basis) -> Self {
        self.basis = Some(b.name().to_string());
        self
    }

    /// Whether the recorded sides really violate the expected relation.
    pub fn is_genuine(&self) -> bool {
        match self.relation {
            Relation::Equal => self.lhs != self.rhs,
            Relation::NotEqual => self.lhs == self.rhs,
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(b) = &self.basis {
            write!(f, "[{b}] ")?;
        }
        let idx: Vec<String> = self.indices.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let op = match self.relation {
            Relation::Equal => "!=",
            Relation::NotEqual => "==",
        };
        write!(f, "{}: {} {op} {}", idx.join(", "), self.lhs, self.rhs)
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    /// Error raised while evaluating the check, if any.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

/// Checks sorted by name.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

type Outcome = Result<Option<Witness>>;

#[derive(Default)]
struct Runner {
    checks: Vec<Check>,
}

impl Runner {
    fn run(&mut self, name: &str, f: impl FnOnce() -> Outcome) {
        let check = match f() {
            Ok(None) => Check { name: name.into(), passed: true, witness: None, error: None },
            Ok(Some(w)) => Check { name: name.into(), passed: false, witness: Some(w), error: None },
            Err(e) => Check { name: name.into(), passed: false, witness: None, error: Some(e.to_string()) },
        };
        self.checks.push(check);
    }

    fn finish(mut self) -> VerificationReport {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        VerificationReport { checks: self.checks }
    }
}

fn eq_at(indices: &[(&str, usize)], lhs: &Elem, rhs: &Elem) -> Option<Witness> {
    (lhs != rhs).then(|| Witness::new(indices, lhs, rhs, Relation::Equal))
}

fn mat_eq(indices: &[(&str, usize)], lhs: &Matrix, rhs: &Matrix) -> Option<Witness> {
    for r in 0..lhs.rows() {
        for c in 0..lhs.cols() {
            if lhs[(r, c)] != rhs[(r, c)] {
                let mut idx = indices.to_vec();
                idx.extend([("row", r), ("col", c)]);
                return Some(Witness::new(&idx, &lhs[(r, c)], &rhs[(r, c)], Relation::Equal));
            }
        }
    }
    None
}

fn vec_eq(indices: &[(&str, usize)], lhs: &[Elem], rhs: &[Elem]) -> Option<Witness> {
    lhs.iter().zip(rhs).enumerate().find_map(|(k, (l, r))| {
        let mut idx = indices.to_vec();
        idx.push(("entry", k));
        eq_at(&idx, l, r)
    })
}

fn delta(f: FieldSpec, i: usize, j: usize, value: Elem) -> Elem {
    if i == j {
        value
    } else {
        f.zero()
    }
}

/// Everything the catalog needs, computed once.
struct Ctx {
    pa: ParameterArray,
    f: FieldSpec,
    d: usize,
    s: DerivedScalars,
    ss: DerivedScalars,
    ps: PolynomialSet,
    pss: PolynomialSet,
    star: ParameterArray,
    reals: Vec<(Realization, IdempotentSet)>,
}

impl Ctx {
    fn new(pa: &ParameterArray) -> Result<Self> {
        let star = d4_apply(pa, D4Element::STAR)?;
        let mut reals = Vec::new();
        for b in Basis::ALL {
            let r = realize(pa, b)?;
            let ids = idempotents(&r)?;
            reals.push((r, ids));
        }
        Ok(Ctx {
            pa: pa.clone(),
            f: pa.field,
            d: pa.d,
            s: derived_scalars(pa)?,
            ss: derived_scalars(&star)?,
            ps: polynomial_set(pa)?,
            pss: polynomial_set(&star)?,
            star,
            reals,
        })
    }

    fn real(&self, b: Basis) -> &(Realization, IdempotentSet) {
        self.reals.iter().find(|(r, _)| r.basis == b).expect("all bases realized")
    }

    fn range(&self) -> std::ops::RangeInclusive<usize> {
        0..=self.d
    }

    fn u(&self, i: usize, j: usize) -> Elem {
        self.ps.u[i].eval(self.pa.th(j))
    }

    fn v(&self, i: usize, j: usize) -> Elem {
        self.ps.v[i].eval(self.pa.th(j))
    }

    fn p(&self, i: usize, j: usize) -> Elem {
        self.ps.p[i].eval(self.pa.th(j))
    }

    fn u_star(&self, i: usize, j: usize) -> Elem {
        self.pss.u[i].eval(self.star.th(j))
    }

    fn sum(&self, terms: impl Iterator<Item = Elem>) -> Elem {
        terms.fold(self.f.zero(), |acc, t| acc + t)
    }

    fn duality(&self) -> Outcome {
        for i in self.range() {
            for j in self.range() {
                if let Some(w) = eq_at(&[("i", i), ("j", j)], &self.u(i, j), &self.u_star(j, i)) {
                    return Ok(Some(w));
                }
            }
        }
        Ok(None)
    }

    fn three_term(&self) -> Outcome {
        let d = self.d;
        for i in self.range() {
            for j in self.range() {
                let lhs = self.pa.th(j) * &self.u(i, j);
                let mut rhs = &self.s.a[i] * &self.u(i, j);
                if i < d {
                    rhs = rhs + &self.s.b[i] * &self.u(i + 1, j);
                }
                if i > 0 {
                    rhs = rhs + &self.s.c[i] * &self.u(i - 1, j);
                }
                if let Some(w) = eq_at(&[("i", i), ("j", j)], &lhs, &rhs) {
                    return Ok(Some(w));
                }
            }
        }
        Ok(None)
    }

    fn difference(&self) -> Outcome {
        let d = self.d;
        for i in self.range() {
            for j in self.range() {
                let lhs = self.pa.ths(i) * &self.u(i, j);
                let mut rhs = &self.ss.a[j] * &self.u(i, j);
                if j < d {
                    rhs = rhs + &self.ss.b[j] * &self.u(i, j + 1);
                }
                if j > 0 {
                    rhs = rhs + &self.ss.c[j] * &self.u(i, j - 1);
                }
                if let Some(w) = eq_at(&[("i", i), ("j", j)], &lhs, &rhs) {
                    return Ok(Some(w));
                }
            }
        }
        Ok(None)
    }

    fn orth_v_theta(&self) -> Outcome {
        for i in self.range() {
            for j in self.range() {
                let lhs = self.sum(self.range().map(|r| self.v(i, r) * self.v(j, r) * &self.ss.k[r]));
                let rhs = delta(self.f, i, j, &self.s.nu * &self.s.k[i]);
                if let Some(w) = eq_at(&[("i", i), ("j", j)], &lhs, &rhs) {
                    return Ok(Some(w));
                }
            }
        }
        Ok(None)
    }

    fn orth_v_index(&self) -> Outcome {
        for r in self.range() {
            for s in self.range() {
                let terms: Vec<Elem> =
                    self.range().map(|i| (self.v(i, r) * self.v(i, s)).try_div(&self.s.k[i])).collect::<Result<_>>()?;
                let lhs = self.sum(terms.into_iter());
                let rhs = delta(self.f, r, s, self.s.nu.try_div(&self.ss.k[r])?);
                if let Some(w) = eq_at(&[("r", r), ("s", s)], &lhs, &rhs) {
                    return Ok(Some(w));
                }
            }
        }
        Ok(None)
    }

    fn orth_u(&self) -> Outcome {
        for i in self.range() {
            for j in self.range() {
                let lhs = self.sum(self.range().map(|r| self.u(i, r) * self.u(j, r) * &self.ss.k[r]));
                let rhs = delta(self.f, i, j, self.s.nu.try_div(&self.s.k[i])?);
                if let Some(w) = eq_at(&[("i", i), ("j", j), ("relation", 0)], &lhs, &rhs) {
                    return Ok(Some(w));
                }
            }
        }
        for r in self.range() {
            for s in self.range() {
                let lhs = self.sum(self.range().map(|i| self.u(i, r) * self.u(i, s) * &self.s.k[i]));
                let rhs = delta(self.f, r, s, self.s.nu.try_div(&self.ss.k[r])?);
                if let Some(w) = eq_at(&[("r", r), ("s", s), ("relation", 1)], &lhs, &rhs) {
                    return Ok(Some(w));
                }
            }
        }
        Ok(None)
    }

    fn orth_p(&self) -> Outcome {
        for i in self.range() {
            for j in self.range() {
                let lhs = self.sum(self.range().map(|r| self.p(i, r) * self.p(j, r) * &self.s.m[r]));
                let rhs = delta(self.f, i, j, self.s.x_prod(i));
                if let Some(w) = eq_at(&[("i", i), ("j", j), ("relation", 0)], &lhs, &rhs) {
                    return Ok(Some(w));
                }
            }
        }
        for r in self.range() {
            for s in self.range() {
                let terms: Vec<Elem> = self
                    .range()
                    .map(|i| (self.p(i, r) * self.p(i, s)).try_div(&self.s.x_prod(i)))
                    .collect::<Result<_>>()?;
                let lhs = self.sum(terms.into_iter());
                let rhs = delta(self.f, r, s, self.s.m[r].inv()?);
                if let Some(w) = eq_at(&[("r", r), ("s", s), ("relation", 1)], &lhs, &rhs) {
                    return Ok(Some(w));
                }
            }
        }
        Ok(None)
    }

    fn frame(&self) -> Outcome {
        let lhs = (1..=self.d).fold(self.f.one(), |acc, i| acc * (self.pa.th(0) - self.pa.th(i)));
        let rhs = &self.s.nu * &self.s.c_prod(self.d);
        Ok(eq_at(&[], &lhs, &rhs))
    }

    fn p_inverse(&self) -> Outcome {
        let p = p_matrix(&self.pa)?;
        let ps = p_matrix(&self.star)?;
        let want = Matrix::identity(self.f, self.d + 1).scale(&self.s.nu);
        Ok(mat_eq(&[], &(&ps * &p), &want))
    }

    fn flat_sharp(&self) -> Outcome {
        let p = p_matrix(&self.pa)?;
        let flat = &self.real(Basis::Standard).0;
        let sharp = realize(&self.star, Basis::Standard)?;
        // the star realization represents A* by its `a` and A by its `astar`
        if let Some(w) = mat_eq(&[("x", 0)], &(&sharp.astar * &p), &(&p * &flat.a)) {
            return Ok(Some(w));
        }
        Ok(mat_eq(&[("x", 1)], &(&sharp.a * &p), &(&p * &flat.astar)))
    }

    fn axioms(&self, b: Basis) -> Outcome {
        let (r, ids) = self.real(b);
        for (which, (e, m)) in [(&ids.e, &r.astar), (&ids.estar, &r.a)].into_iter().enumerate() {
            let right: Vec<Matrix> = e.iter().map(|ej| m * ej).collect();
            for i in self.range() {
                for j in self.range() {
                    let prod = &e[i] * &right[j];
                    let want_zero = i.abs_diff(j) > 1;
                    if i != j && prod.is_zero() != want_zero {
                        let (lhs, rel) = if want_zero { ("nonzero", Relation::Equal) } else { ("0", Relation::NotEqual) };
                        let w = Witness::new(&[("dual", which), ("i", i), ("j", j)], lhs, "0", rel);
                        return Ok(Some(w.in_basis(b)));
                    }
                }
            }
        }
        Ok(None)
    }

    fn idempotent_props(&self, b: Basis) -> Outcome {
        let (r, ids) = self.real(b);
        let n = self.d + 1;
        let zero = Matrix::zeros(self.f, n, n);
        let id = Matrix::identity(self.f, n);
        let sides = [(&ids.e, &r.a, &self.pa.theta), (&ids.estar, &r.astar, &self.pa.theta_star)];
        for (which, (e, m, th)) in sides.into_iter().enumerate() {
            for i in self.range() {
                for j in self.range() {
                    let want = if i == j { &e[i] } else { &zero };
                    if let Some(w) = mat_eq(&[("dual", which), ("i", i), ("j", j)], &(&e[i] * &e[j]), want) {
                        return Ok(Some(w.in_basis(b)));
                    }
                }
                if let Some(w) = mat_eq(&[("dual", which), ("i", i)], &(m * &e[i]), &e[i].scale(&th[i])) {
                    return Ok(Some(w.in_basis(b)));
                }
            }
            let total = e.iter().fold(zero.clone(), |acc, x| &acc + x);
            if let Some(w) = mat_eq(&[("dual", which)], &total, &id) {
                return Ok(Some(w.in_basis(b)));
            }
        }
        Ok(None)
    }

    fn trace_a(&self) -> Outcome {
        for (r, ids) in &self.reals {
            for i in self.range() {
                if let Some(w) = eq_at(&[("i", i)], &self.s.a[i], &(&ids.estar[i] * &r.a).trace()) {
                    return Ok(Some(w.in_basis(r.basis)));
                }
            }
        }
        Ok(None)
    }

    fn trace_x(&self) -> Outcome {
        for (r, ids) in &self.reals {
            for i in 1..=self.d {
                let t = (&(&(&ids.estar[i] * &r.a) * &ids.estar[i - 1]) * &r.a).trace();
                if let Some(w) = eq_at(&[("i", i)], self.s.x_at(i), &t) {
                    return Ok(Some(w.in_basis(r.basis)));
                }
            }
        }
        Ok(None)
    }

    fn trace_m(&self) -> Outcome {
        for (r, ids) in &self.reals {
            for i in self.range() {
                if let Some(w) = eq_at(&[("i", i)], &self.s.m[i], &(&ids.e[i] * &ids.estar[0]).trace()) {
                    return Ok(Some(w.in_basis(r.basis)));
                }
            }
        }
        Ok(None)
    }

    fn trace_nu(&self) -> Outcome {
        for (r, ids) in &self.reals {
            if let Some(w) = eq_at(&[], &self.s.nu.inv()?, &(&ids.e[0] * &ids.estar[0]).trace()) {
                return Ok(Some(w.in_basis(r.basis)));
            }
        }
        Ok(None)
    }

    fn trace_k(&self) -> Outcome {
        for (r, ids) in &self.reals {
            for i in self.range() {
                let m_star = (&ids.estar[i] * &ids.e[0]).trace();
                if let Some(w) = eq_at(&[("i", i)], &self.s.k[i], &(m_star * &self.s.nu)) {
                    return Ok(Some(w.in_basis(r.basis)));
                }
            }
        }
        Ok(None)
    }

    fn standard(&self) -> (&Realization, &IdempotentSet) {
        let (r, ids) = self.real(Basis::Standard);
        (r, ids)
    }

    fn xiprod(&self) -> Outcome {
        let (r, ids) = self.standard();
        let es = &ids.estar;
        for i in self.range() {
            if let Some(w) = mat_eq(&[("part", 0), ("i", i)], &(&(&es[i] * &r.a) * &es[i]), &es[i].scale(&self.s.a[i])) {
                return Ok(Some(w.in_basis(r.basis)));
            }
        }
        for i in 1..=self.d {
            let x = self.s.x_at(i);
            let lhs = &(&(&(&es[i] * &r.a) * &es[i - 1]) * &r.a) * &es[i];
            if let Some(w) = mat_eq(&[("part", 1), ("i", i)], &lhs, &es[i].scale(x)) {
                return Ok(Some(w.in_basis(r.basis)));
            }
            let lhs = &(&(&(&es[i - 1] * &r.a) * &es[i]) * &r.a) * &es[i - 1];
            if let Some(w) = mat_eq(&[("part", 2), ("i", i)], &lhs, &es[i - 1].scale(x)) {
                return Ok(Some(w.in_basis(r.basis)));
            }
        }
        Ok(None)
    }

    fn mid(&self) -> Outcome {
        let (r, ids) = self.standard();
        let (e, es) = (&ids.e, &ids.estar);
        for i in self.range() {
            let m = &self.s.m[i];
            if let Some(w) = mat_eq(&[("part", 0), ("i", i)], &(&(&e[i] * &es[0]) * &e[i]), &e[i].scale(m)) {
                return Ok(Some(w.in_basis(r.basis)));
            }
            if let Some(w) = mat_eq(&[("part", 1), ("i", i)], &(&(&es[0] * &e[i]) * &es[0]), &es[0].scale(m)) {
                return Ok(Some(w.in_basis(r.basis)));
            }
            if m.is_zero() {
                return Ok(Some(Witness::new(&[("part", 2), ("i", i)], m, "0", Relation::NotEqual)));
            }
        }
        let total = self.sum(self.s.m.iter().cloned());
        if let Some(w) = eq_at(&[("part", 3)], &total, &self.f.one()) {
            return Ok(Some(w));
        }
        Ok(eq_at(&[("part", 4)], &self.s.m[0], &self.ss.m[0]))
    }

    fn threeone(&self) -> Outcome {
        let (r, ids) = self.standard();
        let (e0, es0) = (&ids.e[0], &ids.estar[0]);
        let nu = &self.s.nu;
        if let Some(w) = mat_eq(&[("part", 0)], &(&(e0 * es0) * e0).scale(nu), e0) {
            return Ok(Some(w.in_basis(r.basis)));
        }
        Ok(mat_eq(&[("part", 1)], &(&(es0 * e0) * es0).scale(nu), es0).map(|w| w.in_basis(r.basis)))
    }

    fn eispoly(&self) -> Outcome {
        let (r, ids) = self.standard();
        for i in self.range() {
            let pa = mat_poly_eval(&self.ps.p[i], &r.a);
            let lhs = ids.estar[i].scale(&self.s.x_prod(i));
            if let Some(w) = mat_eq(&[("i", i)], &lhs, &(&(&pa * &ids.estar[0]) * &pa)) {
                return Ok(Some(w.in_basis(r.basis)));
            }
        }
        Ok(None)
    }

    fn pimon(&self) -> Outcome {
        let (r, ids) = self.standard();
        let mut a_pow = Matrix::identity(self.f, self.d + 1);
        for i in self.range() {
            let lhs = &mat_poly_eval(&self.ps.p[i], &r.a) * &ids.estar[0];
            let rhs = &(&ids.estar[i] * &a_pow) * &ids.estar[0];
            if let Some(w) = mat_eq(&[("i", i)], &lhs, &rhs) {
                return Ok(Some(w.in_basis(r.basis)));
            }
            a_pow = &a_pow * &r.a;
        }
        Ok(None)
    }

    fn vi3(&self) -> Outcome {
        let (r, ids) = self.standard();
        // in the standard basis the all-ones vector spans E_0V
        let u = vec![self.f.one(); self.d + 1];
        if let Some(w) = vec_eq(&[("part", 0)], &ids.e[0].mul_vec(&u), &u) {
            return Ok(Some(w.in_basis(r.basis)));
        }
        let e0u = ids.estar[0].mul_vec(&u);
        for i in self.range() {
            let lhs = mat_poly_eval(&self.ps.v[i], &r.a).mul_vec(&e0u);
            if let Some(w) = vec_eq(&[("part", 1), ("i", i)], &lhs, &ids.estar[i].mul_vec(&u)) {
                return Ok(Some(w.in_basis(r.basis)));
            }
        }
        Ok(None)
    }

    fn lsmatbasis(&self) -> Outcome {
        let (r, ids) = self.standard();
        let n = self.d + 1;
        let mut powers = vec![Matrix::identity(self.f, n)];
        for k in 1..n {
            powers.push(&powers[k - 1] * &r.a);
        }
        let mut span = Matrix::zeros(self.f, n * n, n * n);
        for (ri, ar) in powers.iter().enumerate() {
            for (si, as_) in powers.iter().enumerate() {
                let m = &(ar * &ids.estar[0]) * as_;
                for row in 0..n {
                    for col in 0..n {
                        span[(row * n + col, ri * n + si)] = m[(row, col)].clone();
                    }
                }
            }
        }
        let rank = span.rank();
        Ok((rank != n * n).then(|| Witness::new(&[], rank, n * n, Relation::Equal).in_basis(r.basis)))
    }

    fn scalars(&self) -> Outcome {
        let s = &self.s;
        for i in self.range() {
            if let Some(w) = eq_at(&[("part", 0), ("i", i)], &(&(&s.a[i] + &s.b[i]) + &s.c[i]), self.pa.th(0)) {
                return Ok(Some(w));
            }
            if i >= 1 {
                if let Some(w) = eq_at(&[("part", 1), ("i", i)], s.x_at(i), &(&s.b[i - 1] * &s.c[i])) {
                    return Ok(Some(w));
                }
            }
            let bprod = s.b[..i].iter().fold(self.f.one(), |acc, x| acc * x);
            if let Some(w) = eq_at(&[("part", 2), ("i", i)], &s.k[i], &bprod.try_div(&s.c_prod(i))?) {
                return Ok(Some(w));
            }
            if let Some(w) = eq_at(&[("part", 3), ("i", i)], &self.ss.k[i], &(&s.m[i] * &s.nu)) {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    fn polynomials(&self) -> Outcome {
        let th0 = self.pa.th(0);
        for i in self.range() {
            if let Some(w) = eq_at(&[("part", 0), ("i", i)], &self.ps.u[i].eval(th0), &self.f.one()) {
                return Ok(Some(w));
            }
            if self.ps.p[i] != self.ps.u[i].scale(&self.s.p_at_theta0[i]) {
                let w = Witness::new(&[("part", 1), ("i", i)], &self.ps.p[i], self.ps.u[i].scale(&self.s.p_at_theta0[i]), Relation::Equal);
                return Ok(Some(w));
            }
            if self.ps.v[i] != self.ps.u[i].scale(&self.s.k[i]) {
                let w = Witness::new(&[("part", 2), ("i", i)], &self.ps.v[i], self.ps.u[i].scale(&self.s.k[i]), Relation::Equal);
                return Ok(Some(w));
            }
        }
        let d = self.d;
        Ok((self.ps.p[d + 1] != self.ps.tau[d + 1])
            .then(|| Witness::new(&[("part", 3)], &self.ps.p[d + 1], &self.ps.tau[d + 1], Relation::Equal)))
    }

    fn dagger(&self, b: Basis) -> Outcome {
        let (r, _) = self.real(b);
        let dg = dagger_diag(r)?;
        for (which, m) in [&r.a, &r.astar].into_iter().enumerate() {
            if let Some(w) = mat_eq(&[("dual", which)], &(&m.transpose() * &dg), &(&dg * m)) {
                return Ok(Some(w.in_basis(b)));
            }
        }
        Ok(None)
    }

    fn gram(&self) -> Outcome {
        let g = gram_matrix(&self.pa)?;
        let r = &self.real(Basis::Standard).0;
        if let Some(w) = eq_at(&[("part", 0)], &g[(0, 0)], &self.s.nu.inv()?) {
            return Ok(Some(w));
        }
        Ok(mat_eq(&[("part", 1)], &(&g * &r.a), &(&r.a.transpose() * &g)).map(|w| w.in_basis(Basis::Standard)))
    }

    fn split(&self, b: Basis) -> Outcome {
        let (r, _) = self.real(b);
        Ok(match split_subspaces(r) {
            Ok(_) => None,
            Err(Error::Internal(msg)) => Some(Witness::new(&[], msg, "split relations", Relation::Equal).in_basis(b)),
            Err(e) => return Err(e),
        })
    }

    fn transition(&self) -> Outcome {
        let x = monic_transition(&self.pa)?;
        if x.inverse().is_none() {
            return Ok(Some(Witness::new(&[("part", 0)], "det X", "0", Relation::NotEqual)));
        }
        let a = &self.real(Basis::Monic).0.a;
        let th = Matrix::diag(self.f, &self.pa.theta);
        Ok(mat_eq(&[("part", 1)], &(a * &x), &(&x * &th)).map(|w| w.in_basis(Basis::Monic)))
    }
}

fn pa_rule_name(rule: PaRule) -> String {
    format!("pa.{}", rule.to_string().to_lowercase())
}

/// Run the whole catalog on `pa`.
///
/// An array that fails any of the defining conditions yields a report with
/// only the five `pa.*` checks; everything downstream presupposes them.
pub fn verify_identities(pa: &ParameterArray) -> Result<VerificationReport> {
    let violations = validate(pa)?;
    let mut runner = Runner::default();
    for rule in [PaRule::PA1, PaRule::PA2, PaRule::PA3, PaRule::PA4, PaRule::PA5] {
        let first = violations.iter().find(|v| v.rule == rule);
        runner.run(&pa_rule_name(rule), || {
            Ok(first.map(|v| {
                let mut idx = vec![("i", v.i)];
                if let Some(j) = v.j {
                    idx.push(("j", j));
                }
                // PA1 fails when two entries agree, the others when two sides differ
                let rel = if rule == PaRule::PA1 || rule == PaRule::PA2 { Relation::NotEqual } else { Relation::Equal };
                Witness::new(&idx, &v.lhs, &v.rhs, rel)
            }))
        });
    }
    if !violations.is_empty() {
        return Ok(runner.finish());
    }
    let cx = Ctx::new(pa)?;
    runner.run("duality", || cx.duality());
    runner.run("recurrence.three_term", || cx.three_term());
    runner.run("recurrence.difference", || cx.difference());
    runner.run("orthogonality.v_theta", || cx.orth_v_theta());
    runner.run("orthogonality.v_index", || cx.orth_v_index());
    runner.run("orthogonality.u", || cx.orth_u());
    runner.run("orthogonality.p", || cx.orth_p());
    runner.run("frame", || cx.frame());
    runner.run("pmatrix.inverse", || cx.p_inverse());
    runner.run("pmatrix.flat_sharp", || cx.flat_sharp());
    for b in Basis::ALL {
        runner.run(&format!("axioms.{b}"), || cx.axioms(b));
        runner.run(&format!("idempotents.{b}"), || cx.idempotent_props(b));
        runner.run(&format!("split.{b}"), || cx.split(b));
    }
    for b in [Basis::Monic, Basis::Standard] {
        runner.run(&format!("dagger.{b}"), || cx.dagger(b));
    }
    runner.run("trace.a", || cx.trace_a());
    runner.run("trace.x", || cx.trace_x());
    runner.run("trace.m", || cx.trace_m());
    runner.run("trace.nu", || cx.trace_nu());
    runner.run("trace.k", || cx.trace_k());
    runner.run("lemma.xiprod", || cx.xiprod());
    runner.run("lemma.mid", || cx.mid());
    runner.run("lemma.threeone", || cx.threeone());
    runner.run("lemma.eispoly", || cx.eispoly());
    runner.run("lemma.pimon", || cx.pimon());
    runner.run("lemma.vi3", || cx.vi3());
    if pa.d <= 4 {
        runner.run("basis.lsmatbasis", || cx.lsmatbasis());
    }
    runner.run("scalars.relations", || cx.scalars());
    runner.run("polynomials.consistency", || cx.polynomials());
    runner.run("gram", || cx.gram());
    runner.run("monic.transition", || cx.transition());
    Ok(runner.finish())
}

/// The eight scalars of the Askey–Wilson relations
///
/// `A²A* − βAA*A + A*A² − γ(AA*+A*A) − ϱA* = γ*A² + ωA + ηI` and
/// `A*²A − βA*AA* + AA*² − γ*(A*A+AA*) − ϱ*A = γA*² + ωA* + η*I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AWParams {
    pub beta: Elem,
    pub gamma: Elem,
    pub gamma_star: Elem,
    pub rho: Elem,
    pub rho_star: Elem,
    pub omega: Elem,
    pub eta: Elem,
    pub eta_star: Elem,
}

impl AWParams {
    fn from_vec(v: Vec<Elem>) -> Self {
        let mut it = v.into_iter();
        let mut next = || it.next().expect("eight unknowns");
        AWParams {
            beta: next(),
            gamma: next(),
            gamma_star: next(),
            rho: next(),
            rho_star: next(),
            omega: next(),
            eta: next(),
            eta_star: next(),
        }
    }

    /// Both relations evaluated on `(A, A*)`: the differences `lhs − rhs`.
    pub fn residuals(&self, a: &Matrix, astar: &Matrix) -> (Matrix, Matrix) {
        let f = a.field();
        let id = Matrix::identity(f, a.rows());
        let rel = |x: &Matrix, y: &Matrix, g: &Elem, gs: &Elem, rho: &Elem, eta: &Elem| {
            let x2 = x * x;
            let lhs = &(&(&(&x2 * y) - &(&(x * y) * x).scale(&self.beta)) + &(y * &x2))
                - &(&(&(x * y) + &(y * x)).scale(g) + &y.scale(rho));
            let rhs = &(&x2.scale(gs) + &x.scale(&self.omega)) + &id.scale(eta);
            &lhs - &rhs
        };
        (
            rel(a, astar, &self.gamma, &self.gamma_star, &self.rho, &self.eta),
            rel(astar, a, &self.gamma_star, &self.gamma, &self.rho_star, &self.eta_star),
        )
    }
}

/// Solution of the Askey–Wilson system for one realization.
///
/// `rank` is the rank of the 8-column coefficient matrix; when it is below 8
/// the free unknowns are set to zero and `unique` is false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AwSolution {
    pub params: AWParams,
    pub rank: usize,
    pub unique: bool,
}

/// Solve both Askey–Wilson relations for the eight scalars, treating them as
/// `2(d+1)²` linear equations, and confirm the result by substitution.
pub fn solve_askey_wilson(r: &Realization) -> Result<AwSolution> {
    let (a, s) = (&r.a, &r.astar);
    let f = a.field();
    let n = a.rows();
    let id = Matrix::identity(f, n);
    let zero = Matrix::zeros(f, n, n);
    let neg = |m: &Matrix| &zero - m;
    let (a2, s2) = (a * a, s * s);
    let (as_, sa) = (a * s, s * a);
    let anti = &as_ + &sa;
    // columns: beta, gamma, gamma_star, rho, rho_star, omega, eta, eta_star
    let first = [neg(&(&as_ * a)), neg(&anti), neg(&a2), neg(s), zero.clone(), neg(a), neg(&id), zero.clone()];
    let first_rhs = neg(&(&(&a2 * s) + &(s * &a2)));
    let second = [neg(&(&sa * s)), neg(&s2), neg(&anti), zero.clone(), neg(a), neg(s), zero.clone(), neg(&id)];
    let second_rhs = neg(&(&(&s2 * a) + &(a * &s2)));
    let mut sys = Matrix::zeros(f, 2 * n * n, 9);
    for (block, (cols, rhs)) in [(&first, &first_rhs), (&second, &second_rhs)].into_iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                let row = block * n * n + i * n + j;
                for (k, m) in cols.iter().enumerate() {
                    sys[(row, k)] = m[(i, j)].clone();
                }
                sys[(row, 8)] = rhs[(i, j)].clone();
            }
        }
    }
    let (red, pivots) = sys.rref();
    if pivots.last() == Some(&8) {
        return Err(Error::Inconsistent("the Askey–Wilson relations have no solution for this pair".into()));
    }
    let mut x = vec![f.zero(); 8];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = red[(row, 8)].clone();
    }
    let params = AWParams::from_vec(x);
    let (r1, r2) = params.residuals(a, s);
    if !r1.is_zero() || !r2.is_zero() {
        return Err(Error::Internal("Askey–Wilson solution fails substitution".into()));
    }
    Ok(AwSolution { params, rank: pivots.len(), unique: pivots.len() == 8 })
}

/// Recover a parameter array from `A` lower bidiagonal and `A*` upper
/// bidiagonal: `θ_i = A_ii`, `θ*_i = A*_ii`, `φ_i = A_{i,i−1}A*_{i−1,i}`,
/// `ϕ` from the fourth defining condition. `None` when the result is not a
/// parameter array.
pub fn recognize_bidiagonal(a: &Matrix, astar: &Matrix, field: FieldSpec) -> Result<Option<ParameterArray>> {
    if !structure_check(a, Shape::LowerBidiagonal) || !structure_check(astar, Shape::UpperBidiagonal) {
        return Err(Error::Shape("expected A lower bidiagonal and A* upper bidiagonal".into()));
    }
    if a.rows() != astar.rows() || a.rows() == 0 {
        return Err(Error::Dimension(format!("A is {0}x{0}, A* is {1}x{1}", a.rows(), astar.rows())));
    }
    if a.field() != field || astar.field() != field {
        return Err(Error::NotInField(format!("matrices are over {}, expected {field}", a.field())));
    }
    let n = a.rows();
    let d = n - 1;
    let theta = a.diagonal();
    let theta_star = astar.diagonal();
    let varphi: Vec<Elem> = (1..n).map(|i| &a[(i, i - 1)] * &astar[(i - 1, i)]).collect();
    let mut pa = ParameterArray::new(field, theta, theta_star, varphi, vec![field.zero(); d])?;
    if d > 0 && pa.th(0) == pa.th(d) {
        return Ok(None);
    }
    let phi: Vec<Elem> = (1..=d).map(|i| pa4_rhs(&pa, i)).collect::<Result<_>>()?;
    pa.phi = phi;
    Ok(validate(&pa)?.is_empty().then_some(pa))
}

/// Whether `A` (irreducible tridiagonal) and `A*` (diagonal) realize `pa` in
/// a basis of standard type: `A_ii = a_i`, `A_{i,i−1}A_{i−1,i} = x_i` and
/// `A*_ii = θ*_i`.
pub fn check_tridiag_diag(a: &Matrix, astar: &Matrix, pa: &ParameterArray) -> Result<VerificationReport> {
    if !structure_check(a, Shape::IrreducibleTridiagonal) || !structure_check(astar, Shape::Diagonal) {
        return Err(Error::Shape("expected A irreducible tridiagonal and A* diagonal".into()));
    }
    if a.rows() != pa.d + 1 || astar.rows() != pa.d + 1 {
        return Err(Error::Dimension(format!("matrices must be {0}x{0}", pa.d + 1)));
    }
    let s = derived_scalars(pa)?;
    let mut runner = Runner::default();
    runner.run("tridiag.diagonal", || Ok((0..=pa.d).find_map(|i| eq_at(&[("i", i)], &a[(i, i)], &s.a[i]))));
    runner.run("tridiag.cross_products", || {
        Ok((1..=pa.d).find_map(|i| eq_at(&[("i", i)], &(&a[(i, i - 1)] * &a[(i - 1, i)]), s.x_at(i))))
    });
    runner.run("tridiag.dual_diagonal", || Ok((0..=pa.d).find_map(|i| eq_at(&[("i", i)], &astar[(i, i)], pa.ths(i)))));
    Ok(runner.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{kr3, orph4, qr3};
    use crate::parray::d4_orbit;

    fn q(s: &str) -> Elem {
        FieldSpec::Rationals.parse(s).unwrap()
    }

    #[test]
    fn names_are_listed_and_sorted() {
        let mut sorted = CHECK_NAMES.to_vec();
        sorted.sort();
        assert_eq!(sorted, CHECK_NAMES);
        let report = verify_identities(&kr3()).unwrap();
        let names: Vec<&str> = report.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, CHECK_NAMES);
    }

    #[test]
    fn fixtures_pass_everything() {
        for pa in [kr3(), qr3(), orph4()] {
            for img in d4_orbit(&pa).unwrap() {
                let report = verify_identities(&img).unwrap();
                let bad: Vec<String> = report.failures().map(|c| format!("{} {:?} {:?}", c.name, c.witness, c.error)).collect();
                assert!(bad.is_empty(), "{bad:?}");
            }
        }
    }

    #[test]
    fn mutated_phi_reports_only_pa_failures() {
        let mut pa = kr3();
        pa.phi[1] = q("7");
        let report = verify_identities(&pa).unwrap();
        assert_eq!(report.checks.len(), 5);
        assert!(report.checks.iter().all(|c| c.name.starts_with("pa.")));
        // ϕ_2 enters the third condition only through ϕ_1, so just the fourth fails
        let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        assert_eq!(failed, ["pa.pa4"]);
        assert!(report.failures().all(|c| c.witness.as_ref().is_some_and(Witness::is_genuine)));
    }

    #[test]
    fn askey_wilson_kr3() {
        let pa = kr3();
        let sol = solve_askey_wilson(&realize(&pa, Basis::Standard).unwrap()).unwrap();
        let p = &sol.params;
        assert!(sol.unique);
        assert_eq!(sol.rank, 8);
        assert_eq!((&p.beta, &p.gamma, &p.gamma_star), (&q("2"), &q("0"), &q("0")));
        assert_eq!((&p.rho, &p.rho_star, &p.omega), (&q("4"), &q("4"), &q("0")));
        assert_eq!((&p.eta, &p.eta_star), (&q("0"), &q("0")));
        assert_eq!(&p.beta + &q("1"), crate::parray::beta_plus_one(&pa).unwrap());
        let monic = solve_askey_wilson(&realize(&pa, Basis::Monic).unwrap()).unwrap();
        assert_eq!(monic, sol);
    }

    #[test]
    fn askey_wilson_q_racah_beta() {
        // the base q = 2 enters θ_i through q^i and q^{-i}, so β = q + 1/q
        let sol = solve_askey_wilson(&realize(&qr3(), Basis::Split).unwrap()).unwrap();
        assert_eq!(sol.params.beta, q("5/2"));
    }

    #[test]
    fn askey_wilson_small_diameter_is_flagged() {
        let pa = ParameterArray::from_i64(FieldSpec::Rationals, &[1, 3], &[0, 1], &[5], &[7]).unwrap();
        let sol = solve_askey_wilson(&realize(&pa, Basis::Standard).unwrap()).unwrap();
        assert!(!sol.unique);
        assert!(sol.rank < 8);
    }

    #[test]
    fn askey_wilson_rejects_non_leonard_pair() {
        let f = FieldSpec::Rationals;
        let a = Matrix::from_i64(f, &[&[0, 1, 0, 0], &[1, 0, 1, 0], &[0, 1, 0, 1], &[0, 0, 1, 5]]);
        let astar = Matrix::from_i64(f, &[&[1, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 4, 0], &[0, 0, 0, 9]]);
        let r = Realization { basis: Basis::Standard, a, astar, pa: kr3() };
        assert!(matches!(solve_askey_wilson(&r), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn recognize_split_form() {
        let pa = kr3();
        let r = realize(&pa, Basis::Split).unwrap();
        assert_eq!(recognize_bidiagonal(&r.a, &r.astar, pa.field).unwrap(), Some(pa.clone()));
        let (mut a, mut s) = (r.a.clone(), r.astar.clone());
        for i in 1..=pa.d {
            a[(i, i - 1)] = q("2");
            s[(i - 1, i)] = pa.varphi_at(i).try_div(&q("2")).unwrap();
        }
        assert_eq!(recognize_bidiagonal(&a, &s, pa.field).unwrap(), Some(pa.clone()));
        a[(2, 2)] = a[(1, 1)].clone();
        assert_eq!(recognize_bidiagonal(&a, &s, pa.field).unwrap(), None);
        assert!(matches!(recognize_bidiagonal(&r.astar, &r.a, pa.field), Err(Error::Shape(_))));
    }

    #[test]
    fn tridiagonal_against_candidate() {
        let pa = kr3();
        let r = realize(&pa, Basis::Standard).unwrap();
        let astar = Matrix::diag(pa.field, &pa.theta_star);
        assert!(check_tridiag_diag(&r.a, &astar, &pa).unwrap().all_passed());
        let mut a = r.a.clone();
        a[(1, 0)] = &a[(1, 0)] * &q("2");
        a[(0, 1)] = &a[(0, 1)] * &q("1/2");
        assert!(check_tridiag_diag(&a, &astar, &pa).unwrap().all_passed());
        a[(1, 1)] = &a[(1, 1)] + &q("1");
        let report = check_tridiag_diag(&a, &astar, &pa).unwrap();
        let failed: Vec<&Check> = report.failures().collect();
        assert_eq!(failed.len(), 1);
        assert_eq!(failed[0].name, "tridiag.diagonal");
        assert_eq!(failed[0].witness.as_ref().unwrap().indices["i"], 1);
        assert!(matches!(check_tridiag_diag(&astar, &r.a, &pa), Err(Error::Shape(_))));
    }
}
