//! Recovering family parameters from a parameter array.

use std::fmt;

use super::{make_family, FamilyParams, FamilyTag};
use crate::error::{Error, Result};
use crate::field::{solve_quadratic, Elem, FieldSpec};
use crate::linalg::{solve_linear, Matrix};
use crate::parray::{beta_plus_one, validate, ParameterArray};

/// The four cases of the classification, by the shape of the eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    /// `θ_i = η + μq^i + hq^{−i}` with `q ≠ ±1`.
    I,
    /// `θ_i = η + (μ+h)i + hi²`.
    II,
    /// `θ_i = η + μ(−1)^i + 2hi(−1)^i`.
    III,
    /// Characteristic 2 with `β = 0`; only the orphan family.
    IV,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Outcome of [`classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationResult {
    /// The case, or `None` when no family could be fitted for `d ≤ 2`.
    pub case: Option<Case>,
    /// Family parameters that regenerate the input exactly, at most one per
    /// family, in family order.
    pub matches: Vec<FamilyParams>,
    /// Coefficients `[a, b, c]` of a quadratic `ax² + bx + c` whose roots lie
    /// outside the field and were needed for some family.
    pub extension_required: Option<Vec<Elem>>,
}

/// One eigenvalue sequence written as `η + a·f_i + b·g_i`.
#[derive(Clone, Debug)]
struct Fit {
    a: Elem,
    b: Elem,
}

struct Classifier<'a> {
    pa: &'a ParameterArray,
    field: FieldSpec,
    d: usize,
    matches: Vec<FamilyParams>,
    extension: Option<Vec<Elem>>,
}

/// Finds every family whose generator reproduces `pa`.
///
/// For `d ≥ 3` the case is fixed by `β`; for `1 ≤ d ≤ 2` every case is
/// attempted, with a short list of candidate bases `q` for the q-families;
/// for `d = 0` each family is tried with small parameter values.
pub fn classify(pa: &ParameterArray) -> Result<ClassificationResult> {
    pa.check_shape()?;
    let violations = validate(pa)?;
    if !violations.is_empty() {
        return Err(Error::InvalidArray(violations));
    }
    let field = pa.field;
    let mut c = Classifier { pa, field, d: pa.d, matches: Vec::new(), extension: None };
    let mut case = None;
    if pa.d >= 3 {
        let xi = beta_plus_one(pa).ok_or_else(|| Error::Internal("β is undetermined for d ≥ 3".into()))?;
        let one = field.one();
        let b = -&(&xi - &one);
        let roots = solve_quadratic(&one, &b, &one)?;
        if roots.is_empty() {
            return Ok(ClassificationResult { case: Some(Case::I), matches: Vec::new(), extension_required: Some(vec![one.clone(), b, one]) });
        }
        let q = &roots[0];
        let found = if q.is_one() {
            if field.characteristic() == 2 {
                Case::IV
            } else {
                Case::II
            }
        } else if *q == -&one {
            Case::III
        } else {
            Case::I
        };
        match found {
            Case::I => {
                for q in &roots {
                    c.case_one(q);
                }
            }
            Case::II => c.case_two(),
            Case::III => c.case_three(),
            Case::IV => c.case_four(),
        }
        case = Some(found);
    } else if pa.d == 0 {
        c.trivial();
    } else {
        c.case_two();
        c.case_three();
        for q in q_candidates(field) {
            c.case_one(&q);
        }
    }
    let mut matches = std::mem::take(&mut c.matches);
    matches.sort_by_key(|m| m.family.index());
    matches.dedup_by_key(|m| m.family);
    if pa.d < 3 {
        case = matches.first().map(|m| m.family.case());
        if !matches.is_empty() {
            c.extension = None;
        }
    }
    Ok(ClassificationResult { case, matches, extension_required: c.extension })
}

fn q_candidates(field: FieldSpec) -> Vec<Elem> {
    let mut base: Vec<Elem> = match field {
        FieldSpec::Binary { .. } => (2..=5).filter_map(|i| field.element(i)).collect(),
        _ => [2, 3, -2, 4, 5].iter().map(|&i| field.from_i64(i)).collect(),
    };
    let inverses: Vec<Elem> = base.iter().filter_map(|x| x.inv().ok()).collect();
    base.extend(inverses);
    let one = field.one();
    let mut out: Vec<Elem> = Vec::new();
    for q in base {
        if !q.is_zero() && q.square() != one && !out.contains(&q) {
            out.push(q);
        }
    }
    out
}

fn small_values(field: FieldSpec) -> Vec<Elem> {
    let raw: Vec<Elem> = match field {
        FieldSpec::Binary { .. } => (1..=3).filter_map(|i| field.element(i)).collect(),
        _ => [1, 2, 3, -1].iter().map(|&i| field.from_i64(i)).collect(),
    };
    let mut out: Vec<Elem> = Vec::new();
    for x in raw {
        if !x.is_zero() && !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

impl<'a> Classifier<'a> {
    fn n(&self, i: i64) -> Elem {
        self.field.from_i64(i)
    }

    fn one(&self) -> Elem {
        self.field.one()
    }

    fn phi1(&self) -> Elem {
        self.pa.varphi_at(1)
    }

    fn base(&self, family: FamilyTag) -> FamilyParams {
        FamilyParams::new(family, self.d)
            .with("theta0", self.pa.theta[0].clone())
            .with("thetastar0", self.pa.theta_star[0].clone())
    }

    fn offer(&mut self, fp: FamilyParams) {
        if let Ok(arr) = make_family(&fp, self.field) {
            if arr == *self.pa {
                self.matches.push(fp);
            }
        }
    }

    fn offer_all(&mut self, fps: Result<Vec<FamilyParams>>) {
        if let Ok(fps) = fps {
            for fp in fps {
                self.offer(fp);
            }
        }
    }

    /// Roots of `x² − sx + p`; records an extension when there are none.
    fn roots(&mut self, s: &Elem, p: &Elem) -> Vec<Elem> {
        let one = self.one();
        let b = -s;
        match solve_quadratic(&one, &b, p) {
            Ok(r) if !r.is_empty() => r,
            _ => {
                if self.extension.is_none() {
                    self.extension = Some(vec![one, b, p.clone()]);
                }
                Vec::new()
            }
        }
    }

    /// All ways to write `seq` as `η + a f_i + b g_i`. Three or more values
    /// determine the fit; two values leave one degree of freedom, resolved by
    /// `a = 0`, `b = 0` or `a = k b` for each `k` in `ratios`.
    fn fits(&self, seq: &[Elem], f: &[Elem], g: &[Elem], ratios: &[Elem]) -> Vec<Fit> {
        let field = self.field;
        let mut out = Vec::new();
        if seq.len() >= 3 {
            let rows = (0..3).map(|i| vec![field.one(), f[i].clone(), g[i].clone()]).collect();
            let Ok(m) = Matrix::from_rows(field, rows) else { return out };
            let rhs = Matrix::column_vector(field, &seq[..3]);
            if let Ok(Some(x)) = solve_linear(&m, &rhs) {
                let (eta, a, b) = (x[(0, 0)].clone(), x[(1, 0)].clone(), x[(2, 0)].clone());
                if (0..seq.len()).all(|i| seq[i] == &(&eta + &(&a * &f[i])) + &(&b * &g[i])) {
                    out.push(Fit { a, b });
                }
            }
        } else if seq.len() == 2 {
            let diff = &seq[1] - &seq[0];
            let (df, dg) = (&f[1] - &f[0], &g[1] - &g[0]);
            if let Ok(b) = diff.try_div(&dg) {
                out.push(Fit { a: field.zero(), b });
            }
            if let Ok(a) = diff.try_div(&df) {
                out.push(Fit { a, b: field.zero() });
            }
            for k in ratios {
                if let Ok(b) = diff.try_div(&(&(k * &df) + &dg)) {
                    out.push(Fit { a: k * &b, b });
                }
            }
        }
        out
    }

    fn case_one(&mut self, q: &Elem) {
        let d = self.d as i64;
        let pows = |sign: i64| -> Option<Vec<Elem>> { (0..=d).map(|i| q.pow(sign * i).ok()).collect() };
        let (Some(f), Some(g)) = (pows(1), pows(-1)) else { return };
        let ratios = [q.clone()];
        let fits = self.fits(&self.pa.theta, &f, &g, &ratios);
        let fits_star = self.fits(&self.pa.theta_star, &f, &g, &ratios);
        for t in &fits {
            for ts in &fits_star {
                let fps = self.case_one_params(q, t, ts);
                self.offer_all(fps);
            }
        }
    }

    fn case_one_params(&mut self, q: &Elem, t: &Fit, ts: &Fit) -> Result<Vec<FamilyParams>> {
        let d = self.d as i64;
        let one = self.one();
        let phi1 = self.phi1();
        let (h, hs) = (t.b.clone(), ts.b.clone());
        // s from μ = h s q, and the quantum side from μ = s q
        let s_full = |fit: &Fit| fit.a.try_div(&(&fit.b * q));
        let common = &(&one - q) * &(&one - &q.pow(-d)?);
        let k = &(&(&h * &hs) * &q.inv()?) * &common;
        // r from φ_1 = K(1 − rq)
        let r_single = || -> Result<Elem> { (&one - &phi1.try_div(&k)?).try_div(q) };
        let mut out = Vec::new();
        if let (Ok(s), Ok(ss)) = (s_full(t), s_full(ts)) {
            let p = &(&s * &ss) * &q.pow(d + 1)?;
            let sum = (&(&one + &(&q.square() * &p)) - &phi1.try_div(&k)?).try_div(q)?;
            for r1 in self.roots(&sum, &p) {
                let r2 = &sum - &r1;
                out.push(
                    self.base(FamilyTag::QRacah).with("q", q.clone())
                        .with("h", h.clone())
                        .with("hstar", hs.clone())
                        .with("s", s.clone())
                        .with("sstar", ss.clone())
                        .with("r1", r1)
                        .with("r2", r2),
                );
            }
        }
        if let Ok(r) = r_single() {
            if let Ok(ss) = s_full(ts) {
                out.push(self.base(FamilyTag::QHahn).with("q", q.clone()).with("h", h.clone()).with("hstar", hs.clone()).with("sstar", ss).with("r", r.clone()));
            }
            if let Ok(s) = s_full(t) {
                out.push(self.base(FamilyTag::DualQHahn).with("q", q.clone()).with("h", h.clone()).with("hstar", hs.clone()).with("s", s).with("r", r.clone()));
            }
            out.push(self.base(FamilyTag::AffineQKrawtchouk).with("q", q.clone()).with("h", h.clone()).with("hstar", hs.clone()).with("r", r));
        }
        if let Ok(r) = (-&phi1).try_div(&(&hs * &common)) {
            if let Ok(s) = t.a.try_div(q) {
                out.push(self.base(FamilyTag::QuantumQKrawtchouk).with("q", q.clone()).with("hstar", hs.clone()).with("s", s).with("r", r));
            }
        }
        if let Ok(ss) = s_full(ts) {
            out.push(self.base(FamilyTag::QKrawtchouk).with("q", q.clone()).with("h", h.clone()).with("hstar", hs.clone()).with("sstar", ss));
        }
        if let Ok(s) = s_full(t) {
            out.push(self.base(FamilyTag::DualQKrawtchouk).with("q", q.clone()).with("h", h).with("hstar", hs).with("s", s));
        }
        Ok(out)
    }

    fn case_two(&mut self) {
        let d = self.d as i64;
        let f: Vec<Elem> = (0..=d).map(|i| self.n(i)).collect();
        let g: Vec<Elem> = (0..=d).map(|i| self.n(i * i)).collect();
        let ratios = [self.one(), self.n(2)];
        let fits = self.fits(&self.pa.theta, &f, &g, &ratios);
        let fits_star = self.fits(&self.pa.theta_star, &f, &g, &ratios);
        for t in &fits {
            for ts in &fits_star {
                let fps = self.case_two_params(t, ts);
                self.offer_all(fps);
            }
        }
    }

    fn case_two_params(&mut self, t: &Fit, ts: &Fit) -> Result<Vec<FamilyParams>> {
        let d = self.d as i64;
        let one = self.one();
        let phi1 = self.phi1();
        let md = self.n(-d);
        let mut out = Vec::new();
        // θ_i = θ_0 + h i(i+1+s) has a = h(1+s), b = h
        let s_quad = |fit: &Fit| (&fit.a - &fit.b).try_div(&fit.b);
        if let (Ok(s), Ok(ss)) = (s_quad(t), s_quad(ts)) {
            let (h, hs) = (t.b.clone(), ts.b.clone());
            let sum = &(&s + &ss) + &self.n(d + 1);
            let y = phi1.try_div(&(&(&h * &hs) * &md))?;
            let p = &(&y - &one) - &sum;
            for r1 in self.roots(&sum, &p) {
                let r2 = &sum - &r1;
                out.push(
                    self.base(FamilyTag::Racah)
                        .with("h", h.clone())
                        .with("hstar", hs.clone())
                        .with("s", s.clone())
                        .with("sstar", ss.clone())
                        .with("r1", r1)
                        .with("r2", r2),
                );
            }
        }
        if let Ok(ss) = s_quad(ts) {
            let (s, hs) = (t.a.clone(), ts.b.clone());
            if let Ok(y) = phi1.try_div(&(&(&hs * &s) * &md)) {
                out.push(self.base(FamilyTag::Hahn).with("hstar", hs).with("s", s).with("sstar", ss).with("r", &y - &one));
            }
        }
        if let Ok(s) = s_quad(t) {
            let (h, ss) = (t.b.clone(), ts.a.clone());
            if let Ok(y) = phi1.try_div(&(&(&h * &ss) * &md)) {
                out.push(self.base(FamilyTag::DualHahn).with("h", h).with("s", s).with("sstar", ss).with("r", &y - &one));
            }
        }
        if let Ok(r) = phi1.try_div(&md) {
            out.push(self.base(FamilyTag::Krawtchouk).with("s", t.a.clone()).with("sstar", ts.a.clone()).with("r", r));
        }
        Ok(out)
    }

    fn case_three(&mut self) {
        let d = self.d as i64;
        let sign = |i: i64| if i % 2 == 0 { self.one() } else { -&self.one() };
        let f: Vec<Elem> = (0..=d).map(sign).collect();
        let g: Vec<Elem> = (0..=d).map(|i| &self.n(2 * i) * &sign(i)).collect();
        let ratios = [self.one()];
        let fits = self.fits(&self.pa.theta, &f, &g, &ratios);
        let fits_star = self.fits(&self.pa.theta_star, &f, &g, &ratios);
        for t in &fits {
            for ts in &fits_star {
                let fps = self.case_three_params(t, ts);
                self.offer_all(fps);
            }
        }
    }

    fn case_three_params(&mut self, t: &Fit, ts: &Fit) -> Result<Vec<FamilyParams>> {
        let d = self.d as i64;
        let one = self.one();
        let phi1 = self.phi1();
        let (h, hs) = (t.b.clone(), ts.b.clone());
        let s = &one - &t.a.try_div(&h)?;
        let ss = &one - &ts.a.try_div(&hs)?;
        let sum = &(&self.n(d + 1) - &s) - &ss;
        let four_hh = &self.n(4) * &(&h * &hs);
        let mut pairs = Vec::new();
        if d % 2 == 1 {
            // y = 1 + r with y_1 + y_2 = sum + 2 and y_1 y_2 = −φ_1/(4hh*)
            let prod = (-&phi1).try_div(&four_hh)?;
            for y in self.roots(&(&sum + &self.n(2)), &prod) {
                let r1 = &y - &one;
                let r2 = &sum - &r1;
                pairs.push((r1, r2));
            }
        } else {
            let r2 = &phi1.try_div(&(&four_hh * &self.n(d)))? - &one;
            pairs.push((&sum - &r2, r2));
        }
        Ok(pairs
            .into_iter()
            .map(|(r1, r2)| {
                self.base(FamilyTag::BannaiIto)
                    .with("h", h.clone())
                    .with("hstar", hs.clone())
                    .with("s", s.clone())
                    .with("sstar", ss.clone())
                    .with("r1", r1)
                    .with("r2", r2)
            })
            .collect())
    }

    fn case_four(&mut self) {
        let fps = (|| -> Result<Vec<FamilyParams>> {
            let (th, ts) = (&self.pa.theta, &self.pa.theta_star);
            let h = &th[0] + &th[2];
            let s = (&th[0] + &th[3]).try_div(&h)?;
            let hs = &ts[0] + &ts[2];
            let ss = (&ts[0] + &ts[3]).try_div(&hs)?;
            let r = self.phi1().try_div(&(&h * &hs))?;
            Ok(vec![self
                .base(FamilyTag::Orphan)
                .with("h", h)
                .with("hstar", hs)
                .with("s", s)
                .with("sstar", ss)
                .with("r", r)])
        })();
        self.offer_all(fps);
    }

    /// `d = 0`: every array `(θ_0, θ*_0)` is valid; each family is tried with
    /// its free parameters drawn from a few small values, and parameters
    /// tied by an equation are solved for.
    fn trivial(&mut self) {
        let vals = small_values(self.field);
        for fam in FamilyTag::ALL {
            if fam == FamilyTag::Orphan {
                continue;
            }
            let derived = match fam {
                FamilyTag::QRacah | FamilyTag::Racah | FamilyTag::BannaiIto => Some("r2"),
                _ => None,
            };
            let free: Vec<&str> = fam
                .param_names()
                .iter()
                .copied()
                .filter(|n| !matches!(*n, "theta0" | "thetastar0") && Some(*n) != derived)
                .collect();
            let total = vals.len().pow(free.len() as u32);
            for code in 0..total {
                let mut fp = self.base(fam);
                let mut c = code;
                for name in &free {
                    fp = fp.with(name, vals[c % vals.len()].clone());
                    c /= vals.len();
                }
                if let Some(name) = derived {
                    let Ok(v) = self.derived_r2(&fp) else { continue };
                    fp = fp.with(name, v);
                }
                let before = self.matches.len();
                self.offer(fp);
                if self.matches.len() > before {
                    break;
                }
            }
        }
    }

    fn derived_r2(&self, fp: &FamilyParams) -> Result<Elem> {
        let g = |n: &str| fp.get(n).cloned();
        let d = self.d as i64;
        match fp.family {
            FamilyTag::QRacah => (&(&g("s")? * &g("sstar")?) * &g("q")?.pow(d + 1)?).try_div(&g("r1")?),
            FamilyTag::Racah => Ok(&(&(&g("s")? + &g("sstar")?) + &self.n(d + 1)) - &g("r1")?),
            _ => Ok(&(&(&self.n(d + 1) - &g("s")?) - &g("sstar")?) - &g("r1")?),
        }
    }
}
