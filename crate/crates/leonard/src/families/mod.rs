//! The thirteen parameter-array families, their classifier and the
//! hypergeometric description of their polynomials.

mod classify;
mod fixtures;
mod hypergeom;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::parray::{validate, ParameterArray};

pub use classify::{classify, Case, ClassificationResult};
pub use fixtures::{kr3, kr3_params, orph4, orph4_params, qr3, qr3_params};
pub use hypergeom::{hypergeom, HyperKind, MAX_TERMS};

/// One of the thirteen families, in the order they are usually listed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    QRacah,
    QHahn,
    DualQHahn,
    QuantumQKrawtchouk,
    QKrawtchouk,
    AffineQKrawtchouk,
    DualQKrawtchouk,
    Racah,
    Hahn,
    DualHahn,
    Krawtchouk,
    BannaiIto,
    Orphan,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 13] = [
        FamilyTag::QRacah,
        FamilyTag::QHahn,
        FamilyTag::DualQHahn,
        FamilyTag::QuantumQKrawtchouk,
        FamilyTag::QKrawtchouk,
        FamilyTag::AffineQKrawtchouk,
        FamilyTag::DualQKrawtchouk,
        FamilyTag::Racah,
        FamilyTag::Hahn,
        FamilyTag::DualHahn,
        FamilyTag::Krawtchouk,
        FamilyTag::BannaiIto,
        FamilyTag::Orphan,
    ];

    /// Snake-case name used in JSON and on the command line.
    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::QRacah => "q_racah",
            FamilyTag::QHahn => "q_hahn",
            FamilyTag::DualQHahn => "dual_q_hahn",
            FamilyTag::QuantumQKrawtchouk => "quantum_q_krawtchouk",
            FamilyTag::QKrawtchouk => "q_krawtchouk",
            FamilyTag::AffineQKrawtchouk => "affine_q_krawtchouk",
            FamilyTag::DualQKrawtchouk => "dual_q_krawtchouk",
            FamilyTag::Racah => "racah",
            FamilyTag::Hahn => "hahn",
            FamilyTag::DualHahn => "dual_hahn",
            FamilyTag::Krawtchouk => "krawtchouk",
            FamilyTag::BannaiIto => "bannai_ito",
            FamilyTag::Orphan => "orphan",
        }
    }

    /// The classification case the family belongs to.
    pub fn case(self) -> Case {
        match self {
            FamilyTag::QRacah
            | FamilyTag::QHahn
            | FamilyTag::DualQHahn
            | FamilyTag::QuantumQKrawtchouk
            | FamilyTag::QKrawtchouk
            | FamilyTag::AffineQKrawtchouk
            | FamilyTag::DualQKrawtchouk => Case::I,
            FamilyTag::Racah | FamilyTag::Hahn | FamilyTag::DualHahn | FamilyTag::Krawtchouk => Case::II,
            FamilyTag::BannaiIto => Case::III,
            FamilyTag::Orphan => Case::IV,
        }
    }

    /// Names of the parameters the family is built from.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            FamilyTag::QRacah => &["theta0", "thetastar0", "q", "h", "hstar", "s", "sstar", "r1", "r2"],
            FamilyTag::QHahn => &["theta0", "thetastar0", "q", "h", "hstar", "sstar", "r"],
            FamilyTag::DualQHahn => &["theta0", "thetastar0", "q", "h", "hstar", "s", "r"],
            FamilyTag::QuantumQKrawtchouk => &["theta0", "thetastar0", "q", "hstar", "s", "r"],
            FamilyTag::QKrawtchouk => &["theta0", "thetastar0", "q", "h", "hstar", "sstar"],
            FamilyTag::AffineQKrawtchouk => &["theta0", "thetastar0", "q", "h", "hstar", "r"],
            FamilyTag::DualQKrawtchouk => &["theta0", "thetastar0", "q", "h", "hstar", "s"],
            FamilyTag::Racah | FamilyTag::BannaiIto => &["theta0", "thetastar0", "h", "hstar", "s", "sstar", "r1", "r2"],
            FamilyTag::Hahn => &["theta0", "thetastar0", "hstar", "s", "sstar", "r"],
            FamilyTag::DualHahn => &["theta0", "thetastar0", "h", "s", "sstar", "r"],
            FamilyTag::Krawtchouk => &["theta0", "thetastar0", "s", "sstar", "r"],
            FamilyTag::Orphan => &["theta0", "thetastar0", "h", "hstar", "s", "sstar", "r"],
        }
    }

    fn index(self) -> usize {
        FamilyTag::ALL.iter().position(|&t| t == self).unwrap_or(0)
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown family {s:?}")))
    }
}

/// A family tag, a diameter and named parameter values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    pub family: FamilyTag,
    pub d: usize,
    pub params: BTreeMap<String, Elem>,
}

impl FamilyParams {
    pub fn new(family: FamilyTag, d: usize) -> Self {
        FamilyParams { family, d, params: BTreeMap::new() }
    }

    /// Builder-style insertion of one parameter.
    pub fn with(mut self, name: &str, value: Elem) -> Self {
        self.params.insert(name.to_string(), value);
        self
    }

    pub fn get(&self, name: &str) -> Result<&Elem> {
        self.params
            .get(name)
            .ok_or_else(|| Error::Precondition(format!("{} is missing parameter {name}", self.family)))
    }

    /// Checks that exactly the family's parameters are present and lie in `field`.
    pub fn check_params(&self, field: FieldSpec) -> Result<()> {
        let names = self.family.param_names();
        for name in names {
            let v = self.get(name)?;
            if !field.contains(v) {
                return Err(Error::NotInField(format!("parameter {name} = {v} is not in {field}")));
            }
        }
        if let Some(extra) = self.params.keys().find(|k| !names.contains(&k.as_str())) {
            return Err(Error::Precondition(format!("{} has no parameter {extra}", self.family)));
        }
        Ok(())
    }
}

/// One listed assumption of a family, evaluated on concrete parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    /// Human-readable form of the assumption, e.g. `sstar*q^3 != 1`.
    pub label: String,
    /// The assumption with the running index left symbolic, e.g. `sstar*q^i/r1 != 1`.
    pub rule: String,
    pub holds: bool,
    /// How a failure reads in an error message.
    pub failure: String,
}

struct Conds {
    list: Vec<Condition>,
}

impl Conds {
    fn new() -> Self {
        Conds { list: Vec::new() }
    }

    fn nonzero(&mut self, name: &str, v: &Elem) {
        self.list.push(Condition {
            label: format!("{name} != 0"),
            rule: format!("{name} != 0"),
            holds: !v.is_zero(),
            failure: format!("{name} = 0"),
        });
    }

    fn not_value(&mut self, rule: &str, expr: &str, v: &Elem, target: &Elem) {
        self.list.push(Condition {
            label: format!("{expr} != {target}"),
            rule: rule.to_string(),
            holds: v != target,
            failure: format!("{expr} = {target}"),
        });
    }

    fn equal(&mut self, expr: &str, lhs: &Elem, rhs_expr: &str, rhs: &Elem) {
        self.list.push(Condition {
            label: format!("{expr} = {rhs_expr}"),
            rule: format!("{expr} = {rhs_expr}"),
            holds: lhs == rhs,
            failure: format!("{expr} = {lhs} differs from {rhs_expr} = {rhs}"),
        });
    }

    fn char_check(&mut self, label: &str, holds: bool, p: u64) {
        self.list.push(Condition { label: label.to_string(), rule: label.to_string(), holds, failure: format!("characteristic {p}") });
    }
}

fn int(f: FieldSpec, i: i64) -> Elem {
    f.from_i64(i)
}

/// Every listed assumption of the family, evaluated on `fp`.
///
/// A condition that divides by a parameter is skipped when that parameter
/// is zero; its own nonzero condition already fails.
pub fn family_conditions(fp: &FamilyParams, field: FieldSpec) -> Result<Vec<Condition>> {
    fp.check_params(field)?;
    let d = fp.d as i64;
    let f = field;
    let one = f.one();
    let p = field.characteristic();
    let mut c = Conds::new();
    let g = |n: &str| fp.get(n).cloned();
    let ordinary_char = |c: &mut Conds| c.char_check(&format!("char is 0 or a prime > {d}"), p == 0 || p > d as u64, p);
    match fp.family {
        FamilyTag::QRacah
        | FamilyTag::QHahn
        | FamilyTag::DualQHahn
        | FamilyTag::QuantumQKrawtchouk
        | FamilyTag::QKrawtchouk
        | FamilyTag::AffineQKrawtchouk
        | FamilyTag::DualQKrawtchouk => {
            let q = g("q")?;
            for name in fp.family.param_names() {
                if matches!(*name, "theta0" | "thetastar0") {
                    continue;
                }
                c.nonzero(name, &g(name)?);
            }
            let qi = |i: i64| q.pow(i);
            let has = |n: &str| fp.params.contains_key(n);
            if fp.family == FamilyTag::QRacah {
                let lhs = &g("r1")? * &g("r2")?;
                let rhs = &(&g("s")? * &g("sstar")?) * &qi(d + 1)?;
                c.equal("r1*r2", &lhs, "s*sstar*q^(d+1)", &rhs);
            }
            for i in 1..=d {
                let q_i = qi(i)?;
                c.not_value("q^i != 1", &format!("q^{i}"), &q_i, &one);
                match fp.family {
                    FamilyTag::QRacah => {
                        let (r1, r2, ss) = (g("r1")?, g("r2")?, g("sstar")?);
                        c.not_value("r1*q^i != 1", &format!("r1*q^{i}"), &(&r1 * &q_i), &one);
                        c.not_value("r2*q^i != 1", &format!("r2*q^{i}"), &(&r2 * &q_i), &one);
                        if let Ok(v) = (&ss * &q_i).try_div(&r1) {
                            c.not_value("sstar*q^i/r1 != 1", &format!("sstar*q^{i}/r1"), &v, &one);
                        }
                        if let Ok(v) = (&ss * &q_i).try_div(&r2) {
                            c.not_value("sstar*q^i/r2 != 1", &format!("sstar*q^{i}/r2"), &v, &one);
                        }
                    }
                    FamilyTag::QHahn => {
                        let (r, ss) = (g("r")?, g("sstar")?);
                        c.not_value("r*q^i != 1", &format!("r*q^{i}"), &(&r * &q_i), &one);
                        if let Ok(v) = (&ss * &q_i).try_div(&r) {
                            c.not_value("sstar*q^i/r != 1", &format!("sstar*q^{i}/r"), &v, &one);
                        }
                    }
                    FamilyTag::DualQHahn => {
                        let (r, s) = (g("r")?, g("s")?);
                        c.not_value("r*q^i != 1", &format!("r*q^{i}"), &(&r * &q_i), &one);
                        if let Ok(v) = (&s * &q_i).try_div(&r) {
                            c.not_value("s*q^i/r != 1", &format!("s*q^{i}/r"), &v, &one);
                        }
                    }
                    FamilyTag::QuantumQKrawtchouk => {
                        let (r, s) = (g("r")?, g("s")?);
                        if let Ok(v) = (&s * &q_i).try_div(&r) {
                            c.not_value("s*q^i/r != 1", &format!("s*q^{i}/r"), &v, &one);
                        }
                    }
                    FamilyTag::AffineQKrawtchouk => {
                        c.not_value("r*q^i != 1", &format!("r*q^{i}"), &(&g("r")? * &q_i), &one);
                    }
                    _ => {}
                }
            }
            for i in 2..=2 * d {
                let q_i = qi(i)?;
                if has("s") && fp.family != FamilyTag::QuantumQKrawtchouk {
                    c.not_value("s*q^i != 1", &format!("s*q^{i}"), &(&g("s")? * &q_i), &one);
                }
                if has("sstar") {
                    c.not_value("sstar*q^i != 1", &format!("sstar*q^{i}"), &(&g("sstar")? * &q_i), &one);
                }
            }
        }
        FamilyTag::Racah => {
            let (h, hs, s, ss, r1, r2) = (g("h")?, g("hstar")?, g("s")?, g("sstar")?, g("r1")?, g("r2")?);
            c.nonzero("h", &h);
            c.nonzero("hstar", &hs);
            c.equal("r1+r2", &(&r1 + &r2), "s+sstar+d+1", &(&(&s + &ss) + &int(f, d + 1)));
            ordinary_char(&mut c);
            for i in 1..=d {
                let mi = int(f, -i);
                c.not_value("r1 != -i", "r1", &r1, &mi);
                c.not_value("r2 != -i", "r2", &r2, &mi);
                c.not_value("sstar-r1 != -i", "sstar-r1", &(&ss - &r1), &mi);
                c.not_value("sstar-r2 != -i", "sstar-r2", &(&ss - &r2), &mi);
            }
            for i in 2..=2 * d {
                let mi = int(f, -i);
                c.not_value("s != -i", "s", &s, &mi);
                c.not_value("sstar != -i", "sstar", &ss, &mi);
            }
        }
        FamilyTag::Hahn => {
            let (hs, s, ss, r) = (g("hstar")?, g("s")?, g("sstar")?, g("r")?);
            c.nonzero("hstar", &hs);
            c.nonzero("s", &s);
            ordinary_char(&mut c);
            for i in 1..=d {
                let mi = int(f, -i);
                c.not_value("r != -i", "r", &r, &mi);
                c.not_value("sstar-r != -i", "sstar-r", &(&ss - &r), &mi);
            }
            for i in 2..=2 * d {
                c.not_value("sstar != -i", "sstar", &ss, &int(f, -i));
            }
        }
        FamilyTag::DualHahn => {
            let (h, s, ss, r) = (g("h")?, g("s")?, g("sstar")?, g("r")?);
            c.nonzero("h", &h);
            c.nonzero("sstar", &ss);
            ordinary_char(&mut c);
            for i in 1..=d {
                let mi = int(f, -i);
                c.not_value("r != -i", "r", &r, &mi);
                c.not_value("s-r != -i", "s-r", &(&s - &r), &mi);
            }
            for i in 2..=2 * d {
                c.not_value("s != -i", "s", &s, &int(f, -i));
            }
        }
        FamilyTag::Krawtchouk => {
            let (s, ss, r) = (g("s")?, g("sstar")?, g("r")?);
            c.nonzero("r", &r);
            c.nonzero("s", &s);
            c.nonzero("sstar", &ss);
            ordinary_char(&mut c);
            c.not_value("r != s*sstar", "r", &r, &(&s * &ss));
        }
        FamilyTag::BannaiIto => {
            let (h, hs, s, ss, r1, r2) = (g("h")?, g("hstar")?, g("s")?, g("sstar")?, g("r1")?, g("r2")?);
            c.nonzero("h", &h);
            c.nonzero("hstar", &hs);
            c.equal("r1+r2", &(&r1 + &r2), "-s-sstar+d+1", &(&int(f, d + 1) - &(&s + &ss)));
            c.char_check(
                &format!("char is 0 or an odd prime > {d}/2"),
                p == 0 || (p % 2 == 1 && 2 * p > d as u64),
                p,
            );
            for i in 1..=d {
                let mi = int(f, -i);
                if (d - i) % 2 == 0 {
                    c.not_value("r1 != -i", "r1", &r1, &mi);
                    c.not_value("-sstar-r1 != -i", "-sstar-r1", &(&(-&ss) - &r1), &mi);
                }
                if i % 2 == 1 {
                    c.not_value("r2 != -i", "r2", &r2, &mi);
                    c.not_value("-sstar-r2 != -i", "-sstar-r2", &(&(-&ss) - &r2), &mi);
                }
                let two_i = int(f, 2 * i);
                c.not_value("s != 2i", "s", &s, &two_i);
                c.not_value("sstar != 2i", "sstar", &ss, &two_i);
            }
        }
        FamilyTag::Orphan => {
            let (h, hs, s, ss, r) = (g("h")?, g("hstar")?, g("s")?, g("sstar")?, g("r")?);
            c.char_check("char is 2", p == 2, p);
            c.list.push(Condition { label: "d = 3".into(), rule: "d = 3".into(), holds: d == 3, failure: format!("d = {d}") });
            for (name, v) in [("h", &h), ("hstar", &hs), ("s", &s), ("sstar", &ss), ("r", &r)] {
                c.nonzero(name, v);
            }
            c.not_value("s != 1", "s", &s, &one);
            c.not_value("sstar != 1", "sstar", &ss, &one);
            c.not_value("r != s+sstar", "r", &r, &(&s + &ss));
            c.not_value("r != s*(1+sstar)", "r", &r, &(&s * &(&one + &ss)));
            c.not_value("r != sstar*(1+s)", "r", &r, &(&ss * &(&one + &s)));
        }
    }
    Ok(c.list)
}

/// Builds the family's parameter array after checking every listed
/// assumption; the result is asserted to satisfy PA1–PA5.
pub fn make_family(fp: &FamilyParams, field: FieldSpec) -> Result<ParameterArray> {
    let conds = family_conditions(fp, field)?;
    if let Some(bad) = conds.iter().find(|c| !c.holds) {
        return Err(Error::Precondition(format!("{} violates {} condition {}", bad.failure, fp.family, bad.label)));
    }
    let pa = make_family_unchecked(fp, field)?;
    let violations = validate(&pa)?;
    if !violations.is_empty() {
        return Err(Error::Internal(format!("{} generator produced an invalid array: {}", fp.family, violations[0])));
    }
    Ok(pa)
}

/// Direct substitution into the family formulas, without the assumptions.
pub fn make_family_unchecked(fp: &FamilyParams, field: FieldSpec) -> Result<ParameterArray> {
    fp.check_params(field)?;
    let f = field;
    let d = fp.d as i64;
    let one = f.one();
    let g = |n: &str| fp.get(n).cloned();
    let n = |i: i64| int(f, i);
    let th0 = g("theta0")?;
    let ths0 = g("thetastar0")?;
    let mut theta = Vec::new();
    let mut theta_star = Vec::new();
    let mut varphi = Vec::new();
    let mut phi = Vec::new();
    match fp.family {
        FamilyTag::QRacah
        | FamilyTag::QHahn
        | FamilyTag::DualQHahn
        | FamilyTag::QuantumQKrawtchouk
        | FamilyTag::QKrawtchouk
        | FamilyTag::AffineQKrawtchouk
        | FamilyTag::DualQKrawtchouk => {
            let q = g("q")?;
            let qp = |i: i64| q.pow(i);
            // h(1−q^i)(1−s q^{i+1})q^{−i}, or h(1−q^i)q^{−i} without s
            let q_eig = |base: &Elem, h: &Elem, s: Option<&Elem>, i: i64| -> Result<Elem> {
                let mut t = h * &(&one - &qp(i)?);
                if let Some(s) = s {
                    t = t * (&one - &(s * &qp(i + 1)?));
                }
                Ok(base + &(t * qp(-i)?))
            };
            // (1−q^i)(1−q^{i−d−1})
            let common = |i: i64| -> Result<Elem> { Ok((&one - &qp(i)?) * (&one - &qp(i - d - 1)?)) };
            let fam = fp.family;
            let s = fp.params.get("s");
            let ss = fp.params.get("sstar");
            for i in 0..=d {
                let t = match fam {
                    FamilyTag::QuantumQKrawtchouk => {
                        let s = g("s")?;
                        &th0 - &(&(&s * &q) * &(&one - &qp(i)?))
                    }
                    FamilyTag::QRacah | FamilyTag::DualQHahn | FamilyTag::DualQKrawtchouk => q_eig(&th0, &g("h")?, s, i)?,
                    _ => q_eig(&th0, &g("h")?, None, i)?,
                };
                theta.push(t);
                let ts = match fam {
                    FamilyTag::QRacah | FamilyTag::QHahn | FamilyTag::QKrawtchouk => q_eig(&ths0, &g("hstar")?, ss, i)?,
                    _ => q_eig(&ths0, &g("hstar")?, None, i)?,
                };
                theta_star.push(ts);
            }
            for i in 1..=d {
                let cm = common(i)?;
                let hhs = || -> Result<Elem> { Ok(&g("h")? * &g("hstar")?) };
                let (vp, ph) = match fam {
                    FamilyTag::QRacah => {
                        let (r1, r2, ss) = (g("r1")?, g("r2")?, g("sstar")?);
                        let base = &(hhs()? * qp(1 - 2 * i)?) * &cm;
                        let vp = &base * &(&(&one - &(&r1 * &qp(i)?)) * &(&one - &(&r2 * &qp(i)?)));
                        let ssq = &ss * &qp(i)?;
                        let ph = (&base * &(&(&r1 - &ssq) * &(&r2 - &ssq))).try_div(&ss)?;
                        (vp, ph)
                    }
                    FamilyTag::QHahn => {
                        let (r, ss) = (g("r")?, g("sstar")?);
                        let vp = &(&(hhs()? * qp(1 - 2 * i)?) * &cm) * &(&one - &(&r * &qp(i)?));
                        let ph = -&(&(&(hhs()? * qp(1 - i)?) * &cm) * &(&r - &(&ss * &qp(i)?)));
                        (vp, ph)
                    }
                    FamilyTag::DualQHahn => {
                        let (r, s) = (g("r")?, g("s")?);
                        let vp = &(&(hhs()? * qp(1 - 2 * i)?) * &cm) * &(&one - &(&r * &qp(i)?));
                        let ph = &(&(hhs()? * qp(d + 2 - 2 * i)?) * &cm) * &(&s - &(&r * &qp(i - d - 1)?));
                        (vp, ph)
                    }
                    FamilyTag::QuantumQKrawtchouk => {
                        let (r, s, hs) = (g("r")?, g("s")?, g("hstar")?);
                        let vp = -&(&(&(&r * &hs) * &qp(1 - i)?) * &cm);
                        let ph = &(&(&hs * &qp(d + 2 - 2 * i)?) * &cm) * &(&s - &(&r * &qp(i - d - 1)?));
                        (vp, ph)
                    }
                    FamilyTag::QKrawtchouk => {
                        let ss = g("sstar")?;
                        let vp = &(hhs()? * qp(1 - 2 * i)?) * &cm;
                        let ph = &(&(hhs()? * ss) * &q) * &cm;
                        (vp, ph)
                    }
                    FamilyTag::AffineQKrawtchouk => {
                        let r = g("r")?;
                        let vp = &(&(hhs()? * qp(1 - 2 * i)?) * &cm) * &(&one - &(&r * &qp(i)?));
                        let ph = -&(&(&(hhs()? * r) * &qp(1 - i)?) * &cm);
                        (vp, ph)
                    }
                    FamilyTag::DualQKrawtchouk => {
                        let s = g("s")?;
                        let vp = &(hhs()? * qp(1 - 2 * i)?) * &cm;
                        let ph = &(&(hhs()? * s) * &qp(d + 2 - 2 * i)?) * &cm;
                        (vp, ph)
                    }
                    _ => unreachable!("q family"),
                };
                varphi.push(vp);
                phi.push(ph);
            }
        }
        FamilyTag::Racah | FamilyTag::Hahn | FamilyTag::DualHahn | FamilyTag::Krawtchouk => {
            let fam = fp.family;
            // θ_0 + h i(i+1+s), or θ_0 + s i for the linear side
            let quad = |base: &Elem, h: &Elem, s: &Elem, i: i64| base + &(h * &(&n(i) * &(&n(i + 1) + s)));
            let lin = |base: &Elem, s: &Elem, i: i64| base + &(s * &n(i));
            for i in 0..=d {
                theta.push(match fam {
                    FamilyTag::Racah | FamilyTag::DualHahn => quad(&th0, &g("h")?, &g("s")?, i),
                    _ => lin(&th0, &g("s")?, i),
                });
                theta_star.push(match fam {
                    FamilyTag::Racah | FamilyTag::Hahn => quad(&ths0, &g("hstar")?, &g("sstar")?, i),
                    _ => lin(&ths0, &g("sstar")?, i),
                });
            }
            for i in 1..=d {
                let base = &n(i) * &n(i - d - 1);
                let (vp, ph) = match fam {
                    FamilyTag::Racah => {
                        let (r1, r2, ss) = (g("r1")?, g("r2")?, g("sstar")?);
                        let hh = &(&g("h")? * &g("hstar")?) * &base;
                        let vp = &hh * &(&(&n(i) + &r1) * &(&n(i) + &r2));
                        let ph = &hh * &(&(&(&n(i) + &ss) - &r1) * &(&(&n(i) + &ss) - &r2));
                        (vp, ph)
                    }
                    FamilyTag::Hahn => {
                        let (r, ss) = (g("r")?, g("sstar")?);
                        let hs = &(&g("hstar")? * &g("s")?) * &base;
                        (&hs * &(&n(i) + &r), -&(&hs * &(&(&n(i) + &ss) - &r)))
                    }
                    FamilyTag::DualHahn => {
                        let (r, s) = (g("r")?, g("s")?);
                        let hs = &(&g("h")? * &g("sstar")?) * &base;
                        (&hs * &(&n(i) + &r), &hs * &(&(&(&n(i) + &r) - &s) - &n(d + 1)))
                    }
                    _ => {
                        let (r, s, ss) = (g("r")?, g("s")?, g("sstar")?);
                        (&r * &base, &(&r - &(&s * &ss)) * &base)
                    }
                };
                varphi.push(vp);
                phi.push(ph);
            }
        }
        FamilyTag::BannaiIto => {
            let (h, hs, s, ss, r1, r2) = (g("h")?, g("hstar")?, g("s")?, g("sstar")?, g("r1")?, g("r2")?);
            let sign = |i: i64| if i % 2 == 0 { one.clone() } else { -&one };
            let eig = |base: &Elem, h: &Elem, s: &Elem, i: i64| {
                base + &(h * &(&(s - &one) + &(&(&(&one - s) + &n(2 * i)) * &sign(i))))
            };
            for i in 0..=d {
                theta.push(eig(&th0, &h, &s, i));
                theta_star.push(eig(&ths0, &hs, &ss, i));
            }
            let four = &n(4) * &(&h * &hs);
            for i in 1..=d {
                let ni = n(i);
                let nd = n(i - d - 1);
                let (vp, ph) = match (i % 2 == 0, d % 2 == 0) {
                    (true, true) => (-&(&four * &(&ni * &(&ni + &r1))), &four * &(&ni * &(&(&ni - &ss) - &r1))),
                    (false, true) => (-&(&four * &(&nd * &(&ni + &r2))), &four * &(&nd * &(&(&ni - &ss) - &r2))),
                    (true, false) => {
                        let v = -&(&four * &(&ni * &nd));
                        (v.clone(), v)
                    }
                    (false, false) => (
                        -&(&four * &(&(&ni + &r1) * &(&ni + &r2))),
                        -&(&four * &(&(&(&ni - &ss) - &r1) * &(&(&ni - &ss) - &r2))),
                    ),
                };
                varphi.push(vp);
                phi.push(ph);
            }
        }
        FamilyTag::Orphan => {
            if d != 3 {
                return Err(Error::Precondition(format!("orphan arrays have diameter 3, got {d}")));
            }
            let (h, hs, s, ss, r) = (g("h")?, g("hstar")?, g("s")?, g("sstar")?, g("r")?);
            let gamma = [0, 1, 1, 0];
            for i in 0..=3i64 {
                let gi = n(gamma[i as usize]);
                theta.push(&th0 + &(&h * &(&(&s * &n(i)) + &gi)));
                theta_star.push(&ths0 + &(&hs * &(&(&ss * &n(i)) + &gi)));
            }
            let hh = &h * &hs;
            varphi = vec![&hh * &r, hh.clone(), &hh * &(&(&r + &s) + &ss)];
            phi = vec![
                &hh * &(&r + &(&s * &(&one + &ss))),
                hh.clone(),
                &hh * &(&r + &(&ss * &(&one + &s))),
            ];
        }
    }
    ParameterArray::new(field, theta, theta_star, varphi, phi)
}

/// The value `u_i(θ_j)` as the family's terminating hypergeometric series,
/// or `None` for families without such a description here.
pub fn u_hypergeometric(fp: &FamilyParams, field: FieldSpec, i: usize, j: usize) -> Result<Option<Elem>> {
    fp.check_params(field)?;
    let f = field;
    let g = |n: &str| fp.get(n).cloned();
    let (i, j, d) = (i as i64, j as i64, fp.d as i64);
    let n = |k: i64| f.from_i64(k);
    let zero = f.zero();
    let one = f.one();
    let value = match fp.family {
        FamilyTag::BannaiIto | FamilyTag::Orphan => return Ok(None),
        FamilyTag::Racah => {
            let (s, ss, r1, r2) = (g("s")?, g("sstar")?, g("r1")?, g("r2")?);
            hypergeom(
                HyperKind::F43,
                &[n(-i), &n(i + 1) + &ss, n(-j), &n(j + 1) + &s],
                &[&r1 + &one, &r2 + &one, n(-d)],
                &one,
                None,
            )?
        }
        FamilyTag::Hahn => {
            let (ss, r) = (g("sstar")?, g("r")?);
            hypergeom(HyperKind::F32, &[n(-i), &n(i + 1) + &ss, n(-j)], &[&r + &one, n(-d)], &one, None)?
        }
        FamilyTag::DualHahn => {
            let (s, r) = (g("s")?, g("r")?);
            hypergeom(HyperKind::F32, &[n(-i), n(-j), &n(j + 1) + &s], &[&r + &one, n(-d)], &one, None)?
        }
        FamilyTag::Krawtchouk => {
            let (s, ss, r) = (g("s")?, g("sstar")?, g("r")?);
            let z = (&s * &ss).try_div(&r)?;
            hypergeom(HyperKind::F21, &[n(-i), n(-j)], &[n(-d)], &z, None)?
        }
        fam => {
            let q = g("q")?;
            let qp = |k: i64| q.pow(k);
            let (qi, qj, qd) = (qp(-i)?, qp(-j)?, qp(-d)?);
            match fam {
                FamilyTag::QRacah => {
                    let (s, ss, r1, r2) = (g("s")?, g("sstar")?, g("r1")?, g("r2")?);
                    hypergeom(
                        HyperKind::Phi43,
                        &[qi, &ss * &qp(i + 1)?, qj, &s * &qp(j + 1)?],
                        &[&r1 * &q, &r2 * &q, qd],
                        &q,
                        Some(&q),
                    )?
                }
                FamilyTag::QHahn => {
                    let (ss, r) = (g("sstar")?, g("r")?);
                    hypergeom(HyperKind::Phi32, &[qi, &ss * &qp(i + 1)?, qj], &[&r * &q, qd], &q, Some(&q))?
                }
                FamilyTag::DualQHahn => {
                    let (s, r) = (g("s")?, g("r")?);
                    hypergeom(HyperKind::Phi32, &[qi, qj, &s * &qp(j + 1)?], &[&r * &q, qd], &q, Some(&q))?
                }
                FamilyTag::QuantumQKrawtchouk => {
                    let (s, r) = (g("s")?, g("r")?);
                    let z = (&s * &qp(j + 1)?).try_div(&r)?;
                    hypergeom(HyperKind::Phi21, &[qi, qj], &[qd], &z, Some(&q))?
                }
                FamilyTag::QKrawtchouk => {
                    let ss = g("sstar")?;
                    hypergeom(HyperKind::Phi32, &[qi, &ss * &qp(i + 1)?, qj], &[zero, qd], &q, Some(&q))?
                }
                FamilyTag::AffineQKrawtchouk => {
                    let r = g("r")?;
                    hypergeom(HyperKind::Phi32, &[qi, zero, qj], &[&r * &q, qd], &q, Some(&q))?
                }
                FamilyTag::DualQKrawtchouk => {
                    let s = g("s")?;
                    hypergeom(HyperKind::Phi32, &[qi, qj, &s * &qp(j + 1)?], &[zero, qd], &q, Some(&q))?
                }
                _ => unreachable!("q family"),
            }
        }
    };
    Ok(Some(value))
}
