//! JSON interchange for every value the command-line tool reads or writes.
//!
//! Field elements are written as strings (`"3"`, `"-2/5"`; binary-field
//! elements as the integer whose bits are the polynomial coefficients).
//! Readers also accept plain JSON integers. Objects are emitted with sorted
//! keys so output is byte-for-byte reproducible.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::families::{ClassificationResult, FamilyParams, FamilyTag};
use crate::field::{Elem, FieldSpec};
use crate::linalg::Matrix;
use crate::parray::{PaViolation, ParameterArray};
use crate::realize::Realization;
use crate::verify::{AwSolution, VerificationReport};

fn json_err(e: serde_json::Error) -> Error {
    Error::Json(e.to_string())
}

/// `{"kind":"Q"}`, `{"kind":"Fp","p":7}` or `{"kind":"F2k","k":2,"modulus":[1,1,1]}`
/// with modulus coefficients listed from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum FieldJson {
    Q,
    Fp { p: u64 },
    F2k { k: u32, modulus: Vec<u8> },
}

impl From<FieldSpec> for FieldJson {
    fn from(f: FieldSpec) -> Self {
        match f {
            FieldSpec::Rationals => FieldJson::Q,
            FieldSpec::Prime(p) => FieldJson::Fp { p },
            FieldSpec::Binary { k, .. } => FieldJson::F2k { k, modulus: f.modulus_bits().unwrap_or_default() },
        }
    }
}

impl TryFrom<FieldJson> for FieldSpec {
    type Error = Error;
    fn try_from(f: FieldJson) -> Result<Self> {
        match f {
            FieldJson::Q => Ok(FieldSpec::Rationals),
            FieldJson::Fp { p } => FieldSpec::prime(p),
            FieldJson::F2k { k, modulus } => FieldSpec::binary(k, &modulus),
        }
    }
}

/// An element as read from JSON: a string or an integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemJson {
    Text(String),
    Int(i64),
}

impl ElemJson {
    pub fn to_elem(&self, field: FieldSpec) -> Result<Elem> {
        match self {
            ElemJson::Text(s) => field.parse(s),
            ElemJson::Int(n) => field.parse(&n.to_string()),
        }
    }
}

impl From<&Elem> for ElemJson {
    fn from(e: &Elem) -> Self {
        ElemJson::Text(e.to_string())
    }
}

fn elems(v: &[Elem]) -> Vec<ElemJson> {
    v.iter().map(ElemJson::from).collect()
}

fn read_elems(v: &[ElemJson], field: FieldSpec) -> Result<Vec<Elem>> {
    v.iter().map(|e| e.to_elem(field)).collect()
}

pub fn field_to_json(f: FieldSpec) -> Value {
    serde_json::to_value(FieldJson::from(f)).expect("field serializes")
}

/// Reads the object form, or one of the text forms accepted by
/// `FieldSpec::from_str` when given a JSON string.
pub fn field_from_json(v: &Value) -> Result<FieldSpec> {
    match v {
        Value::String(s) => s.parse(),
        _ => serde_json::from_value::<FieldJson>(v.clone()).map_err(json_err)?.try_into(),
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrayJson {
    field: Value,
    d: usize,
    theta: Vec<ElemJson>,
    theta_star: Vec<ElemJson>,
    varphi: Vec<ElemJson>,
    phi: Vec<ElemJson>,
}

pub fn pa_to_json(pa: &ParameterArray) -> Value {
    let a = ArrayJson {
        field: field_to_json(pa.field),
        d: pa.d,
        theta: elems(&pa.theta),
        theta_star: elems(&pa.theta_star),
        varphi: elems(&pa.varphi),
        phi: elems(&pa.phi),
    };
    serde_json::to_value(a).expect("array serializes")
}

/// Reads a parameter array and checks its lengths against `d`.
pub fn pa_from_json(v: &Value) -> Result<ParameterArray> {
    let a: ArrayJson = serde_json::from_value(v.clone()).map_err(json_err)?;
    let f = field_from_json(&a.field)?;
    let pa = ParameterArray {
        field: f,
        d: a.d,
        theta: read_elems(&a.theta, f)?,
        theta_star: read_elems(&a.theta_star, f)?,
        varphi: read_elems(&a.varphi, f)?,
        phi: read_elems(&a.phi, f)?,
    };
    pa.check_shape()?;
    Ok(pa)
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(json_err)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyJson {
    family: String,
    d: usize,
    params: BTreeMap<String, ElemJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    field: Option<Value>,
}

pub fn family_params_to_json(fp: &FamilyParams) -> Value {
    let j = FamilyJson {
        family: fp.family.name().to_string(),
        d: fp.d,
        params: fp.params.iter().map(|(k, v)| (k.clone(), ElemJson::from(v))).collect(),
        field: None,
    };
    serde_json::to_value(j).expect("family parameters serialize")
}

/// Reads family parameters. The field comes from an optional `"field"` key,
/// falling back to `default_field`.
pub fn family_params_from_json(v: &Value, default_field: FieldSpec) -> Result<(FamilyParams, FieldSpec)> {
    let j: FamilyJson = serde_json::from_value(v.clone()).map_err(json_err)?;
    let field = match &j.field {
        Some(f) => field_from_json(f)?,
        None => default_field,
    };
    let family: FamilyTag = j.family.parse()?;
    let mut fp = FamilyParams::new(family, j.d);
    for (k, e) in &j.params {
        fp = fp.with(k, e.to_elem(field)?);
    }
    Ok((fp, field))
}

/// Row-major array of element strings.
pub fn matrix_to_json(m: &Matrix) -> Value {
    let rows: Vec<Vec<String>> = m.to_rows().iter().map(|r| r.iter().map(Elem::to_string).collect()).collect();
    json!(rows)
}

pub fn matrix_from_json(v: &Value, field: FieldSpec) -> Result<Matrix> {
    let rows: Vec<Vec<ElemJson>> = serde_json::from_value(v.clone()).map_err(json_err)?;
    let rows = rows.iter().map(|r| read_elems(r, field)).collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, rows)
}

pub fn realization_to_json(r: &Realization) -> Value {
    json!({
        "basis": r.basis.name(),
        "A": matrix_to_json(&r.a),
        "Astar": matrix_to_json(&r.astar),
    })
}

pub fn violation_to_json(v: &PaViolation) -> Value {
    json!({
        "rule": v.rule.to_string(),
        "i": v.i,
        "j": v.j,
        "sequence": v.sequence,
        "lhs": v.lhs.to_string(),
        "rhs": v.rhs.to_string(),
    })
}

/// `{"valid": bool, "violations": [...]}`.
pub fn violations_to_json(vs: &[PaViolation]) -> Value {
    json!({
        "valid": vs.is_empty(),
        "violations": vs.iter().map(violation_to_json).collect::<Vec<_>>(),
    })
}

pub fn report_to_json(r: &VerificationReport) -> Value {
    serde_json::to_value(r).expect("report serializes")
}

pub fn report_from_json(v: &Value) -> Result<VerificationReport> {
    serde_json::from_value(v.clone()).map_err(json_err)
}

/// The eight scalars plus `rank` and `unique`.
pub fn aw_to_json(s: &AwSolution) -> Value {
    let p = &s.params;
    json!({
        "beta": p.beta.to_string(),
        "gamma": p.gamma.to_string(),
        "gamma_star": p.gamma_star.to_string(),
        "rho": p.rho.to_string(),
        "rho_star": p.rho_star.to_string(),
        "omega": p.omega.to_string(),
        "eta": p.eta.to_string(),
        "eta_star": p.eta_star.to_string(),
        "rank": s.rank,
        "unique": s.unique,
    })
}

/// `{"case": "I" | null, "matches": [...], "extension_required": null | [c0, c1, c2]}`.
/// A quadratic `[c0, c1, c2]` stands for `c0·x² + c1·x + c2`.
pub fn classification_to_json(c: &ClassificationResult) -> Value {
    json!({
        "case": c.case.map(|x| x.to_string()),
        "matches": c.matches.iter().map(family_params_to_json).collect::<Vec<_>>(),
        "extension_required": c.extension_required.as_ref().map(|v| v.iter().map(Elem::to_string).collect::<Vec<_>>()),
    })
}

/// `table[h][i][j] = p^h_ij` as nested arrays of element strings.
pub fn tensor_to_json(t: &[Vec<Vec<Elem>>]) -> Value {
    json!(t
        .iter()
        .map(|m| m.iter().map(|r| r.iter().map(Elem::to_string).collect::<Vec<_>>()).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}
