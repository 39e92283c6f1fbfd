//! Terminating ordinary and basic hypergeometric series.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::Elem;

/// Bound on the number of terms before a series is declared non-terminating.
pub const MAX_TERMS: usize = 256;

/// Series kinds `_rF_s` and `_rφ_s` with `r = s + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HyperKind {
    F21,
    F32,
    F43,
    Phi21,
    Phi32,
    Phi43,
}

impl HyperKind {
    /// Number of numerator and denominator parameters.
    pub fn arity(self) -> (usize, usize) {
        match self {
            HyperKind::F21 | HyperKind::Phi21 => (2, 1),
            HyperKind::F32 | HyperKind::Phi32 => (3, 2),
            HyperKind::F43 | HyperKind::Phi43 => (4, 3),
        }
    }

    pub fn is_basic(self) -> bool {
        matches!(self, HyperKind::Phi21 | HyperKind::Phi32 | HyperKind::Phi43)
    }
}

impl fmt::Display for HyperKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for HyperKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "F21" => HyperKind::F21,
            "F32" => HyperKind::F32,
            "F43" => HyperKind::F43,
            "Phi21" => HyperKind::Phi21,
            "Phi32" => HyperKind::Phi32,
            "Phi43" => HyperKind::Phi43,
            _ => return Err(Error::Hypergeometric(format!("unknown kind {s:?}"))),
        })
    }
}

/// Exact value of a terminating series.
///
/// Ordinary kinds use Pochhammer symbols `(a)_n` and the factor `z^n/n!`;
/// basic kinds use `(a;q)_n = (1−a)(1−aq)⋯(1−aq^{n−1})` and `z^n/(q;q)_n`.
/// The series must terminate through a vanishing numerator factor before any
/// denominator factor (or `n!`) vanishes.
pub fn hypergeom(kind: HyperKind, num: &[Elem], den: &[Elem], z: &Elem, q: Option<&Elem>) -> Result<Elem> {
    let (r, s) = kind.arity();
    if num.len() != r || den.len() != s {
        return Err(Error::Hypergeometric(format!(
            "{kind} takes {r} numerator and {s} denominator parameters, got {} and {}",
            num.len(),
            den.len()
        )));
    }
    let q = match (kind.is_basic(), q) {
        (true, Some(q)) => Some(q.clone()),
        (true, None) => return Err(Error::Hypergeometric(format!("{kind} needs a base q"))),
        (false, _) => None,
    };
    let f = z.field();
    let one = f.one();
    let mut sum = f.zero();
    let mut term = one.clone();
    // q^n for basic series
    let mut qn = one.clone();
    for n in 0..MAX_TERMS {
        sum = &sum + &term;
        let factor = |a: &Elem| match &q {
            Some(_) => &one - &(a * &qn),
            None => a + &f.from_i64(n as i64),
        };
        let numer = num.iter().fold(one.clone(), |acc, a| acc * factor(a));
        if numer.is_zero() {
            return Ok(sum);
        }
        let denom = den.iter().fold(one.clone(), |acc, b| acc * factor(b));
        if denom.is_zero() {
            return Err(Error::Hypergeometric(format!("denominator factor vanishes at n = {n}")));
        }
        let fact = match &q {
            Some(q) => &one - &(&qn * q),
            None => f.from_i64(n as i64 + 1),
        };
        if fact.is_zero() {
            return Err(Error::Hypergeometric(format!(
                "{} is not invertible at n = {}",
                if q.is_some() { "(q;q)_n" } else { "n!" },
                n + 1
            )));
        }
        term = (term * numer * z).try_div(&(denom * fact))?;
        if let Some(q) = &q {
            qn = &qn * q;
        }
    }
    Err(Error::Hypergeometric(format!("series does not terminate within {MAX_TERMS} terms")))
}
