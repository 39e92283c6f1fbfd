//! Closed forms for the scalars and polynomials attached to a parameter array.
//!
//! Starred quantities are never computed by separate formulas: apply the
//! same functions to `d4_apply(pa, D4Element::STAR)`.

use crate::error::{Error, Result};
use crate::field::Elem;
use crate::linalg::{poly_three_term, Matrix, Poly};
use crate::parray::ParameterArray;

/// `a_i, x_i, b_i, c_i, k_i, m_i, ν, p_i(θ_0)`.
///
/// `x[i-1]` is `x_i`; `b` has `d+1` entries with `b_d = 0`; `c` has `d+1`
/// entries with `c_0 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedScalars {
    pub a: Vec<Elem>,
    pub x: Vec<Elem>,
    pub b: Vec<Elem>,
    pub c: Vec<Elem>,
    pub k: Vec<Elem>,
    pub m: Vec<Elem>,
    pub nu: Elem,
    pub p_at_theta0: Vec<Elem>,
}

impl DerivedScalars {
    /// `x_i` for `1 ≤ i ≤ d`.
    pub fn x_at(&self, i: usize) -> &Elem {
        &self.x[i - 1]
    }

    /// `x_1 x_2 ⋯ x_i`.
    pub fn x_prod(&self, i: usize) -> Elem {
        self.x[..i].iter().fold(self.nu.one_like(), |acc, v| acc * v)
    }

    /// `c_1 c_2 ⋯ c_i`.
    pub fn c_prod(&self, i: usize) -> Elem {
        self.c[1..=i].iter().fold(self.nu.one_like(), |acc, v| acc * v)
    }
}

/// The polynomials `p_0..p_{d+1}`, `u_i`, `v_i` and the four product families
/// `τ_i = Π_{h<i}(λ−θ_h)`, `η_i = Π_{h<i}(λ−θ_{d−h})` and their starred forms,
/// each for `i = 0..=d+1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialSet {
    pub p: Vec<Poly>,
    pub u: Vec<Poly>,
    pub v: Vec<Poly>,
    pub tau: Vec<Poly>,
    pub tau_star: Vec<Poly>,
    pub eta: Vec<Poly>,
    pub eta_star: Vec<Poly>,
}

/// `Π_{h<n} (x − s_h)`.
fn prod_from_start(s: &[Elem], n: usize, x: &Elem) -> Elem {
    s[..n].iter().fold(x.one_like(), |acc, t| acc * (x - t))
}

/// `Π_{h<n} (x − s_{d−h})`.
fn prod_from_end(s: &[Elem], n: usize, x: &Elem) -> Elem {
    s.iter().rev().take(n).fold(x.one_like(), |acc, t| acc * (x - t))
}

/// `τ_n(x)`.
pub fn tau_at(pa: &ParameterArray, n: usize, x: &Elem) -> Elem {
    prod_from_start(&pa.theta, n, x)
}

/// `η_n(x)`.
pub fn eta_at(pa: &ParameterArray, n: usize, x: &Elem) -> Elem {
    prod_from_end(&pa.theta, n, x)
}

/// `τ*_n(x)`.
pub fn tau_star_at(pa: &ParameterArray, n: usize, x: &Elem) -> Elem {
    prod_from_start(&pa.theta_star, n, x)
}

/// `η*_n(x)`.
pub fn eta_star_at(pa: &ParameterArray, n: usize, x: &Elem) -> Elem {
    prod_from_end(&pa.theta_star, n, x)
}

fn varphi_prod(pa: &ParameterArray, from: usize, to: usize) -> Elem {
    (from..=to).fold(pa.field.one(), |acc, h| acc * pa.varphi_at(h))
}

fn phi_prod(pa: &ParameterArray, from: usize, to: usize) -> Elem {
    (from..=to).fold(pa.field.one(), |acc, h| acc * pa.phi_at(h))
}

/// All scalars from their closed forms.
pub fn derived_scalars(pa: &ParameterArray) -> Result<DerivedScalars> {
    pa.ensure_valid()?;
    let f = pa.field;
    let d = pa.d;
    let ts = |n: usize, i: usize| tau_star_at(pa, n, pa.ths(i));
    let es = |n: usize, i: usize| eta_star_at(pa, n, pa.ths(i));

    let mut a = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let mut ai = pa.th(i).clone();
        if i >= 1 {
            ai = ai + pa.varphi_at(i).try_div(&(pa.ths(i) - pa.ths(i - 1)))?;
        }
        if i < d {
            ai = ai + pa.varphi_at(i + 1).try_div(&(pa.ths(i) - pa.ths(i + 1)))?;
        }
        a.push(ai);
    }

    let mut x = Vec::with_capacity(d);
    for i in 1..=d {
        let num = pa.varphi_at(i) * pa.phi_at(i) * ts(i - 1, i - 1) * es(d - i, i);
        let den = ts(i, i) * es(d - i + 1, i - 1);
        x.push(num.try_div(&den)?);
    }

    let mut b = Vec::with_capacity(d + 1);
    for i in 0..d {
        b.push((pa.varphi_at(i + 1) * ts(i, i)).try_div(&ts(i + 1, i + 1))?);
    }
    b.push(f.zero());

    let mut c = vec![f.zero()];
    for i in 1..=d {
        c.push((pa.phi_at(i) * es(d - i, i)).try_div(&es(d - i + 1, i - 1))?);
    }

    let eta_d_star = es(d, 0);
    let nu = (eta_at(pa, d, pa.th(0)) * &eta_d_star).try_div(&phi_prod(pa, 1, d))?;

    let mut k = Vec::with_capacity(d + 1);
    let mut m = Vec::with_capacity(d + 1);
    let mut p0 = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let ratio = varphi_prod(pa, 1, i).try_div(&phi_prod(pa, 1, i))?;
        k.push((ratio * &eta_d_star).try_div(&(ts(i, i) * es(d - i, i)))?);
        let den = &eta_d_star * tau_at(pa, i, pa.th(i)) * eta_at(pa, d - i, pa.th(i));
        m.push((varphi_prod(pa, 1, i) * phi_prod(pa, 1, d - i)).try_div(&den)?);
        p0.push(varphi_prod(pa, 1, i).try_div(&ts(i, i))?);
    }

    Ok(DerivedScalars { a, x, b, c, k, m, nu, p_at_theta0: p0 })
}

/// `τ_0..τ_{d+1}` built on the given sequence, forwards or backwards.
fn product_family(seq: &[Elem], backwards: bool) -> Vec<Poly> {
    let f = seq[0].field();
    let mut out = vec![Poly::one(f)];
    let ordered: Vec<&Elem> = if backwards { seq.iter().rev().collect() } else { seq.iter().collect() };
    for r in ordered {
        let next = out.last().expect("nonempty") * &Poly::linear(r);
        out.push(next);
    }
    out
}

/// All polynomial families. `p` is computed both by the three-term recurrence
/// and by its closed form; disagreement is reported as an internal error.
pub fn polynomial_set(pa: &ParameterArray) -> Result<PolynomialSet> {
    let ds = derived_scalars(pa)?;
    let d = pa.d;
    let tau = product_family(&pa.theta, false);
    let eta = product_family(&pa.theta, true);
    let tau_star = product_family(&pa.theta_star, false);
    let eta_star = product_family(&pa.theta_star, true);

    let p = poly_three_term(&ds.a, &ds.x)?;
    for i in 0..=d {
        let tsi = tau_star_at(pa, i, pa.ths(i));
        let mut closed = Poly::zero(pa.field);
        for h in 0..=i {
            let coef = (varphi_prod(pa, h + 1, i) * tau_star_at(pa, h, pa.ths(i))).try_div(&tsi)?;
            closed = &closed + &tau[h].scale(&coef);
        }
        if closed != p[i] {
            return Err(Error::Internal(format!("p_{i}: recurrence gives {} but closed form gives {closed}", p[i])));
        }
    }
    if p[d + 1] != tau[d + 1] {
        return Err(Error::Internal(format!("p_{} differs from the product of (λ − θ_i)", d + 1)));
    }

    let mut u = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let mut ui = Poly::zero(pa.field);
        for h in 0..=i {
            let coef = tau_star_at(pa, h, pa.ths(i)).try_div(&varphi_prod(pa, 1, h))?;
            ui = &ui + &tau[h].scale(&coef);
        }
        u.push(ui);
    }
    let v = u.iter().zip(&ds.k).map(|(ui, ki)| ui.scale(ki)).collect();
    Ok(PolynomialSet { p, u, v, tau, tau_star, eta, eta_star })
}

fn eval_table(polys: &[Poly], pa: &ParameterArray) -> Matrix {
    let n = pa.d + 1;
    let mut t = Matrix::zeros(pa.field, n, n);
    for i in 0..n {
        for j in 0..n {
            t[(i, j)] = polys[i].eval(pa.th(j));
        }
    }
    t
}

/// Entry `(i, j)` is `u_i(θ_j)`.
pub fn u_table(pa: &ParameterArray) -> Result<Matrix> {
    Ok(eval_table(&polynomial_set(pa)?.u, pa))
}

/// Entry `(i, j)` is `v_i(θ_j)`.
pub fn v_table(pa: &ParameterArray) -> Result<Matrix> {
    Ok(eval_table(&polynomial_set(pa)?.v, pa))
}

/// Entry `(i, j)` is `p_i(θ_j)`.
pub fn p_table(pa: &ParameterArray) -> Result<Matrix> {
    Ok(eval_table(&polynomial_set(pa)?.p, pa))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn kr3() -> ParameterArray {
        ParameterArray::from_i64(FieldSpec::Rationals, &[3, 1, -1, -3], &[3, 1, -1, -3], &[-6, -8, -6], &[6, 8, 6]).unwrap()
    }

    fn q(s: &str) -> Elem {
        FieldSpec::Rationals.parse(s).unwrap()
    }

    fn qs(v: &[&str]) -> Vec<Elem> {
        v.iter().map(|s| q(s)).collect()
    }

    #[test]
    fn kr3_scalars() {
        let s = derived_scalars(&kr3()).unwrap();
        assert_eq!(s.a, qs(&["0", "0", "0", "0"]));
        assert_eq!(s.b, qs(&["3", "2", "1", "0"]));
        assert_eq!(s.c, qs(&["0", "1", "2", "3"]));
        assert_eq!(s.x, qs(&["3", "4", "3"]));
        assert_eq!(s.nu, q("8"));
        assert_eq!(s.k, qs(&["1", "3", "3", "1"]));
        assert_eq!(s.m, qs(&["1/8", "3/8", "3/8", "1/8"]));
        assert_eq!(s.p_at_theta0, qs(&["1", "3", "6", "6"]));
    }

    #[test]
    fn kr3_k1_by_product_formula() {
        let s = derived_scalars(&kr3()).unwrap();
        let via_bc = s.b[0].try_div(&s.c[1]).unwrap();
        assert_eq!(via_bc, s.k[1]);
    }

    #[test]
    fn diameter_zero() {
        let pa = ParameterArray::from_i64(FieldSpec::Rationals, &[4], &[9], &[], &[]).unwrap();
        let s = derived_scalars(&pa).unwrap();
        assert_eq!(s.a, qs(&["4"]));
        assert_eq!(s.nu, q("1"));
        assert_eq!(s.k, qs(&["1"]));
        assert_eq!(s.m, qs(&["1"]));
        let ps = polynomial_set(&pa).unwrap();
        assert!(ps.u[0].is_monic() && ps.u[0].degree() == Some(0));
    }

    #[test]
    fn kr3_polynomials() {
        let ps = polynomial_set(&kr3()).unwrap();
        let f = FieldSpec::Rationals;
        assert_eq!(ps.p[2], Poly::new(f, qs(&["-3", "0", "1"])));
        assert_eq!(ps.p[3], Poly::new(f, qs(&["0", "-7", "0", "1"])));
        assert_eq!(ps.u[1], Poly::new(f, qs(&["0", "1/3"])));
        assert_eq!(ps.u[1].eval(&q("1")), q("1/3"));
        assert_eq!(ps.v[0], Poly::one(f));
        assert_eq!(ps.p[0], Poly::one(f));
    }

    #[test]
    fn kr3_u_table() {
        let t = u_table(&kr3()).unwrap();
        for j in 0..4 {
            assert!(t[(0, j)].is_one());
            assert!(t[(j, 0)].is_one());
        }
        assert_eq!(t[(1, 1)], q("1/3"));
    }
}
