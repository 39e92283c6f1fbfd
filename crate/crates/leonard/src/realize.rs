//! Matrix realizations of the Leonard system attached to a parameter array,
//! together with idempotents, the P matrix, the dagger diagonal, the Gram
//! matrix, split bases and intersection numbers.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::Elem;
use crate::formulas::{derived_scalars, polynomial_set};
use crate::linalg::{mat_poly_eval, proportional, structure_check, Matrix, Poly, Shape};
use crate::parray::{d4_apply, D4Element, ParameterArray};

/// The three concrete bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// `A` tridiagonal with diagonal `a_i`, superdiagonal `x_i`, subdiagonal 1;
    /// `A*` diagonal.
    Monic,
    /// `A` lower bidiagonal with diagonal `θ_i` and subdiagonal 1; `A*` upper
    /// bidiagonal with diagonal `θ*_i` and superdiagonal `φ_i`.
    Split,
    /// `A` tridiagonal with diagonal `a_i`, superdiagonal `b_i`, subdiagonal
    /// `c_i`; `A*` diagonal.
    Standard,
}

impl Basis {
    pub const ALL: [Basis; 3] = [Basis::Monic, Basis::Split, Basis::Standard];

    pub fn name(self) -> &'static str {
        match self {
            Basis::Monic => "monic",
            Basis::Split => "split",
            Basis::Standard => "standard",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Basis::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown basis {s:?}; expected monic, split or standard")))
    }
}

/// A concrete pair `(A, A*)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub basis: Basis,
    pub a: Matrix,
    pub astar: Matrix,
    pub pa: ParameterArray,
}

/// Primitive idempotents `E_0..E_d` of `A` and `E*_0..E*_d` of `A*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentSet {
    pub e: Vec<Matrix>,
    pub estar: Vec<Matrix>,
}

/// Build `(A, A*)` in the requested basis.
pub fn realize(pa: &ParameterArray, basis: Basis) -> Result<Realization> {
    let s = derived_scalars(pa)?;
    let f = pa.field;
    let n = pa.d + 1;
    let mut a = Matrix::zeros(f, n, n);
    let astar;
    match basis {
        Basis::Monic => {
            for i in 0..n {
                a[(i, i)] = s.a[i].clone();
                if i > 0 {
                    a[(i - 1, i)] = s.x_at(i).clone();
                    a[(i, i - 1)] = f.one();
                }
            }
            astar = Matrix::diag(f, &pa.theta_star);
        }
        Basis::Standard => {
            for i in 0..n {
                a[(i, i)] = s.a[i].clone();
                if i > 0 {
                    a[(i - 1, i)] = s.b[i - 1].clone();
                    a[(i, i - 1)] = s.c[i].clone();
                }
            }
            astar = Matrix::diag(f, &pa.theta_star);
        }
        Basis::Split => {
            let mut u = Matrix::diag(f, &pa.theta_star);
            for i in 0..n {
                a[(i, i)] = pa.th(i).clone();
                if i > 0 {
                    a[(i, i - 1)] = f.one();
                    u[(i - 1, i)] = pa.varphi_at(i);
                }
            }
            astar = u;
        }
    }
    let shapes_ok = match basis {
        Basis::Split => structure_check(&a, Shape::LowerBidiagonal) && structure_check(&astar, Shape::UpperBidiagonal),
        _ => structure_check(&a, Shape::IrreducibleTridiagonal) && structure_check(&astar, Shape::Diagonal),
    };
    if !shapes_ok {
        return Err(Error::Internal(format!("{basis} realization has the wrong shape")));
    }
    Ok(Realization { basis, a, astar, pa: pa.clone() })
}

/// `Π_{j≠i} (λ − s_j)/(s_i − s_j)`.
pub fn lagrange_poly(s: &[Elem], i: usize) -> Result<Poly> {
    let f = s[i].field();
    let mut p = Poly::one(f);
    for (j, sj) in s.iter().enumerate() {
        if j != i {
            let inv = (&s[i] - sj).inv()?;
            p = (&p * &Poly::linear(sj)).scale(&inv);
        }
    }
    Ok(p)
}

/// Primitive idempotents as Lagrange polynomials in `A` and `A*`.
pub fn idempotents(r: &Realization) -> Result<IdempotentSet> {
    let n = r.pa.d + 1;
    let mut e = Vec::with_capacity(n);
    let mut estar = Vec::with_capacity(n);
    for i in 0..n {
        e.push(mat_poly_eval(&lagrange_poly(&r.pa.theta, i)?, &r.a));
        estar.push(mat_poly_eval(&lagrange_poly(&r.pa.theta_star, i)?, &r.astar));
    }
    Ok(IdempotentSet { e, estar })
}

/// `P` with `P_{ij} = v_j(θ_i)`.
pub fn p_matrix(pa: &ParameterArray) -> Result<Matrix> {
    let ps = polynomial_set(pa)?;
    let n = pa.d + 1;
    let mut p = Matrix::zeros(pa.field, n, n);
    for i in 0..n {
        for j in 0..n {
            p[(i, j)] = ps.v[j].eval(pa.th(i));
        }
    }
    Ok(p)
}

/// Diagonal `D` with `D_ii = Π_{h<i} A_{h,h+1}/A_{h+1,h}`, so that
/// `X ↦ D⁻¹XᵀD` fixes both `A` and `A*`.
pub fn dagger_diag(r: &Realization) -> Result<Matrix> {
    if r.basis == Basis::Split {
        return Err(Error::Shape("the dagger diagonal needs a tridiagonal/diagonal realization".into()));
    }
    let f = r.pa.field;
    let n = r.pa.d + 1;
    let mut diag = vec![f.one()];
    for i in 1..n {
        let next = (&diag[i - 1] * &r.a[(i - 1, i)]).try_div(&r.a[(i, i - 1)])?;
        diag.push(next);
    }
    Ok(Matrix::diag(f, &diag))
}

/// Gram matrix `diag(k_i/ν)` of the standard basis, normalized so the
/// spanning vector of `E_0V` has squared norm 1.
pub fn gram_matrix(pa: &ParameterArray) -> Result<Matrix> {
    let s = derived_scalars(pa)?;
    let entries: Vec<Elem> = s.k.iter().map(|k| k.try_div(&s.nu)).collect::<Result<_>>()?;
    Ok(Matrix::diag(pa.field, &entries))
}

fn leading_one(v: &[Elem]) -> Option<Vec<Elem>> {
    let k = v.iter().position(|x| !x.is_zero())?;
    let inv = v[k].inv().ok()?;
    Some(v.iter().map(|x| x * &inv).collect())
}

/// A basis of `(E*_0V + ⋯ + E*_iV) ∩ (E_iV + ⋯ + E_dV)`, computed as the
/// common kernel of the two complementary projections.
pub fn split_intersection(ids: &IdempotentSet, i: usize) -> Vec<Vec<Elem>> {
    let d = ids.e.len() - 1;
    let f = ids.e[0].field();
    let n = d + 1;
    let id = Matrix::identity(f, n);
    let low = ids.estar[..=i].iter().fold(Matrix::zeros(f, n, n), |acc, m| &acc + m);
    let high = ids.e[i..].iter().fold(Matrix::zeros(f, n, n), |acc, m| &acc + m);
    let (c1, c2) = (&id - &low, &id - &high);
    let mut stacked = Matrix::zeros(f, 2 * n, n);
    for r in 0..n {
        for c in 0..n {
            stacked[(r, c)] = c1[(r, c)].clone();
            stacked[(n + r, c)] = c2[(r, c)].clone();
        }
    }
    stacked.nullspace()
}

/// Split basis `w_i = (A−θ_{i−1}I)⋯(A−θ_0I)v` for `v` spanning `E*_0V`,
/// scaled so the first nonzero coordinate of `v` is 1.
///
/// Each `w_i` is cross-checked against the kernel intersection of
/// [`split_intersection`], and the relations `(A−θ_iI)w_i = w_{i+1}` and
/// `(A*−θ*_iI)w_i = φ_i w_{i−1}` are confirmed before returning.
pub fn split_subspaces(r: &Realization) -> Result<Vec<Vec<Elem>>> {
    let ids = idempotents(r)?;
    let pa = &r.pa;
    let d = pa.d;
    let e0 = &ids.estar[0];
    let v = (0..=d)
        .find_map(|j| leading_one(&e0.column(j)))
        .ok_or_else(|| Error::Internal("E*_0 vanishes".into()))?;
    let mut w = vec![v];
    for i in 0..d {
        let prev = &w[i];
        let shifted: Vec<Elem> = r.a.mul_vec(prev).iter().zip(prev).map(|(x, y)| x - &(pa.th(i) * y)).collect();
        w.push(shifted);
    }
    for i in 0..=d {
        let inter = split_intersection(&ids, i);
        if inter.len() != 1 || !proportional(&inter[0], &w[i]) {
            return Err(Error::Internal(format!("U_{i} disagrees with the kernel intersection")));
        }
        let up: Vec<Elem> = r.a.mul_vec(&w[i]).iter().zip(&w[i]).map(|(x, y)| x - &(pa.th(i) * y)).collect();
        let want_up = if i < d { w[i + 1].clone() } else { vec![pa.field.zero(); d + 1] };
        let down: Vec<Elem> = r.astar.mul_vec(&w[i]).iter().zip(&w[i]).map(|(x, y)| x - &(pa.ths(i) * y)).collect();
        let want_down: Vec<Elem> = if i > 0 {
            w[i - 1].iter().map(|x| x * &pa.varphi_at(i)).collect()
        } else {
            vec![pa.field.zero(); d + 1]
        };
        if up != want_up || down != want_down {
            return Err(Error::Internal(format!("split relations fail at i = {i}")));
        }
    }
    Ok(w)
}

/// Intersection numbers as `table[h][i][j] = p^h_{ij}`, defined by
/// `v_i v_j ≡ Σ_h p^h_{ij} v_h` modulo `p_{d+1}`.
pub fn intersection_numbers(pa: &ParameterArray) -> Result<Vec<Vec<Vec<Elem>>>> {
    let ps = polynomial_set(pa)?;
    let d = pa.d;
    let modulus = &ps.p[d + 1];
    let mut table = vec![vec![vec![pa.field.zero(); d + 1]; d + 1]; d + 1];
    for i in 0..=d {
        for j in 0..=d {
            let (_, mut rem) = (&ps.v[i] * &ps.v[j]).div_rem(modulus)?;
            for h in (0..=d).rev() {
                let c = rem.coeff(h).try_div(&ps.v[h].leading())?;
                rem = &rem - &ps.v[h].scale(&c);
                table[h][i][j] = c;
            }
            if !rem.is_zero() {
                return Err(Error::Internal(format!("v_{i}v_{j} did not reduce")));
            }
        }
    }
    Ok(table)
}

/// Transition matrix `X_{ij} = p_i(θ_j)p*_j(θ*_0)/(x_1⋯x_i)` from the monic
/// basis to an eigenbasis of `A`.
pub fn monic_transition(pa: &ParameterArray) -> Result<Matrix> {
    let ps = polynomial_set(pa)?;
    let s = derived_scalars(pa)?;
    let star = d4_apply(pa, D4Element::STAR)?;
    let ps_star = polynomial_set(&star)?;
    let n = pa.d + 1;
    let mut x = Matrix::zeros(pa.field, n, n);
    for i in 0..n {
        let xp = s.x_prod(i);
        for j in 0..n {
            x[(i, j)] = (ps.p[i].eval(pa.th(j)) * ps_star.p[j].eval(pa.ths(0))).try_div(&xp)?;
        }
    }
    Ok(x)
}
