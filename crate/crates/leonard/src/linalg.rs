//! Dense univariate polynomials and dense matrices over a [`FieldSpec`].

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};

/// A polynomial in λ, coefficients lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last().is_some_and(Elem::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: FieldSpec) -> Self {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn constant(c: Elem) -> Self {
        Poly::new(c.field(), vec![c])
    }

    pub fn one(field: FieldSpec) -> Self {
        Poly::constant(field.one())
    }

    /// The monomial λ.
    pub fn lambda(field: FieldSpec) -> Self {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    /// λ − root.
    pub fn linear(root: &Elem) -> Self {
        let f = root.field();
        Poly::new(f, vec![-root, f.one()])
    }

    /// Π (λ − r) over the given roots.
    pub fn from_roots<'a>(field: FieldSpec, roots: impl IntoIterator<Item = &'a Elem>) -> Self {
        roots.into_iter().fold(Poly::one(field), |acc, r| &acc * &Poly::linear(r))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn leading(&self) -> Elem {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn eval(&self, x: &Elem) -> Elem {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, c| &acc * x + c)
    }

    pub fn scale(&self, c: &Elem) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division: `self = q·d + r` with deg r < deg d.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = d.leading().inv()?;
        let mut r = self.coeffs.clone();
        let n = self.coeffs.len();
        let mut q = vec![self.field.zero(); n.saturating_sub(dd)];
        for i in (dd..n).rev() {
            let c = &r[i] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i - dd + j] = &r[i - dd + j] - &(&c * dc);
            }
            q[i - dd] = c;
        }
        r.truncate(dd);
        Ok((Poly::new(self.field, q), Poly::new(self.field, r)))
    }

    /// Whether `self = c·other` for some scalar `c` (zero counts only against zero).
    pub fn is_scalar_multiple_of(&self, other: &Poly) -> bool {
        match (self.is_zero(), other.is_zero()) {
            (true, _) => true,
            (false, true) => false,
            (false, false) => {
                if self.degree() != other.degree() {
                    return false;
                }
                let c = self.leading().try_div(&other.leading()).expect("nonzero leading coefficient");
                *self == other.scale(&c)
            }
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("({c})λ"),
                _ => format!("({c})λ^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(self.field, (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(self.field, (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(self.field, out)
    }
}

/// The monic polynomials `p_0..p_{d+1}` of `λp_i = p_{i+1} + a_i p_i + x_i p_{i-1}`
/// with `p_0 = 1`, `p_{-1} = 0`.
pub fn poly_three_term(a: &[Elem], x: &[Elem]) -> Result<Vec<Poly>> {
    if a.is_empty() || a.len() != x.len() + 1 {
        return Err(Error::Length(format!("expected |a| = |x| + 1 >= 1, got |a| = {}, |x| = {}", a.len(), x.len())));
    }
    let f = a[0].field();
    let lam = Poly::lambda(f);
    let mut out = vec![Poly::one(f)];
    for i in 0..a.len() {
        let shifted = &(&lam - &Poly::constant(a[i].clone())) * &out[i];
        let next = if i == 0 { shifted } else { &shifted - &out[i - 1].scale(&x[i - 1]) };
        out.push(next);
    }
    Ok(out)
}

/// A dense row-major matrix. Most of the library uses square matrices; the
/// linear solvers also accept rectangular ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// Shape predicates for [`structure_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Diagonal,
    Tridiagonal,
    IrreducibleTridiagonal,
    LowerBidiagonal,
    UpperBidiagonal,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn diag(field: FieldSpec, entries: &[Elem]) -> Self {
        let mut m = Matrix::zeros(field, entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let data: Vec<Elem> = rows.into_iter().flatten().collect();
        if let Some(bad) = data.iter().find(|e| !field.contains(e)) {
            return Err(Error::NotInField(bad.to_string()));
        }
        Ok(Matrix { field, rows: r, cols: c, data })
    }

    /// A square matrix from small integers, convenient for fixtures.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let rows = rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        Matrix::from_rows(field, rows).expect("integer rows are well formed")
    }

    /// A single column.
    pub fn column_vector(field: FieldSpec, v: &[Elem]) -> Self {
        Matrix { field, rows: v.len(), cols: 1, data: v.to_vec() }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Order of a square matrix.
    pub fn n(&self) -> usize {
        debug_assert!(self.is_square());
        self.rows
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Elem::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn trace(&self) -> Elem {
        (0..self.rows.min(self.cols)).fold(self.field.zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn scale(&self, c: &Elem) -> Matrix {
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    /// `self · v` for a coordinate vector `v`.
    pub fn mul_vec(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(self.field.zero(), |acc, (a, b)| acc + a * b))
            .collect()
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else { continue };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("pivot is nonzero");
            for j in c..m.cols {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let t = &f * &m[(r, j)];
                        m[(i, j)] = &m[(i, j)] - &t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of `{v : self·v = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Elem>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![self.field.zero(); self.cols];
                v[fc] = self.field.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -&r[(row, fc)];
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        solve_linear(self, &Matrix::identity(self.field, self.rows)).ok().flatten()
    }

    /// Entries of the main diagonal.
    pub fn diagonal(&self) -> Vec<Elem> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Elem;
    fn index(&self, (i, j): (usize, usize)) -> &Elem {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Elem {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(Elem::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum dimension mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference dimension mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] = &out[(i, j)] + &(a * &rhs[(k, j)]);
                }
            }
        }
        out
    }
}

/// Horner evaluation `p(M)`.
pub fn mat_poly_eval(p: &Poly, m: &Matrix) -> Matrix {
    let n = m.n();
    let id = Matrix::identity(m.field(), n);
    p.coeffs().iter().rev().fold(Matrix::zeros(m.field(), n, n), |acc, c| &(&acc * m) + &id.scale(c))
}

/// `X` with `A·X = B`, or `None` if `A` is singular.
pub fn solve_linear(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    if !a.is_square() || a.rows != b.rows {
        return Err(Error::Dimension(format!(
            "A is {}x{}, B has {} rows",
            a.rows, a.cols, b.rows
        )));
    }
    let n = a.rows;
    let mut aug = Matrix::zeros(a.field, n, n + b.cols);
    for i in 0..n {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)].clone();
        }
        for j in 0..b.cols {
            aug[(i, n + j)] = b[(i, j)].clone();
        }
    }
    let (r, pivots) = aug.rref();
    if n > 0 && (pivots.len() < n || pivots[n - 1] != n - 1) {
        return Ok(None);
    }
    let mut x = Matrix::zeros(a.field, n, b.cols);
    for i in 0..n {
        for j in 0..b.cols {
            x[(i, j)] = r[(i, n + j)].clone();
        }
    }
    Ok(Some(x))
}

/// Whether a square matrix matches the shape. `IrreducibleTridiagonal`
/// also requires every sub- and superdiagonal entry to be nonzero.
pub fn structure_check(m: &Matrix, shape: Shape) -> bool {
    if !m.is_square() {
        return false;
    }
    let n = m.rows;
    let allowed = |i: usize, j: usize| match shape {
        Shape::Diagonal => i == j,
        Shape::Tridiagonal | Shape::IrreducibleTridiagonal => i.abs_diff(j) <= 1,
        Shape::LowerBidiagonal => i == j || i == j + 1,
        Shape::UpperBidiagonal => i == j || j == i + 1,
    };
    let zeros_ok = (0..n).all(|i| (0..n).all(|j| allowed(i, j) || m[(i, j)].is_zero()));
    if shape != Shape::IrreducibleTridiagonal {
        return zeros_ok;
    }
    zeros_ok && (1..n).all(|i| !m[(i, i - 1)].is_zero() && !m[(i - 1, i)].is_zero())
}

/// Whether two vectors span the same line (both nonzero).
pub fn proportional(u: &[Elem], v: &[Elem]) -> bool {
    let Some(k) = u.iter().position(|x| !x.is_zero()) else { return false };
    if v[k].is_zero() {
        return false;
    }
    let c = v[k].try_div(&u[k]).expect("nonzero pivot");
    u.iter().zip(v).all(|(a, b)| &(a * &c) == b)
}
