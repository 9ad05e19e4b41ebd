//! Dense exact linear algebra over the rationals.
//!
//! Row reduction always picks the leftmost column with a nonzero entry and,
//! within that column, the smallest available row index. Every result that
//! depends on a choice of basis is therefore reproducible bit for bit.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch { op: "from_rows", left: (r, c), right: (1, row.len()) });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: r, cols: c, data })
    }

    /// Convenience constructor from integer rows; panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged integer matrix");
            data.extend(row.iter().map(|&x| Scalar::from_i64(x)));
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    pub fn column(v: Vec<Scalar>) -> Self {
        let n = v.len();
        Matrix { rows: n, cols: 1, data: v }
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

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Scalar] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = &self[(i, j)];
                    if i == j { v.is_one() } else { v.is_zero() }
                })
            })
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(Scalar::is_integer)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "mul",
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let p = a * b;
                        out[(i, j)] += &p;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip(rhs, "add", |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip(rhs, "sub", |a, b| a - b)
    }

    fn zip(&self, rhs: &Matrix, op: &'static str, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch {
                op,
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn neg(&self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }

    /// Kronecker product; row/column `(i, k)` sits at `i * other.rows + k`.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] = a * &other[(k, l)];
                    }
                }
            }
        }
        out
    }

    /// Simultaneous row and column permutation: `out[p[i]][p[j]] = self[i][j]`.
    pub fn permute(&self, perm: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(perm[i], perm[j])] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self[(r, c)].recip();
            if !inv.is_one() {
                for j in c..self.cols {
                    let v = &self[(r, j)] * &inv;
                    self[(r, j)] = v;
                }
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for j in c..self.cols {
                    if self[(r, j)].is_zero() {
                        continue;
                    }
                    let d = &f * &self[(r, j)];
                    self[(i, j)] -= &d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det *= &piv;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] / &piv;
                for j in c..n {
                    let d = &f * &m[(c, j)];
                    m[(i, j)] -= &d;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Scalar::one();
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
        }
        write!(f, "]")
    }
}

/// All solutions of `A·X = B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Inconsistent,
    /// `particular + span(kernel)`; kernel elements have the shape of `X`.
    Affine { particular: Matrix, kernel: Vec<Matrix> },
}

/// Solves `A·X = B` exactly. Free variables of the particular solution are 0.
pub fn rref_solve(a: &Matrix, b: &Matrix) -> Result<Solution> {
    if a.rows != b.rows {
        return Err(Error::DimensionMismatch { op: "rref_solve", left: (a.rows, a.cols), right: (b.rows, b.cols) });
    }
    let n = a.cols;
    let mut aug = Matrix::zeros(a.rows, n + b.cols);
    for i in 0..a.rows {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)].clone();
        }
        for j in 0..b.cols {
            aug[(i, n + j)] = b[(i, j)].clone();
        }
    }
    // eliminate on A's columns only so that pivots never land in B
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..n {
        if r == aug.rows {
            break;
        }
        let Some(p) = (r..aug.rows).find(|&i| !aug[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..aug.cols {
                aug.data.swap(p * aug.cols + j, r * aug.cols + j);
            }
        }
        let inv = aug[(r, c)].recip();
        for j in c..aug.cols {
            let v = &aug[(r, j)] * &inv;
            aug[(r, j)] = v;
        }
        for i in 0..aug.rows {
            if i == r || aug[(i, c)].is_zero() {
                continue;
            }
            let f = aug[(i, c)].clone();
            for j in c..aug.cols {
                if aug[(r, j)].is_zero() {
                    continue;
                }
                let d = &f * &aug[(r, j)];
                aug[(i, j)] -= &d;
            }
        }
        pivots.push(c);
        r += 1;
    }
    for i in r..aug.rows {
        if (0..b.cols).any(|j| !aug[(i, n + j)].is_zero()) {
            return Ok(Solution::Inconsistent);
        }
    }
    let mut particular = Matrix::zeros(n, b.cols);
    for (row, &pc) in pivots.iter().enumerate() {
        for j in 0..b.cols {
            particular[(pc, j)] = aug[(row, n + j)].clone();
        }
    }
    let null = null_vectors(&aug, &pivots, n);
    let mut kernel = Vec::with_capacity(null.len() * b.cols);
    for v in &null {
        for j in 0..b.cols {
            let mut k = Matrix::zeros(n, b.cols);
            for (i, x) in v.iter().enumerate() {
                k[(i, j)] = x.clone();
            }
            kernel.push(k);
        }
    }
    Ok(Solution::Affine { particular, kernel })
}

fn null_vectors(reduced: &Matrix, pivots: &[usize], n: usize) -> Vec<Vec<Scalar>> {
    let mut is_pivot = vec![false; n];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Scalar::zero(); n];
            v[f] = Scalar::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&reduced[(row, f)];
            }
            v
        })
        .collect()
}

/// Basis of `{x : A·x = 0}` as raw vectors; free coordinates are 0/1.
pub fn kernel_vectors(a: &Matrix) -> Vec<Vec<Scalar>> {
    let (r, pivots) = a.rref();
    null_vectors(&r, &pivots, a.cols)
}

/// Basis of `{x : A·x = 0}` as column matrices.
pub fn kernel_basis(a: &Matrix) -> Vec<Matrix> {
    kernel_vectors(a).into_iter().map(Matrix::column).collect()
}

/// A polynomial with rational coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Scalar::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(Scalar::to_bigint).collect()
    }

    pub fn mul(&self, rhs: &Polynomial) -> Polynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Polynomial::new(Vec::new());
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Polynomial::new(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || d == 0;
            if show_coeff {
                write!(f, "{}", mag)?;
            }
            match d {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{}", d)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Monic characteristic polynomial `det(x·I − A)` via Hessenberg reduction.
pub fn char_poly(a: &Matrix) -> Result<Polynomial> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows, cols: a.cols });
    }
    let n = a.rows;
    let mut h = a.clone();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| !h[(i, m - 1)].is_zero()) else {
            continue;
        };
        if i != m {
            for j in 0..n {
                h.data.swap(i * n + j, m * n + j);
            }
            for r in 0..n {
                h.data.swap(r * n + i, r * n + m);
            }
        }
        let piv = h[(m, m - 1)].clone();
        for j in m + 1..n {
            if h[(j, m - 1)].is_zero() {
                continue;
            }
            let u = &h[(j, m - 1)] / &piv;
            for c in 0..n {
                let d = &u * &h[(m, c)];
                h[(j, c)] -= &d;
            }
            for r in 0..n {
                let d = &u * &h[(r, j)];
                h[(r, m)] += &d;
            }
        }
    }
    // p[k] is the characteristic polynomial of the leading k×k block
    let mut p: Vec<Polynomial> = Vec::with_capacity(n + 1);
    p.push(Polynomial::from_i64(&[1]));
    for m in 1..=n {
        let lin = Polynomial::new(vec![-&h[(m - 1, m - 1)], Scalar::one()]);
        let mut pm = lin.mul(&p[m - 1]).coeffs;
        let mut t = Scalar::one();
        for i in 1..m {
            t = &t * &h[(m - i, m - i - 1)];
            if t.is_zero() {
                break;
            }
            let f = &t * &h[(m - i - 1, m - 1)];
            for (k, c) in p[m - i - 1].coeffs.iter().enumerate() {
                pm[k] -= &(&f * c);
            }
        }
        p.push(Polynomial::new(pm));
    }
    Ok(p.pop().unwrap())
}

/// `A^e` by binary powering.
pub fn matrix_power(a: &Matrix, mut e: u64) -> Result<Matrix> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows, cols: a.cols });
    }
    let mut acc = Matrix::identity(a.rows);
    let mut base = a.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base)?;
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base)?;
        }
    }
    Ok(acc)
}

/// True iff the integer matrix `A` has determinant ±1.
pub fn is_unimodular(a: &Matrix) -> Result<bool> {
    if !a.is_integral() {
        return Err(Error::NonInteger);
    }
    let d = a.determinant()?;
    Ok(d.is_one() || (-d).is_one())
}

/// Expresses vectors as combinations of a fixed independent family.
///
/// The family is row reduced once; each query is then a single sweep over
/// the pivot columns.
#[derive(Clone, Debug)]
pub struct SpanReducer {
    len: usize,
    reduced: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
    // reduced[r] = Σ_i transform[r][i] · family[i]
    transform: Vec<Vec<Scalar>>,
    family_size: usize,
}

impl SpanReducer {
    /// `len` is the ambient dimension; the family must be linearly independent.
    pub fn new(len: usize, family: &[Vec<Scalar>]) -> Result<Self> {
        let k = family.len();
        let mut m = Matrix::zeros(k, len + k);
        for (i, v) in family.iter().enumerate() {
            if v.len() != len {
                return Err(Error::DimensionMismatch { op: "SpanReducer", left: (k, len), right: (1, v.len()) });
            }
            for (j, x) in v.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
            m[(i, len + i)] = Scalar::one();
        }
        let pivots_all = m.rref_in_place();
        let pivots: Vec<usize> = pivots_all.iter().copied().filter(|&p| p < len).collect();
        if pivots.len() != k {
            return Err(Error::Singular);
        }
        let reduced = (0..k).map(|r| m.row(r)[..len].to_vec()).collect();
        let transform = (0..k).map(|r| m.row(r)[len..].to_vec()).collect();
        Ok(SpanReducer { len, reduced, pivots, transform, family_size: k })
    }

    pub fn dim(&self) -> usize {
        self.family_size
    }

    /// Coordinates of `v` in the family, or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        debug_assert_eq!(v.len(), self.len);
        let mut rest = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.pivots.len());
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = rest[p].clone();
            if !c.is_zero() {
                for (j, x) in self.reduced[r].iter().enumerate() {
                    if !x.is_zero() {
                        rest[j] -= &(&c * x);
                    }
                }
            }
            coeffs.push(c);
        }
        if rest.iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut out = vec![Scalar::zero(); self.family_size];
        for (r, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, t) in self.transform[r].iter().enumerate() {
                if !t.is_zero() {
                    out[i] += &(c * t);
                }
            }
        }
        Some(out)
    }
}

/// Row space of a set of vectors kept in reduced echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    len: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(len: usize) -> Self {
        Subspace { len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn spanned_by(len: usize, vectors: &[Vec<Scalar>]) -> Self {
        let mut s = Self::zero(len);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.len
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Echelon basis (pivot entries 1, pivot columns cleared elsewhere).
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis; the remainder is zero iff `v` is inside.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut rest = v.to_vec();
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            let c = rest[p].clone();
            if c.is_zero() {
                continue;
            }
            for (j, x) in r.iter().enumerate() {
                if !x.is_zero() {
                    rest[j] -= &(&c * x);
                }
            }
        }
        rest
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut rest = self.reduce(v);
        let Some(p) = rest.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = rest[p].recip();
        for x in rest.iter_mut() {
            *x = &*x * &inv;
        }
        for r in self.rows.iter_mut() {
            let c = r[p].clone();
            if c.is_zero() {
                continue;
            }
            for (j, x) in rest.iter().enumerate() {
                if !x.is_zero() {
                    r[j] -= &(&c * x);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, rest);
        true
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }
}

/// Indices of the vectors that extend `base` greedily, in the given order.
pub fn greedy_complement(base: &Subspace, candidates: &[Vec<Scalar>]) -> Vec<usize> {
    let mut span = base.clone();
    candidates
        .iter()
        .enumerate()
        .filter_map(|(i, v)| span.insert(v).then_some(i))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn q(n: i64) -> Scalar {
        Scalar::from_i64(n)
    }

    #[test]
    fn solve_identity() {
        let i2 = Matrix::identity(2);
        match rref_solve(&i2, &i2).unwrap() {
            Solution::Affine { particular, kernel } => {
                assert_eq!(particular, i2);
                assert!(kernel.is_empty());
            }
            Solution::Inconsistent => panic!(),
        }
    }

    #[test]
    fn solve_zero_map() {
        let z = Matrix::zeros(2, 2);
        let Solution::Affine { particular, kernel } = rref_solve(&z, &z).unwrap() else { panic!() };
        assert!(particular.is_zero());
        let expected: Vec<Matrix> = (0..4)
            .map(|k| {
                let mut m = Matrix::zeros(2, 2);
                m[(k / 2, k % 2)] = Scalar::one();
                m
            })
            .collect();
        assert_eq!(kernel, expected);
    }

    #[test]
    fn solve_back_substitution() {
        let a = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
        let b = Matrix::from_i64(&[&[1], &[0]]);
        let Solution::Affine { particular, kernel } = rref_solve(&a, &b).unwrap() else { panic!() };
        assert_eq!(particular, Matrix::from_i64(&[&[1], &[0]]));
        assert!(kernel.is_empty());
    }

    #[test]
    fn solve_inconsistent_and_mismatch() {
        let a = Matrix::from_i64(&[&[1, 1], &[1, 1]]);
        let b = Matrix::from_i64(&[&[1], &[0]]);
        assert_eq!(rref_solve(&a, &b).unwrap(), Solution::Inconsistent);
        assert!(rref_solve(&a, &Matrix::zeros(3, 1)).is_err());
    }

    #[test]
    fn kernels() {
        assert!(kernel_basis(&Matrix::identity(3)).is_empty());
        assert_eq!(kernel_basis(&Matrix::zeros(2, 3)).len(), 3);
        let k = kernel_basis(&Matrix::from_i64(&[&[1, 1, 0], &[0, 0, 1]]));
        assert_eq!(k, vec![Matrix::column(vec![q(-1), q(1), q(0)])]);
    }

    #[test]
    fn characteristic_polynomials() {
        assert_eq!(char_poly(&Matrix::identity(2)).unwrap(), Polynomial::from_i64(&[1, -2, 1]));
        let rot = Matrix::from_i64(&[&[0, 1], &[-1, 0]]);
        assert_eq!(char_poly(&rot).unwrap(), Polynomial::from_i64(&[1, 0, 1]));
        let phi = Matrix::from_i64(&[&[-1, -1], &[1, 0]]);
        assert_eq!(char_poly(&phi).unwrap(), Polynomial::from_i64(&[1, 1, 1]));
        assert_eq!(char_poly(&phi).unwrap().to_string(), "x^2 + x + 1");
        assert!(char_poly(&Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn powers() {
        let a = Matrix::from_i64(&[&[0, 1], &[-1, 1]]);
        assert_eq!(matrix_power(&a, 0).unwrap(), Matrix::identity(2));
        assert_eq!(matrix_power(&a, 3).unwrap(), Matrix::identity(2).neg());
        assert_eq!(matrix_power(&Matrix::identity(5), 1000).unwrap(), Matrix::identity(5));
        assert!(matrix_power(&Matrix::zeros(1, 2), 2).is_err());
    }

    #[test]
    fn unimodular() {
        assert!(is_unimodular(&Matrix::identity(3)).unwrap());
        assert!(!is_unimodular(&Matrix::from_i64(&[&[2, 0], &[0, 1]])).unwrap());
        assert!(is_unimodular(&Matrix::from_i64(&[&[1, 1], &[0, 1]])).unwrap());
        let half = Matrix::from_vec(1, 1, vec![Scalar::from_frac(1, 2)]);
        assert_eq!(is_unimodular(&half), Err(Error::NonInteger));
    }

    #[test]
    fn span_reducer_coordinates() {
        let fam = vec![vec![q(1), q(1), q(0)], vec![q(0), q(1), q(1)]];
        let r = SpanReducer::new(3, &fam).unwrap();
        assert_eq!(r.coordinates(&[q(2), q(5), q(3)]), Some(vec![q(2), q(3)]));
        assert_eq!(r.coordinates(&[q(1), q(0), q(0)]), None);
    }

    #[test]
    fn subspace_insert_and_contains() {
        let mut s = Subspace::zero(3);
        assert!(s.insert(&[q(0), q(2), q(2)]));
        assert!(!s.insert(&[q(0), q(1), q(1)]));
        assert!(s.insert(&[q(1), q(1), q(0)]));
        assert!(s.contains(&[q(1), q(2), q(1)]));
        assert!(!s.contains(&[q(0), q(0), q(1)]));
        assert_eq!(s.pivots(), &[0, 1]);
    }
}
