//! Bounded complexes of finitely generated projective modules, complexes of
//! vector spaces, total Hom complexes and tensor products of complexes.
//!
//! A term of a [`ProjComplex`] is a list of vertices `x_1, ..., x_k` standing
//! for `e_{x_1}A ⊕ ... ⊕ e_{x_k}A`. A map between such sums is an element
//! matrix `a[t][s] ∈ e_{y_t}·A·e_{x_s}`: the generator of summand `s` goes to
//! `Σ_t a[t][s]` placed in summand `t`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{axpy, collect, Algebra, Elem};
use crate::error::{Error, Result};
use crate::linalg::{kernel_vectors, Matrix, SpanReducer, Subspace};
use crate::module::{free_module, Module};
use crate::scalar::Scalar;

/// `[target summand][source summand]`.
pub type ElemMatrix = Vec<Vec<Elem>>;

pub fn zero_elem_matrix(rows: usize, cols: usize) -> ElemMatrix {
    vec![vec![Vec::new(); cols]; rows]
}

/// `(g ∘ f)[u][s] = Σ_t g[u][t]·f[t][s]`.
pub fn compose_elem(alg: &Algebra, g: &ElemMatrix, f: &ElemMatrix) -> ElemMatrix {
    let rows = g.len();
    let cols = f.first().map_or(0, Vec::len);
    let mut out = zero_elem_matrix(rows, cols);
    for (u, grow) in g.iter().enumerate() {
        for s in 0..cols {
            let mut acc = BTreeMap::new();
            for (t, gut) in grow.iter().enumerate() {
                if gut.is_empty() || f[t][s].is_empty() {
                    continue;
                }
                let p = alg.mul(gut, &f[t][s]);
                axpy(&mut acc, &Scalar::one(), &p);
            }
            out[u][s] = collect(acc);
        }
    }
    out
}

fn elem_matrix_is_zero(m: &ElemMatrix) -> bool {
    m.iter().flatten().all(Vec::is_empty)
}

fn scale_elem(e: &Elem, c: &Scalar) -> Elem {
    if c.is_zero() {
        return Vec::new();
    }
    e.iter().map(|(i, v)| (*i, v * c)).collect()
}

fn add_elem(a: &Elem, b: &Elem) -> Elem {
    let mut acc = BTreeMap::new();
    axpy(&mut acc, &Scalar::one(), a);
    axpy(&mut acc, &Scalar::one(), b);
    collect(acc)
}

/// The module matrix (rows = basis of the source sum) of an element matrix.
pub fn elem_matrix_to_module_map(alg: &Algebra, src: &[usize], tgt: &[usize], m: &ElemMatrix) -> Matrix {
    let tgt_bases: Vec<Vec<usize>> = tgt.iter().map(|&y| alg.left_corner_basis(y)).collect();
    let mut offsets = Vec::with_capacity(tgt.len());
    let mut total = 0;
    for b in &tgt_bases {
        offsets.push(total);
        total += b.len();
    }
    let src_dim: usize = src.iter().map(|&x| alg.left_corner_basis(x).len()).sum();
    let mut out = Matrix::zeros(src_dim, total);
    let mut row = 0;
    for (s, &x) in src.iter().enumerate() {
        for b in alg.left_corner_basis(x) {
            for (t, basis) in tgt_bases.iter().enumerate() {
                let a = &m[t][s];
                if a.is_empty() {
                    continue;
                }
                let img = alg.mul(a, &[(b, Scalar::one())]);
                for (c, v) in img {
                    let pos = basis.binary_search(&c).expect("image stays in the summand");
                    out[(row, offsets[t] + pos)] = v;
                }
            }
            row += 1;
        }
    }
    out
}

/// A bounded complex of finitely generated projective right modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjComplex {
    lo: i32,
    terms: Vec<Vec<usize>>,
    diffs: Vec<ElemMatrix>,
}

impl ProjComplex {
    /// Validates corners and `d ∘ d = 0`; `diffs[k]` goes from degree `lo + k`.
    pub fn new(alg: &Algebra, lo: i32, terms: Vec<Vec<usize>>, diffs: Vec<ElemMatrix>) -> Result<Self> {
        let c = ProjComplex::from_parts(lo, terms, diffs)?;
        c.validate(alg)?;
        Ok(c)
    }

    /// Shape checks only; `d ∘ d = 0` is not verified.
    pub fn from_parts(lo: i32, terms: Vec<Vec<usize>>, diffs: Vec<ElemMatrix>) -> Result<Self> {
        if terms.is_empty() {
            if !diffs.is_empty() {
                return Err(Error::InvalidModule("differentials without terms".into()));
            }
            return Ok(ProjComplex::zero());
        }
        if diffs.len() + 1 != terms.len() {
            return Err(Error::InvalidModule(format!(
                "{} terms need {} differentials, found {}",
                terms.len(),
                terms.len() - 1,
                diffs.len()
            )));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.len() != terms[k + 1].len() || d.iter().any(|row| row.len() != terms[k].len()) {
                return Err(Error::InvalidModule(format!("differential from degree {} has the wrong shape", lo + k as i32)));
            }
        }
        let mut c = ProjComplex { lo, terms, diffs };
        c.trim();
        Ok(c)
    }

    pub fn zero() -> Self {
        ProjComplex { lo: 0, terms: Vec::new(), diffs: Vec::new() }
    }

    /// `⊕ e_x A` in a single degree.
    pub fn stalk(vertices: Vec<usize>, degree: i32) -> Self {
        let mut c = ProjComplex { lo: degree, terms: vec![vertices], diffs: Vec::new() };
        c.trim();
        c
    }

    /// The regular module `A_A` as a complex in degree 0.
    pub fn regular(alg: &Algebra) -> Self {
        ProjComplex::stalk((0..alg.vertex_count()).collect(), 0)
    }

    fn trim(&mut self) {
        while self.terms.last().is_some_and(Vec::is_empty) {
            self.terms.pop();
            self.diffs.pop();
        }
        while self.terms.first().is_some_and(Vec::is_empty) {
            self.terms.remove(0);
            if !self.diffs.is_empty() {
                self.diffs.remove(0);
            }
            self.lo += 1;
        }
        if self.terms.is_empty() {
            self.lo = 0;
            self.diffs.clear();
        }
    }

    pub fn validate(&self, alg: &Algebra) -> Result<()> {
        let n = alg.vertex_count();
        if self.terms.iter().flatten().any(|&x| x >= n) {
            return Err(Error::InvalidModule("summand vertex out of range".into()));
        }
        for (k, d) in self.diffs.iter().enumerate() {
            for (t, row) in d.iter().enumerate() {
                for (s, e) in row.iter().enumerate() {
                    let want = (self.terms[k + 1][t], self.terms[k][s]);
                    if e.iter().any(|(b, _)| *b >= alg.dim() || alg.corner(*b) != want) {
                        return Err(Error::InvalidModule(format!(
                            "differential entry ({}, {}) in degree {} is not in e_{}·A·e_{}",
                            t,
                            s,
                            self.lo + k as i32,
                            want.0 + 1,
                            want.1 + 1
                        )));
                    }
                }
            }
        }
        if let Some(n) = self.square_defect(alg) {
            return Err(Error::InvalidModule(format!("d∘d ≠ 0 starting in degree {}", n)));
        }
        Ok(())
    }

    /// First degree `n` with `d^{n+1} ∘ d^n ≠ 0`.
    pub fn square_defect(&self, alg: &Algebra) -> Option<i32> {
        for k in 0..self.diffs.len().saturating_sub(1) {
            if !elem_matrix_is_zero(&compose_elem(alg, &self.diffs[k + 1], &self.diffs[k])) {
                return Some(self.lo + k as i32);
            }
        }
        None
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    /// Highest nonzero degree (equal to `lo - 1` for the zero complex).
    pub fn hi(&self) -> i32 {
        self.lo + self.terms.len() as i32 - 1
    }

    pub fn degrees(&self) -> core::ops::RangeInclusive<i32> {
        self.lo()..=self.hi()
    }

    pub fn term(&self, n: i32) -> &[usize] {
        if n < self.lo || n > self.hi() {
            return &[];
        }
        &self.terms[(n - self.lo) as usize]
    }

    pub fn terms(&self) -> &[Vec<usize>] {
        &self.terms
    }

    /// `d^n` from degree `n` to `n + 1` (zero outside the support).
    pub fn diff(&self, n: i32) -> ElemMatrix {
        if n < self.lo || n >= self.hi() {
            return zero_elem_matrix(self.term(n + 1).len(), self.term(n).len());
        }
        self.diffs[(n - self.lo) as usize].clone()
    }

    pub fn diff_entry(&self, n: i32, t: usize, s: usize) -> &[(usize, Scalar)] {
        if n < self.lo || n >= self.hi() {
            return &[];
        }
        &self.diffs[(n - self.lo) as usize][t][s]
    }

    pub fn diffs(&self) -> &[ElemMatrix] {
        &self.diffs
    }

    /// `X[r]`: degree `n` holds `X^{n+r}`, differentials multiplied by `(-1)^r`.
    pub fn shift(&self, r: i32) -> ProjComplex {
        let sign = if r.rem_euclid(2) == 0 { Scalar::one() } else { -Scalar::one() };
        ProjComplex {
            lo: if self.is_zero() { 0 } else { self.lo - r },
            terms: self.terms.clone(),
            diffs: self
                .diffs
                .iter()
                .map(|d| d.iter().map(|row| row.iter().map(|e| scale_elem(e, &sign)).collect()).collect())
                .collect(),
        }
    }

    pub fn direct_sum(&self, other: &ProjComplex) -> ProjComplex {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        let mut terms = Vec::new();
        let mut diffs = Vec::new();
        for n in lo..=hi {
            let mut t = self.term(n).to_vec();
            t.extend_from_slice(other.term(n));
            terms.push(t);
            if n < hi {
                let (a, b) = (self.diff(n), other.diff(n));
                let rows = self.term(n + 1).len() + other.term(n + 1).len();
                let (ca, cb) = (self.term(n).len(), other.term(n).len());
                let mut d = zero_elem_matrix(rows, ca + cb);
                for (t, row) in a.iter().enumerate() {
                    for (s, e) in row.iter().enumerate() {
                        d[t][s] = e.clone();
                    }
                }
                let ra = self.term(n + 1).len();
                for (t, row) in b.iter().enumerate() {
                    for (s, e) in row.iter().enumerate() {
                        d[ra + t][ca + s] = e.clone();
                    }
                }
                diffs.push(d);
            }
        }
        let mut c = ProjComplex { lo, terms, diffs };
        c.trim();
        c
    }

    /// `Σ_n (-1)^n [X^n]` in the basis of indecomposable projectives.
    pub fn k0_class(&self, vertex_count: usize) -> Vec<i64> {
        let mut v = vec![0i64; vertex_count];
        for n in self.degrees() {
            let sign = if n.rem_euclid(2) == 0 { 1 } else { -1 };
            for &x in self.term(n) {
                v[x] += sign;
            }
        }
        v
    }

    pub fn term_module(&self, alg: &Algebra, n: i32) -> Module {
        free_module(alg, self.term(n))
    }

    /// `d^n` as a module matrix `X^n → X^{n+1}`.
    pub fn diff_matrix(&self, alg: &Algebra, n: i32) -> Matrix {
        elem_matrix_to_module_map(alg, self.term(n), self.term(n + 1), &self.diff(n))
    }

    /// Total dimension of all terms over the ground field.
    pub fn total_dim(&self, alg: &Algebra) -> usize {
        self.terms.iter().flatten().map(|&x| alg.left_corner_basis(x).len()).sum()
    }

    /// Cohomology dimensions `dim H^n(X)` over the ground field, for all `n` in the support.
    pub fn cohomology_dims(&self, alg: &Algebra) -> Vec<(i32, usize)> {
        self.degrees()
            .map(|n| {
                let dn = self.diff_matrix(alg, n);
                let dp = self.diff_matrix(alg, n - 1);
                let dim: usize = self.term(n).iter().map(|&x| alg.left_corner_basis(x).len()).sum();
                (n, dim - dn.rank() - dp.rank())
            })
            .collect()
    }
}

/// A bounded complex of vector spaces; `d^n` is a `dim^{n+1} × dim^n` matrix
/// acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectComplex {
    lo: i32,
    dims: Vec<usize>,
    diffs: Vec<Matrix>,
}

impl VectComplex {
    pub fn new(lo: i32, dims: Vec<usize>, diffs: Vec<Matrix>) -> Result<Self> {
        if !dims.is_empty() && diffs.len() + 1 != dims.len() {
            return Err(Error::InvalidModule("differential count mismatch".into()));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.rows() != dims[k + 1] || d.cols() != dims[k] {
                return Err(Error::DimensionMismatch {
                    op: "VectComplex",
                    left: (dims[k + 1], dims[k]),
                    right: (d.rows(), d.cols()),
                });
            }
        }
        for k in 0..diffs.len().saturating_sub(1) {
            if !diffs[k + 1].mul(&diffs[k])?.is_zero() {
                return Err(Error::InvalidModule(format!("d∘d ≠ 0 in degree {}", lo + k as i32)));
            }
        }
        Ok(VectComplex { lo, dims, diffs })
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.dims.len() as i32 - 1
    }

    pub fn dim(&self, n: i32) -> usize {
        if n < self.lo || n > self.hi() {
            0
        } else {
            self.dims[(n - self.lo) as usize]
        }
    }

    /// `d^n` (a zero matrix outside the support).
    pub fn diff(&self, n: i32) -> Matrix {
        if n < self.lo || n >= self.hi() {
            Matrix::zeros(self.dim(n + 1), self.dim(n))
        } else {
            self.diffs[(n - self.lo) as usize].clone()
        }
    }

    pub fn cohomology_dim(&self, n: i32) -> usize {
        let d = self.dim(n);
        if d == 0 {
            return 0;
        }
        d - self.diff(n).rank() - self.diff(n - 1).rank()
    }

    /// Canonical representatives of `H^n`.
    pub fn cohomology(&self, n: i32) -> Result<Cohomology> {
        Cohomology::new(self, n)
    }

    pub fn euler_characteristic(&self) -> i64 {
        (self.lo..=self.hi())
            .map(|n| if n.rem_euclid(2) == 0 { self.dim(n) as i64 } else { -(self.dim(n) as i64) })
            .sum()
    }

    /// `K ⊗ L` over the ground field with the Koszul sign.
    pub fn tensor(&self, other: &VectComplex) -> Result<VectComplex> {
        if self.dims.is_empty() || other.dims.is_empty() {
            return VectComplex::new(0, Vec::new(), Vec::new());
        }
        let lo = self.lo + other.lo;
        let hi = self.hi() + other.hi();
        let layout = |n: i32| -> Vec<(i32, usize)> {
            let mut v = Vec::new();
            let mut off = 0;
            for p in self.lo..=self.hi() {
                let q = n - p;
                let d = self.dim(p) * other.dim(q);
                if d > 0 {
                    v.push((p, off));
                    off += d;
                }
            }
            v
        };
        let total = |n: i32| -> usize { (self.lo..=self.hi()).map(|p| self.dim(p) * other.dim(n - p)).sum() };
        let dims: Vec<usize> = (lo..=hi).map(total).collect();
        let mut diffs = Vec::new();
        for n in lo..hi {
            let mut m = Matrix::zeros(total(n + 1), total(n));
            let src = layout(n);
            let tgt: BTreeMap<i32, usize> = layout(n + 1).into_iter().collect();
            for (p, off) in src {
                let q = n - p;
                let (dp, dq) = (self.dim(p), other.dim(q));
                let sign = if p.rem_euclid(2) == 0 { Scalar::one() } else { -Scalar::one() };
                let dk = self.diff(p);
                let dl = other.diff(q);
                for i in 0..dp {
                    for j in 0..dq {
                        let col = off + i * dq + j;
                        if let Some(&o) = tgt.get(&(p + 1)) {
                            for i2 in 0..self.dim(p + 1) {
                                let v = &dk[(i2, i)];
                                if !v.is_zero() {
                                    m[(o + i2 * dq + j, col)] += v;
                                }
                            }
                        }
                        if let Some(&o) = tgt.get(&p) {
                            let dq1 = other.dim(q + 1);
                            for j2 in 0..dq1 {
                                let v = &dl[(j2, j)];
                                if !v.is_zero() {
                                    m[(o + i * dq1 + j2, col)] += &(&sign * v);
                                }
                            }
                        }
                    }
                }
            }
            diffs.push(m);
        }
        VectComplex::new(lo, dims, diffs)
    }
}

/// Representatives of `H^n = Z^n / B^n` chosen greedily from the kernel basis,
/// with a reducer computing classes of cycles.
#[derive(Clone, Debug)]
pub struct Cohomology {
    pub degree: i32,
    pub reps: Vec<Vec<Scalar>>,
    boundaries: Subspace,
    reducer: Option<SpanReducer>,
    ambient: usize,
}

impl Cohomology {
    fn new(c: &VectComplex, n: i32) -> Result<Self> {
        let ambient = c.dim(n);
        if ambient == 0 {
            return Ok(Cohomology { degree: n, reps: Vec::new(), boundaries: Subspace::zero(0), reducer: None, ambient });
        }
        let z = kernel_vectors(&c.diff(n));
        let b = Subspace::spanned_by(ambient, &c.diff(n - 1).transpose().to_rows());
        Cohomology::from_cycles(n, ambient, z, b)
    }

    pub(crate) fn from_cycles(n: i32, ambient: usize, z: Vec<Vec<Scalar>>, b: Subspace) -> Result<Self> {
        let mut span = b.clone();
        let reps: Vec<Vec<Scalar>> = z.into_iter().filter(|v| span.insert(v)).collect();
        let mut family = reps.clone();
        family.extend(b.basis().iter().cloned());
        let reducer = SpanReducer::new(ambient, &family)?;
        Ok(Cohomology { degree: n, boundaries: b, reps, reducer: Some(reducer), ambient })
    }

    /// The same cohomology with new representatives, which must be cycles
    /// independent modulo boundaries.
    pub fn rebased(&self, reps: Vec<Vec<Scalar>>) -> Result<Self> {
        if reps.len() != self.reps.len() {
            return Err(Error::Singular);
        }
        if self.ambient == 0 {
            return Ok(self.clone());
        }
        let mut family = reps.clone();
        family.extend(self.boundaries.basis().iter().cloned());
        let reducer = SpanReducer::new(self.ambient, &family)?;
        Ok(Cohomology {
            degree: self.degree,
            reps,
            boundaries: self.boundaries.clone(),
            reducer: Some(reducer),
            ambient: self.ambient,
        })
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Class of a cycle in the representative basis; `None` if `v` is not a cycle.
    pub fn class_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if self.ambient == 0 {
            return Some(Vec::new());
        }
        let mut c = self.reducer.as_ref()?.coordinates(v)?;
        c.truncate(self.reps.len());
        Some(c)
    }

    /// Whether a cycle is a boundary.
    pub fn is_boundary(&self, v: &[Scalar]) -> bool {
        self.class_of(v).is_some_and(|c| c.iter().all(Scalar::is_zero))
    }
}

/// A graded map `P → X` of degree `n`: `comps[p]` maps `P^p → X^{p+n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    pub degree: i32,
    pub comps: BTreeMap<i32, ElemMatrix>,
}

impl GradedMap {
    pub fn is_zero(&self) -> bool {
        self.comps.values().all(elem_matrix_is_zero)
    }

    /// `self ∘ other` for `other: Q → P`, `self: P → X`.
    pub fn compose(&self, alg: &Algebra, other: &GradedMap) -> GradedMap {
        let mut comps = BTreeMap::new();
        for (&p, g) in &other.comps {
            if let Some(f) = self.comps.get(&(p + other.degree)) {
                comps.insert(p, compose_elem(alg, f, g));
            }
        }
        GradedMap { degree: self.degree + other.degree, comps }
    }
}

#[derive(Clone, Debug)]
struct Block {
    p: i32,
    s: usize,
    t: usize,
    offset: usize,
    basis: Vec<usize>,
}

/// `Hom•(P, X)` with `(df)^p = d_X·f^p − (−1)^n f^{p+1}·d_P^p` in degree `n`,
/// together with the block layout that converts vectors to graded maps.
#[derive(Clone, Debug)]
pub struct HomComplex {
    pub complex: VectComplex,
    lo: i32,
    blocks: Vec<Vec<Block>>,
    lookup: Vec<BTreeMap<(i32, usize, usize), usize>>,
    src_terms: BTreeMap<i32, usize>,
    tgt_terms: BTreeMap<i32, usize>,
}

impl HomComplex {
    fn layout(&self, n: i32) -> Option<usize> {
        if n < self.lo || n >= self.lo + self.blocks.len() as i32 {
            None
        } else {
            Some((n - self.lo) as usize)
        }
    }

    pub fn dim(&self, n: i32) -> usize {
        self.complex.dim(n)
    }

    /// Coordinates of a graded map of degree `n`.
    pub fn encode(&self, f: &GradedMap) -> Vec<Scalar> {
        let n = f.degree;
        let Some(k) = self.layout(n) else {
            return Vec::new();
        };
        let mut v = vec![Scalar::zero(); self.complex.dim(n)];
        for (&p, m) in &f.comps {
            for (t, row) in m.iter().enumerate() {
                for (s, e) in row.iter().enumerate() {
                    if e.is_empty() {
                        continue;
                    }
                    let b = &self.blocks[k][self.lookup[k][&(p, s, t)]];
                    for (c, x) in e {
                        let pos = b.basis.binary_search(c).expect("entry in the right corner");
                        v[b.offset + pos] = x.clone();
                    }
                }
            }
        }
        v
    }

    pub fn decode(&self, n: i32, v: &[Scalar]) -> GradedMap {
        let mut comps: BTreeMap<i32, ElemMatrix> = BTreeMap::new();
        for p in self.src_terms.keys() {
            let rows = self.tgt_terms.get(&(p + n)).copied().unwrap_or(0);
            comps.insert(*p, zero_elem_matrix(rows, self.src_terms[p]));
        }
        if let Some(k) = self.layout(n) {
            for b in &self.blocks[k] {
                let e: Elem = b
                    .basis
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !v[b.offset + i].is_zero())
                    .map(|(i, &c)| (c, v[b.offset + i].clone()))
                    .collect();
                comps.get_mut(&b.p).expect("degree present")[b.t][b.s] = e;
            }
        }
        GradedMap { degree: n, comps }
    }
}

/// Builds `Hom•(P, X)` for complexes of projectives over the same algebra.
pub fn hom_complex(alg: &Algebra, p: &ProjComplex, x: &ProjComplex) -> Result<HomComplex> {
    let src_terms: BTreeMap<i32, usize> = p.degrees().map(|d| (d, p.term(d).len())).collect();
    let tgt_terms: BTreeMap<i32, usize> = x.degrees().map(|d| (d, x.term(d).len())).collect();
    if p.is_zero() || x.is_zero() {
        return Ok(HomComplex {
            complex: VectComplex::new(0, Vec::new(), Vec::new())?,
            lo: 0,
            blocks: Vec::new(),
            lookup: Vec::new(),
            src_terms,
            tgt_terms,
        });
    }
    let lo = x.lo() - p.hi();
    let hi = x.hi() - p.lo();
    let mut blocks = Vec::new();
    let mut lookup = Vec::new();
    let mut dims = Vec::new();
    for n in lo..=hi {
        let mut bs = Vec::new();
        let mut lk = BTreeMap::new();
        let mut off = 0;
        for pd in p.degrees() {
            let q = pd + n;
            for (s, &xs) in p.term(pd).iter().enumerate() {
                for (t, &yt) in x.term(q).iter().enumerate() {
                    let basis = alg.corner_basis(yt, xs);
                    lk.insert((pd, s, t), bs.len());
                    let len = basis.len();
                    bs.push(Block { p: pd, s, t, offset: off, basis });
                    off += len;
                }
            }
        }
        dims.push(off);
        blocks.push(bs);
        lookup.push(lk);
    }
    let mut diffs = Vec::new();
    for n in lo..hi {
        let k = (n - lo) as usize;
        let mut m = Matrix::zeros(dims[k + 1], dims[k]);
        let sign = if n.rem_euclid(2) == 0 { -Scalar::one() } else { Scalar::one() };
        for b in &blocks[k] {
            let q = b.p + n;
            for (i, &basis_elt) in b.basis.iter().enumerate() {
                let col = b.offset + i;
                let f = [(basis_elt, Scalar::one())];
                // d_X ∘ f
                for u in 0..x.term(q + 1).len() {
                    let dx = x.diff_entry(q, u, b.t);
                    if dx.is_empty() {
                        continue;
                    }
                    let img = alg.mul(dx, &f);
                    if img.is_empty() {
                        continue;
                    }
                    let tb = &blocks[k + 1][lookup[k + 1][&(b.p, b.s, u)]];
                    for (c, v) in img {
                        let pos = tb.basis.binary_search(&c).expect("corner");
                        m[(tb.offset + pos, col)] += &v;
                    }
                }
                // −(−1)^n f ∘ d_P
                for s2 in 0..p.term(b.p - 1).len() {
                    let dp = p.diff_entry(b.p - 1, b.s, s2);
                    if dp.is_empty() {
                        continue;
                    }
                    let img = alg.mul(&f, dp);
                    if img.is_empty() {
                        continue;
                    }
                    let tb = &blocks[k + 1][lookup[k + 1][&(b.p - 1, s2, b.t)]];
                    for (c, v) in img {
                        let pos = tb.basis.binary_search(&c).expect("corner");
                        m[(tb.offset + pos, col)] += &(&sign * &v);
                    }
                }
            }
        }
        diffs.push(m);
    }
    Ok(HomComplex { complex: VectComplex::new(lo, dims, diffs)?, lo, blocks, lookup, src_terms, tgt_terms })
}

/// `Hom_{D(A)}(T, X[r])` as the cohomology of the Hom complex in degree `r`.
#[derive(Clone, Debug)]
pub struct DerivedHom {
    pub degree: i32,
    pub dim: usize,
    pub basis: Vec<GradedMap>,
}

pub fn derived_hom(alg: &Algebra, t: &ProjComplex, x: &ProjComplex, r: i32) -> Result<DerivedHom> {
    let h = hom_complex(alg, t, x)?;
    let coh = h.complex.cohomology(r)?;
    let basis = coh.reps.iter().map(|v| h.decode(r, v)).collect();
    Ok(DerivedHom { degree: r, dim: coh.dim(), basis })
}

/// `dim Hom_{D(A)}(T, X[r])` without extracting representatives.
pub fn derived_hom_dim(alg: &Algebra, t: &ProjComplex, x: &ProjComplex, r: i32) -> Result<usize> {
    Ok(hom_complex(alg, t, x)?.complex.cohomology_dim(r))
}

/// Whether a degree-0 graded map commutes with the differentials.
pub fn is_chain_map(alg: &Algebra, p: &ProjComplex, x: &ProjComplex, f: &GradedMap) -> bool {
    let empty = |r: usize, c: usize| zero_elem_matrix(r, c);
    let lo = p.lo().min(x.lo()) - 1;
    let hi = p.hi().max(x.hi()) + 1;
    let n = f.degree;
    for d in lo..=hi {
        let fd = f.comps.get(&d).cloned().unwrap_or_else(|| empty(x.term(d + n).len(), p.term(d).len()));
        let fd1 = f
            .comps
            .get(&(d + 1))
            .cloned()
            .unwrap_or_else(|| empty(x.term(d + 1 + n).len(), p.term(d + 1).len()));
        let left = compose_elem(alg, &x.diff(d + n), &fd);
        let right = compose_elem(alg, &fd1, &p.diff(d));
        let sign = if n.rem_euclid(2) == 0 { Scalar::one() } else { -Scalar::one() };
        for (lrow, rrow) in left.iter().zip(&right) {
            for (a, b) in lrow.iter().zip(rrow) {
                if add_elem(a, &scale_elem(b, &-&sign)) != Vec::new() {
                    return false;
                }
            }
        }
    }
    true
}

/// Index of `x ⊗ y` among the idempotents of `A ⊗ B`.
pub fn tensor_vertex(b: &Algebra, x: usize, y: usize) -> usize {
    x * b.vertex_count() + y
}

/// Index of `a ⊗ b` in the basis of `A ⊗ B`.
pub fn tensor_basis(b: &Algebra, i: usize, j: usize) -> usize {
    i * b.dim() + j
}

pub(crate) fn tensor_elem(b: &Algebra, u: &[(usize, Scalar)], v: &[(usize, Scalar)]) -> Elem {
    let mut out = Vec::with_capacity(u.len() * v.len());
    for (i, x) in u {
        for (j, y) in v {
            out.push((tensor_basis(b, *i, *j), x * y));
        }
    }
    out.sort_by_key(|e| e.0);
    out
}

/// How the tensor differential signs the `B`-side term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorSign {
    /// `d(x ⊗ y) = dx ⊗ y + (−1)^p x ⊗ dy`.
    Koszul,
    /// The sign `(−1)^p` dropped; only for negative controls.
    Dropped,
}

/// Summand layout of `(X ⊗ Y)^n`: pairs `(p, s, t)` with `s ∈ X^p`, `t ∈ Y^{n−p}`.
pub fn tensor_layout(x: &ProjComplex, y: &ProjComplex, n: i32) -> Vec<(i32, usize, usize)> {
    let mut v = Vec::new();
    for p in x.degrees() {
        for s in 0..x.term(p).len() {
            for t in 0..y.term(n - p).len() {
                v.push((p, s, t));
            }
        }
    }
    v
}

/// `X ⊗_k Y` over `A ⊗ B`, summands ordered by `X`-degree, then `X`-summand,
/// then `Y`-summand.
pub fn tensor_complex(a: &Algebra, b: &Algebra, x: &ProjComplex, y: &ProjComplex) -> Result<ProjComplex> {
    let ab_vertices = a.vertex_count() * b.vertex_count();
    let c = tensor_complex_signed(a, b, x, y, TensorSign::Koszul);
    if c.terms.iter().flatten().any(|&v| v >= ab_vertices) {
        return Err(Error::AlgebraMismatch);
    }
    Ok(c)
}

/// As [`tensor_complex`] with an explicit sign rule; the result is not validated.
pub fn tensor_complex_signed(a: &Algebra, b: &Algebra, x: &ProjComplex, y: &ProjComplex, sign: TensorSign) -> ProjComplex {
    if x.is_zero() || y.is_zero() {
        return ProjComplex::zero();
    }
    let _ = a;
    let lo = x.lo() + y.lo();
    let hi = x.hi() + y.hi();
    let mut terms = Vec::new();
    let mut layouts = Vec::new();
    for n in lo..=hi {
        let l = tensor_layout(x, y, n);
        terms.push(l.iter().map(|&(p, s, t)| tensor_vertex(b, x.term(p)[s], y.term(n - p)[t])).collect());
        layouts.push(l);
    }
    let mut diffs = Vec::new();
    for n in lo..hi {
        let k = (n - lo) as usize;
        let tgt: BTreeMap<(i32, usize, usize), usize> =
            layouts[k + 1].iter().enumerate().map(|(i, &key)| (key, i)).collect();
        let mut d = zero_elem_matrix(layouts[k + 1].len(), layouts[k].len());
        for (col, &(p, s, t)) in layouts[k].iter().enumerate() {
            let q = n - p;
            let xs = x.term(p)[s];
            let yt = y.term(q)[t];
            let ex = [(a.idempotent(xs), Scalar::one())];
            let ey = [(b.idempotent(yt), Scalar::one())];
            for s2 in 0..x.term(p + 1).len() {
                let dx = x.diff_entry(p, s2, s);
                if !dx.is_empty() {
                    d[tgt[&(p + 1, s2, t)]][col] = tensor_elem(b, dx, &ey);
                }
            }
            let sg = match sign {
                TensorSign::Koszul if p.rem_euclid(2) == 1 => -Scalar::one(),
                _ => Scalar::one(),
            };
            for t2 in 0..y.term(q + 1).len() {
                let dy = y.diff_entry(q, t2, t);
                if !dy.is_empty() {
                    let e = tensor_elem(b, &ex, dy);
                    d[tgt[&(p, s, t2)]][col] = scale_elem(&e, &sg);
                }
            }
        }
        diffs.push(d);
    }
    let mut c = ProjComplex { lo, terms, diffs };
    c.trim();
    c
}

/// `f ⊗ g` for graded maps `f: P → X` over `A` and `g: Q → Y` over `B`,
/// as a map `P ⊗ Q → X ⊗ Y` of degree `|f| + |g|`, with the sign
/// `(−1)^{|g|·p}` on the component starting in `P^p ⊗ Q^q`.
#[allow(clippy::too_many_arguments)]
pub fn tensor_graded_map(
    b: &Algebra,
    p_cx: &ProjComplex,
    q_cx: &ProjComplex,
    x_cx: &ProjComplex,
    y_cx: &ProjComplex,
    f: &GradedMap,
    g: &GradedMap,
) -> GradedMap {
    let deg = f.degree + g.degree;
    let mut comps = BTreeMap::new();
    if p_cx.is_zero() || q_cx.is_zero() {
        return GradedMap { degree: deg, comps };
    }
    for n in (p_cx.lo() + q_cx.lo())..=(p_cx.hi() + q_cx.hi()) {
        let src = tensor_layout(p_cx, q_cx, n);
        let tgt_l = tensor_layout(x_cx, y_cx, n + deg);
        let tgt: BTreeMap<(i32, usize, usize), usize> = tgt_l.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        let mut m = zero_elem_matrix(tgt_l.len(), src.len());
        for (col, &(p, s, t)) in src.iter().enumerate() {
            let q = n - p;
            let (Some(fm), Some(gm)) = (f.comps.get(&p), g.comps.get(&q)) else {
                continue;
            };
            let sign = if (g.degree * p).rem_euclid(2) == 1 { -Scalar::one() } else { Scalar::one() };
            for (s2, frow) in fm.iter().enumerate() {
                let fe = &frow[s];
                if fe.is_empty() {
                    continue;
                }
                for (t2, grow) in gm.iter().enumerate() {
                    let ge = &grow[t];
                    if ge.is_empty() {
                        continue;
                    }
                    let key = (p + f.degree, s2, t2);
                    m[tgt[&key]][col] = scale_elem(&tensor_elem(b, fe, ge), &sign);
                }
            }
        }
        comps.insert(n, m);
    }
    GradedMap { degree: deg, comps }
}
