//! Basic finite-dimensional algebras given by structure constants on a
//! directed basis, and constructors for the families used throughout the
//! crate (path algebras, truncated lines, tensor products, triangular and
//! generalized matrix rings, replicated algebras).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::quiver::{Arrow, Quiver};
use crate::scalar::Scalar;

/// Sparse coefficient vector, sorted by basis index, zero entries omitted.
pub type Elem = Vec<(usize, Scalar)>;

/// Adds `c · v` into the accumulator.
pub(crate) fn axpy(acc: &mut BTreeMap<usize, Scalar>, c: &Scalar, v: &[(usize, Scalar)]) {
    for (i, x) in v {
        let p = c * x;
        let e = acc.entry(*i).or_insert_with(Scalar::zero);
        *e += &p;
    }
}

pub(crate) fn collect(acc: BTreeMap<usize, Scalar>) -> Elem {
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

pub fn elem_to_dense(e: &[(usize, Scalar)], len: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); len];
    for (i, x) in e {
        v[*i] = x.clone();
    }
    v
}

pub fn dense_to_elem(v: &[Scalar]) -> Elem {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

/// A basic algebra over the rationals with a directed basis.
///
/// Each complete primitive idempotent is itself a basis element and every
/// basis element `b` lies in a single corner `e_x·A·e_y`, recorded as
/// `corner(b) = (x, y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    labels: Vec<String>,
    mult: Vec<Elem>,
    idempotents: Vec<usize>,
    corners: Vec<(usize, usize)>,
}

impl Algebra {
    /// Validates and builds an algebra; `mult[a * dim + b]` is `basis_a · basis_b`.
    pub fn new(labels: Vec<String>, mult: Vec<Elem>, idempotents: Vec<usize>) -> Result<Self> {
        let dim = labels.len();
        if mult.len() != dim * dim {
            return Err(Error::InvalidAlgebra(format!(
                "expected {} products, found {}",
                dim * dim,
                mult.len()
            )));
        }
        if idempotents.is_empty() && dim > 0 {
            return Err(Error::InvalidAlgebra("no idempotents".into()));
        }
        for e in &mult {
            if e.iter().any(|(i, v)| *i >= dim || v.is_zero()) || e.windows(2).any(|w| w[0].0 >= w[1].0) {
                return Err(Error::InvalidAlgebra("malformed product vector".into()));
            }
        }
        let n = idempotents.len();
        let one = |i: usize| vec![(i, Scalar::one())];
        for (x, &ex) in idempotents.iter().enumerate() {
            if ex >= dim {
                return Err(Error::InvalidAlgebra(format!("idempotent index {} out of range", ex)));
            }
            for (y, &ey) in idempotents.iter().enumerate() {
                let p = &mult[ex * dim + ey];
                let ok = if x == y { *p == one(ex) } else { p.is_empty() };
                if !ok {
                    return Err(Error::InvalidAlgebra(format!(
                        "idempotents {} and {} are not orthogonal idempotents",
                        labels[ex], labels[ey]
                    )));
                }
            }
        }
        let mut corners = Vec::with_capacity(dim);
        for b in 0..dim {
            let mut left = None;
            let mut right = None;
            for (x, &ex) in idempotents.iter().enumerate() {
                let l = &mult[ex * dim + b];
                if *l == one(b) {
                    if left.replace(x).is_some() {
                        return Err(Error::InvalidAlgebra(format!("{} fixed by two idempotents", labels[b])));
                    }
                } else if !l.is_empty() {
                    return Err(Error::InvalidAlgebra(format!("basis element {} is not directed", labels[b])));
                }
                let r = &mult[b * dim + ex];
                if *r == one(b) {
                    if right.replace(x).is_some() {
                        return Err(Error::InvalidAlgebra(format!("{} fixed by two idempotents", labels[b])));
                    }
                } else if !r.is_empty() {
                    return Err(Error::InvalidAlgebra(format!("basis element {} is not directed", labels[b])));
                }
            }
            match (left, right) {
                (Some(x), Some(y)) => corners.push((x, y)),
                _ => {
                    return Err(Error::InvalidAlgebra(format!(
                        "idempotents do not sum to a unit on {}",
                        labels[b]
                    )))
                }
            }
        }
        let alg = Algebra { labels, mult, idempotents, corners };
        alg.check_products_directed()?;
        alg.check_associative()?;
        let _ = n;
        Ok(alg)
    }

    fn check_products_directed(&self) -> Result<()> {
        let dim = self.dim();
        for a in 0..dim {
            for b in 0..dim {
                let p = &self.mult[a * dim + b];
                if p.is_empty() {
                    continue;
                }
                let (x, y) = self.corners[a];
                let (y2, z) = self.corners[b];
                if y != y2 || p.iter().any(|(c, _)| self.corners[*c] != (x, z)) {
                    return Err(Error::InvalidAlgebra(format!(
                        "product {}·{} leaves its corner",
                        self.labels[a], self.labels[b]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Associativity on all basis triples whose corners compose.
    fn check_associative(&self) -> Result<()> {
        let by_corner = self.basis_by_corner();
        let n = self.vertex_count();
        for x in 0..n {
            for y in 0..n {
                for a in &by_corner[x][y] {
                    for z in 0..n {
                        for b in &by_corner[y][z] {
                            let ab = self.mul_basis(*a, *b);
                            for w in 0..n {
                                for c in &by_corner[z][w] {
                                    let left = self.mul_elem_basis(ab, *c);
                                    let bc = self.mul_basis(*b, *c);
                                    let right = self.mul_basis_elem(*a, bc);
                                    if left != right {
                                        return Err(Error::NotAssociative { a: *a, b: *b, c: *c });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The one-dimensional algebra `k`.
    pub fn field() -> Self {
        Algebra::new(vec!["1".into()], vec![vec![(0, Scalar::one())]], vec![0]).expect("k is an algebra")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.idempotents.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, b: usize) -> &str {
        &self.labels[b]
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn idempotent(&self, x: usize) -> usize {
        self.idempotents[x]
    }

    /// `(x, y)` with `basis_b ∈ e_x·A·e_y`.
    pub fn corner(&self, b: usize) -> (usize, usize) {
        self.corners[b]
    }

    pub fn corners(&self) -> &[(usize, usize)] {
        &self.corners
    }

    pub fn is_idempotent_basis(&self, b: usize) -> bool {
        self.idempotents.contains(&b)
    }

    /// Basis indices grouped as `[x][y]` by corner, in increasing order.
    pub fn basis_by_corner(&self) -> Vec<Vec<Vec<usize>>> {
        let n = self.vertex_count();
        let mut out = vec![vec![Vec::new(); n]; n];
        for (b, &(x, y)) in self.corners.iter().enumerate() {
            out[x][y].push(b);
        }
        out
    }

    /// Basis of `e_x·A` (the indecomposable projective at `x`).
    pub fn left_corner_basis(&self, x: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.corners[b].0 == x).collect()
    }

    /// Basis of `A·e_x`.
    pub fn right_corner_basis(&self, x: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.corners[b].1 == x).collect()
    }

    /// Basis of `e_x·A·e_y`.
    pub fn corner_basis(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.corners[b] == (x, y)).collect()
    }

    pub fn mul_basis(&self, a: usize, b: usize) -> &Elem {
        &self.mult[a * self.dim() + b]
    }

    fn mul_elem_basis(&self, u: &[(usize, Scalar)], b: usize) -> Elem {
        let mut acc = BTreeMap::new();
        for (a, c) in u {
            axpy(&mut acc, c, self.mul_basis(*a, b));
        }
        collect(acc)
    }

    fn mul_basis_elem(&self, a: usize, v: &[(usize, Scalar)]) -> Elem {
        let mut acc = BTreeMap::new();
        for (b, c) in v {
            axpy(&mut acc, c, self.mul_basis(a, *b));
        }
        collect(acc)
    }

    pub fn mul(&self, u: &[(usize, Scalar)], v: &[(usize, Scalar)]) -> Elem {
        let mut acc = BTreeMap::new();
        for (a, c) in u {
            for (b, d) in v {
                let p = self.mul_basis(*a, *b);
                if !p.is_empty() {
                    axpy(&mut acc, &(c * d), p);
                }
            }
        }
        collect(acc)
    }

    /// Dense unit vector `Σ e_x`.
    pub fn unit(&self) -> Vec<Scalar> {
        let mut u = vec![Scalar::zero(); self.dim()];
        for &e in &self.idempotents {
            u[e] = Scalar::one();
        }
        u
    }

    /// Nonzero structure constants `(a, b, c, coeff)`: `basis_a · basis_b` has `coeff` at `c`.
    pub fn structure_triples(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let dim = self.dim();
        let mut out = Vec::new();
        for a in 0..dim {
            for b in 0..dim {
                for (c, v) in &self.mult[a * dim + b] {
                    out.push((a, b, *c, v.clone()));
                }
            }
        }
        out
    }

    pub fn from_triples(
        labels: Vec<String>,
        idempotents: Vec<usize>,
        triples: &[(usize, usize, usize, Scalar)],
    ) -> Result<Self> {
        let dim = labels.len();
        let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); dim * dim];
        for (a, b, c, v) in triples {
            if *a >= dim || *b >= dim || *c >= dim {
                return Err(Error::InvalidAlgebra(format!("triple ({}, {}, {}) out of range", a, b, c)));
            }
            let e = acc[a * dim + b].entry(*c).or_insert_with(Scalar::zero);
            *e += v;
        }
        Algebra::new(labels, acc.into_iter().map(collect).collect(), idempotents)
    }

    /// Same structure constants and idempotents, ignoring labels.
    pub fn same_structure(&self, other: &Algebra) -> bool {
        self.mult == other.mult && self.idempotents == other.idempotents
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim() {
            return Err(Error::InvalidAlgebra("label count mismatch".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    /// The opposite algebra (same basis, reversed products).
    pub fn opposite(&self) -> Algebra {
        let dim = self.dim();
        let mut mult = vec![Vec::new(); dim * dim];
        for a in 0..dim {
            for b in 0..dim {
                mult[a * dim + b] = self.mult[b * dim + a].clone();
            }
        }
        let corners = self.corners.iter().map(|&(x, y)| (y, x)).collect();
        Algebra { labels: self.labels.clone(), mult, idempotents: self.idempotents.clone(), corners }
    }

    /// Integer Cartan matrix `C[x][y] = dim e_x·A·e_y`.
    pub fn cartan_matrix(&self) -> Matrix {
        let n = self.vertex_count();
        let mut c = Matrix::zeros(n, n);
        for &(x, y) in &self.corners {
            c[(x, y)] += &Scalar::one();
        }
        c
    }

    /// Non-idempotent basis elements, certified to span a nilpotent ideal.
    pub fn radical(&self) -> Result<Vec<usize>> {
        let rad: Vec<usize> = (0..self.dim()).filter(|b| !self.is_idempotent_basis(*b)).collect();
        let dims = self.radical_power_dims()?;
        debug_assert_eq!(dims.first().copied().unwrap_or(0), rad.len());
        Ok(rad)
    }

    /// `[dim rad, dim rad², ...]` until the power vanishes.
    pub fn radical_power_dims(&self) -> Result<Vec<usize>> {
        let by_corner = self.basis_by_corner();
        let n = self.vertex_count();
        let rad: Vec<usize> = (0..self.dim()).filter(|b| !self.is_idempotent_basis(*b)).collect();
        for &a in &rad {
            for &b in &rad {
                if self.mul_basis(a, b).iter().any(|(c, _)| self.is_idempotent_basis(*c)) {
                    return Err(Error::NotNilpotent);
                }
            }
        }
        // current power, per corner, as subspaces in corner-local coordinates
        let local = |x: usize, y: usize, e: &Elem| -> Vec<Scalar> {
            let idx = &by_corner[x][y];
            let mut v = vec![Scalar::zero(); idx.len()];
            for (b, c) in e {
                let p = idx.binary_search(b).expect("product stays in its corner");
                v[p] = c.clone();
            }
            v
        };
        let mut current: Vec<Vec<Subspace>> = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        let idx = &by_corner[x][y];
                        let vecs: Vec<Vec<Scalar>> = idx
                            .iter()
                            .filter(|b| !self.is_idempotent_basis(**b))
                            .map(|b| local(x, y, &vec![(*b, Scalar::one())]))
                            .collect();
                        Subspace::spanned_by(idx.len(), &vecs)
                    })
                    .collect()
            })
            .collect();
        let mut dims = Vec::new();
        loop {
            let total: usize = current.iter().flatten().map(Subspace::dim).sum();
            if total == 0 {
                return Ok(dims);
            }
            if dims.len() > self.dim() {
                return Err(Error::NotNilpotent);
            }
            dims.push(total);
            let mut next: Vec<Vec<Subspace>> =
                (0..n).map(|x| (0..n).map(|y| Subspace::zero(by_corner[x][y].len())).collect()).collect();
            for x in 0..n {
                for y in 0..n {
                    for v in current[x][y].basis() {
                        let u: Elem = v
                            .iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .map(|(i, c)| (by_corner[x][y][i], c.clone()))
                            .collect();
                        for z in 0..n {
                            for &r in &by_corner[y][z] {
                                if self.is_idempotent_basis(r) {
                                    continue;
                                }
                                let p = self.mul_elem_basis(&u, r);
                                if !p.is_empty() {
                                    next[x][z].insert(&local(x, z, &p));
                                }
                            }
                        }
                    }
                }
            }
            current = next;
        }
    }

    /// Radical basis elements whose classes form a basis of `rad/rad²`,
    /// grouped by corner `[x][y]`.
    pub fn arrow_generators(&self) -> Vec<Vec<Vec<usize>>> {
        let by_corner = self.basis_by_corner();
        let n = self.vertex_count();
        let mut out = vec![vec![Vec::new(); n]; n];
        for x in 0..n {
            for z in 0..n {
                let idx = &by_corner[x][z];
                let mut rad2 = Subspace::zero(idx.len());
                for y in 0..n {
                    for &a in &by_corner[x][y] {
                        if self.is_idempotent_basis(a) {
                            continue;
                        }
                        for &b in &by_corner[y][z] {
                            if self.is_idempotent_basis(b) {
                                continue;
                            }
                            let p = self.mul_basis(a, b);
                            if !p.is_empty() {
                                let mut v = vec![Scalar::zero(); idx.len()];
                                for (c, s) in p {
                                    v[idx.binary_search(c).unwrap()] = s.clone();
                                }
                                rad2.insert(&v);
                            }
                        }
                    }
                }
                for (i, &b) in idx.iter().enumerate() {
                    if self.is_idempotent_basis(b) {
                        continue;
                    }
                    let mut v = vec![Scalar::zero(); idx.len()];
                    v[i] = Scalar::one();
                    if rad2.insert(&v) {
                        out[x][z].push(b);
                    }
                }
            }
        }
        out
    }

    /// Idempotents followed by arrow generators: these generate the algebra.
    pub fn generators(&self) -> Vec<usize> {
        let mut g = self.idempotents.clone();
        g.extend(self.arrow_generators().into_iter().flatten().flatten());
        g
    }

    /// Gabriel quiver: `dim e_x·(rad/rad²)·e_y` arrows `x → y`.
    pub fn gabriel_quiver(&self) -> Quiver {
        let gens = self.arrow_generators();
        let mut arrows = Vec::new();
        for (x, row) in gens.iter().enumerate() {
            for (y, list) in row.iter().enumerate() {
                for (k, _) in list.iter().enumerate() {
                    arrows.push(Arrow { source: x, target: y, label: format!("{}->{}#{}", x + 1, y + 1, k + 1) });
                }
            }
        }
        Quiver::new(self.vertex_count(), arrows).expect("labels are unique")
    }
}

/// Path algebra of an acyclic quiver: basis = paths, product = concatenation.
///
/// Trivial paths come first (in vertex order), then paths ordered by length
/// and lexicographically by arrow indices.
pub fn path_algebra(q: &Quiver) -> Result<Algebra> {
    if !q.is_acyclic() {
        return Err(Error::CyclicQuiver);
    }
    let n = q.vertex_count();
    // (start vertex, arrow sequence)
    let mut paths: Vec<(usize, usize, Vec<usize>)> = (0..n).map(|v| (v, v, Vec::new())).collect();
    let mut frontier: Vec<(usize, usize, Vec<usize>)> = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, a)| (a.source, a.target, vec![i]))
        .collect();
    while !frontier.is_empty() {
        frontier.sort_by(|a, b| a.2.cmp(&b.2));
        let mut next = Vec::new();
        for (s, t, seq) in &frontier {
            for (i, a) in q.arrows().iter().enumerate() {
                if a.source == *t {
                    let mut s2 = seq.clone();
                    s2.push(i);
                    next.push((*s, a.target, s2));
                }
            }
        }
        paths.append(&mut frontier);
        frontier = next;
    }
    let index: BTreeMap<(usize, Vec<usize>), usize> =
        paths.iter().enumerate().map(|(i, (s, _, seq))| ((*s, seq.clone()), i)).collect();
    let dim = paths.len();
    let mut mult = vec![Vec::new(); dim * dim];
    for (a, (s1, t1, seq1)) in paths.iter().enumerate() {
        for (b, (s2, _, seq2)) in paths.iter().enumerate() {
            if t1 != s2 {
                continue;
            }
            let mut cat = seq1.clone();
            cat.extend_from_slice(seq2);
            mult[a * dim + b] = vec![(index[&(*s1, cat)], Scalar::one())];
        }
    }
    let labels = paths
        .iter()
        .map(|(s, _, seq)| {
            if seq.is_empty() {
                format!("e{}", s + 1)
            } else {
                let parts: Vec<&str> = seq.iter().map(|&i| q.arrows()[i].label.as_str()).collect();
                parts.join("*")
            }
        })
        .collect();
    Algebra::new(labels, mult, (0..n).collect())
}

/// `A(n, ell)`: the linear `A_n` path algebra modulo all paths of length `ell`.
///
/// Basis `ε(i,j)` for `i ≤ j ≤ min(n, i + ell - 1)`, ordered by path length and
/// then by start vertex.
pub fn truncated_line_algebra(n: usize, ell: usize) -> Result<Algebra> {
    line_with_prefix(n, ell, "ε")
}

/// The path algebra of linear `A_n` with matrix-unit labels `e(i,j)`.
pub fn linear_path_algebra(n: usize) -> Result<Algebra> {
    line_with_prefix(n, n.max(1), "e")
}

fn line_with_prefix(n: usize, ell: usize, prefix: &str) -> Result<Algebra> {
    if n == 0 || ell == 0 {
        return Err(Error::InvalidSize(format!("A({}, {}) needs n >= 1 and ell >= 1", n, ell)));
    }
    let m = ell - 1;
    let mut pairs = Vec::new();
    for len in 0..=m.min(n - 1) {
        for i in 1..=n - len {
            pairs.push((i, i + len));
        }
    }
    let index: BTreeMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let dim = pairs.len();
    let mut mult = vec![Vec::new(); dim * dim];
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for (b, &(p, q)) in pairs.iter().enumerate() {
            if p == j && q <= i + m {
                mult[a * dim + b] = vec![(index[&(i, q)], Scalar::one())];
            }
        }
    }
    let labels = pairs.iter().map(|(i, j)| format!("{}({},{})", prefix, i, j)).collect();
    Algebra::new(labels, mult, (0..n).collect())
}

/// `A ⊗ B` with basis pairs `(a, b)` at index `a * dim B + b` and idempotents
/// `e_x ⊗ e_y` ordered with the `A` factor major.
pub fn tensor_algebra(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    let (da, db) = (a.dim(), b.dim());
    let dim = da * db;
    let mut mult = vec![Vec::new(); dim * dim];
    for a1 in 0..da {
        for a2 in 0..da {
            let pa = a.mul_basis(a1, a2);
            if pa.is_empty() {
                continue;
            }
            for b1 in 0..db {
                for b2 in 0..db {
                    let pb = b.mul_basis(b1, b2);
                    if pb.is_empty() {
                        continue;
                    }
                    let mut out = Vec::with_capacity(pa.len() * pb.len());
                    for (i, x) in pa {
                        for (j, y) in pb {
                            out.push((i * db + j, x * y));
                        }
                    }
                    mult[(a1 * db + b1) * dim + (a2 * db + b2)] = out;
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(dim);
    for la in a.labels() {
        for lb in b.labels() {
            labels.push(format!("{}⊗{}", la, lb));
        }
    }
    let mut idem = Vec::with_capacity(a.vertex_count() * b.vertex_count());
    for &x in a.idempotents() {
        for &y in b.idempotents() {
            idem.push(x * db + y);
        }
    }
    Algebra::new(labels, mult, idem)
}

/// `T_n(Λ) = Λ ⊗ kA_n`, upper triangular `n×n` matrices over `Λ`.
pub fn triangular_matrix_algebra(l: &Algebra, n: usize) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::InvalidSize("T_n needs n >= 1".into()));
    }
    tensor_algebra(l, &linear_path_algebra(n)?)
}

/// A ring presented as an `n×n` grid of cells `M_ij` with composition maps
/// `M_ij × M_jl → M_il`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedMatrixRing {
    labels: Vec<Vec<Vec<String>>>,
    idempotents: Vec<Vec<usize>>,
    products: BTreeMap<(usize, usize, usize), Vec<Elem>>,
}

impl GeneralizedMatrixRing {
    /// `labels[i][j]` names the basis of cell `(i, j)`; `idempotents[i]` lists
    /// the cell-local indices of the primitive idempotents of the diagonal cell `i`.
    pub fn new(labels: Vec<Vec<Vec<String>>>, idempotents: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if labels.iter().any(|row| row.len() != n) || idempotents.len() != n {
            return Err(Error::InvalidAlgebra("grid is not square".into()));
        }
        Ok(GeneralizedMatrixRing { labels, idempotents, products: BTreeMap::new() })
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn cell_dim(&self, i: usize, j: usize) -> usize {
        self.labels[i][j].len()
    }

    pub fn cell_labels(&self, i: usize, j: usize) -> &[String] {
        &self.labels[i][j]
    }

    pub fn cell_dims(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        (0..n).map(|i| (0..n).map(|j| self.cell_dim(i, j)).collect()).collect()
    }

    pub fn diagonal_idempotents(&self) -> &[Vec<usize>] {
        &self.idempotents
    }

    /// Composition table for `M_ij × M_jl → M_il`, indexed `a * dim M_jl + b`.
    pub fn set_products(&mut self, i: usize, j: usize, l: usize, table: Vec<Elem>) -> Result<()> {
        let expected = self.cell_dim(i, j) * self.cell_dim(j, l);
        if table.len() != expected {
            return Err(Error::InvalidAlgebra(format!(
                "cell product ({},{},{}) needs {} entries, got {}",
                i,
                j,
                l,
                expected,
                table.len()
            )));
        }
        let target = self.cell_dim(i, l);
        if table.iter().flatten().any(|(c, _)| *c >= target) {
            return Err(Error::InvalidAlgebra(format!("cell product ({},{},{}) out of range", i, j, l)));
        }
        self.products.insert((i, j, l), table);
        Ok(())
    }

    pub fn product(&self, i: usize, j: usize, l: usize, a: usize, b: usize) -> &[(usize, Scalar)] {
        match self.products.get(&(i, j, l)) {
            Some(t) => &t[a * self.cell_dim(j, l) + b],
            None => &[],
        }
    }

    /// Equal cell dimensions, idempotents and composition maps (labels ignored).
    pub fn same_structure(&self, other: &GeneralizedMatrixRing) -> bool {
        if self.cell_dims() != other.cell_dims() || self.idempotents != other.idempotents {
            return false;
        }
        let n = self.size();
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    for a in 0..self.cell_dim(i, j) {
                        for b in 0..self.cell_dim(j, l) {
                            if self.product(i, j, l, a, b) != other.product(i, j, l, a, b) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// First composition `(i, j, l, a, b)` where the two grids differ.
    pub fn first_difference(&self, other: &GeneralizedMatrixRing) -> Option<(usize, usize, usize, usize, usize)> {
        let n = self.size();
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    for a in 0..self.cell_dim(i, j) {
                        for b in 0..self.cell_dim(j, l) {
                            if self.product(i, j, l, a, b) != other.product(i, j, l, a, b) {
                                return Some((i, j, l, a, b));
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// Offset of cell `(i, j)` in the flattened basis (row-major over cells).
    pub fn offset(&self, i: usize, j: usize) -> usize {
        let n = self.size();
        (0..i * n + j).map(|k| self.cell_dim(k / n, k % n)).sum()
    }

    /// Flattens the grid to an [`Algebra`], validating associativity.
    pub fn to_algebra(&self) -> Result<Algebra> {
        let n = self.size();
        let mut offsets = vec![vec![0; n]; n];
        let mut labels = Vec::new();
        for i in 0..n {
            for j in 0..n {
                offsets[i][j] = labels.len();
                labels.extend(self.labels[i][j].iter().cloned());
            }
        }
        let dim = labels.len();
        let mut mult = vec![Vec::new(); dim * dim];
        for (&(i, j, l), table) in &self.products {
            let djl = self.cell_dim(j, l);
            for (k, e) in table.iter().enumerate() {
                let (a, b) = (k / djl, k % djl);
                mult[(offsets[i][j] + a) * dim + offsets[j][l] + b] =
                    e.iter().map(|(c, v)| (offsets[i][l] + c, v.clone())).collect();
            }
        }
        let idem = (0..n).flat_map(|i| self.idempotents[i].iter().map(move |&e| (i, e))).map(|(i, e)| offsets[i][i] + e).collect();
        Algebra::new(labels, mult, idem)
    }
}

impl GeneralizedMatrixRing {
    /// The same ring with the cell order reversed: cell `(i, j)` moves to
    /// `(n−1−i, n−1−j)`.
    pub fn reversed(&self) -> GeneralizedMatrixRing {
        let n = self.size();
        let r = |i: usize| n - 1 - i;
        let labels = (0..n).map(|i| (0..n).map(|j| self.labels[r(i)][r(j)].clone()).collect()).collect();
        let idempotents = (0..n).map(|i| self.idempotents[r(i)].clone()).collect();
        let products = self.products.iter().map(|(&(i, j, l), t)| ((r(i), r(j), r(l)), t.clone())).collect();
        GeneralizedMatrixRing { labels, idempotents, products }
    }
}

/// Checks that `basis_i ↦ basis_{map[i]}` is an isomorphism `A → B`: a
/// bijection sending idempotents to idempotents and preserving all products.
/// Returns a description of the first failure.
pub fn basis_map_failure(a: &Algebra, b: &Algebra, map: &[usize]) -> Option<String> {
    let dim = a.dim();
    if map.len() != dim || b.dim() != dim {
        return Some(format!("dimension {} vs {}", dim, b.dim()));
    }
    let mut seen = vec![false; dim];
    for &m in map {
        if m >= dim || core::mem::replace(&mut seen[m], true) {
            return Some("map is not a bijection".into());
        }
    }
    let mut ia: Vec<usize> = a.idempotents().iter().map(|&e| map[e]).collect();
    let mut ib = b.idempotents().to_vec();
    ia.sort_unstable();
    ib.sort_unstable();
    if ia != ib {
        return Some("idempotents are not matched".into());
    }
    for x in 0..dim {
        for y in 0..dim {
            let mut image: Elem = a.mul_basis(x, y).iter().map(|(c, v)| (map[*c], v.clone())).collect();
            image.sort_by_key(|e| e.0);
            if image != *b.mul_basis(map[x], map[y]) {
                return Some(format!("product {}·{} is not preserved", a.label(x), a.label(y)));
            }
        }
    }
    None
}

/// `(λ·φ)(x) = φ(x·λ)` on the dual basis of `L`.
pub fn dual_left_action(l: &Algebra, lambda: usize, phi: usize) -> Elem {
    (0..l.dim())
        .filter_map(|x| {
            l.mul_basis(x, lambda).iter().find(|(c, _)| *c == phi).map(|(_, v)| (x, v.clone()))
        })
        .collect()
}

/// `(φ·λ)(x) = φ(λ·x)` on the dual basis of `L`.
pub fn dual_right_action(l: &Algebra, phi: usize, lambda: usize) -> Elem {
    (0..l.dim())
        .filter_map(|x| {
            l.mul_basis(lambda, x).iter().find(|(c, _)| *c == phi).map(|(_, v)| (x, v.clone()))
        })
        .collect()
}

fn algebra_table(l: &Algebra) -> Vec<Elem> {
    let d = l.dim();
    (0..d * d).map(|k| l.mul_basis(k / d, k % d).clone()).collect()
}

/// The replicated algebra: `L` on the diagonal, `DL` on the first
/// superdiagonal, zero elsewhere.
pub fn replicated_algebra(l: &Algebra, n: usize) -> Result<Algebra> {
    replicated_grid(l, n)?.to_algebra()
}

pub fn replicated_grid(l: &Algebra, n: usize) -> Result<GeneralizedMatrixRing> {
    if n == 0 {
        return Err(Error::InvalidSize("replicated algebra needs n >= 1".into()));
    }
    let d = l.dim();
    let mut labels = vec![vec![Vec::new(); n]; n];
    for s in 0..n {
        labels[s][s] = l.labels().iter().map(|x| format!("{}^({})", x, s + 1)).collect();
        if s + 1 < n {
            labels[s][s + 1] = l.labels().iter().map(|x| format!("D{}^({})", x, s + 1)).collect();
        }
    }
    let mut g = GeneralizedMatrixRing::new(labels, vec![l.idempotents().to_vec(); n])?;
    let left: Vec<Elem> = (0..d * d).map(|k| dual_left_action(l, k / d, k % d)).collect();
    let right: Vec<Elem> = (0..d * d).map(|k| dual_right_action(l, k / d, k % d)).collect();
    for s in 0..n {
        g.set_products(s, s, s, algebra_table(l))?;
        if s + 1 < n {
            g.set_products(s, s, s + 1, left.clone())?;
            g.set_products(s, s + 1, s + 1, right.clone())?;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_algebra_dimensions() {
        let a2 = path_algebra(&Quiver::linear(2)).unwrap();
        assert_eq!(a2.dim(), 3);
        assert_eq!(a2.labels(), &["e1", "e2", "a1"]);
        for n in 1..=6 {
            assert_eq!(path_algebra(&Quiver::linear(n)).unwrap().dim(), n * (n + 1) / 2);
        }
        let d4 = Quiver::from_edges(4, &[(0, 1), (2, 1), (3, 1)]).unwrap();
        assert_eq!(path_algebra(&d4).unwrap().dim(), 7);
        let cyc = Quiver::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(path_algebra(&cyc), Err(Error::CyclicQuiver));
    }

    #[test]
    fn truncated_lines() {
        assert_eq!(truncated_line_algebra(4, 3).unwrap().dim(), 9);
        for n in 1..=6 {
            assert_eq!(truncated_line_algebra(n, 2).unwrap().dim(), 2 * n - 1);
            let full = truncated_line_algebra(n, n + 1).unwrap();
            assert!(full.same_structure(&path_algebra(&Quiver::linear(n)).unwrap()));
        }
        assert!(truncated_line_algebra(0, 3).is_err());
        assert!(truncated_line_algebra(3, 0).is_err());
    }

    #[test]
    fn tensor_products() {
        let a2 = linear_path_algebra(2).unwrap();
        let a3 = linear_path_algebra(3).unwrap();
        let k = Algebra::field();
        assert!(tensor_algebra(&a2, &k).unwrap().same_structure(&a2));
        let sq = tensor_algebra(&a2, &a2).unwrap();
        assert_eq!(sq.dim(), 9);
        let q = sq.gabriel_quiver();
        assert_eq!(q.arrows().len(), 4);
        // (1,1)->(1,2), (1,1)->(2,1), (1,2)->(2,2), (2,1)->(2,2)
        for (x, y) in [(0, 1), (0, 2), (1, 3), (2, 3)] {
            assert_eq!(q.arrow_count(x, y), 1);
        }
        assert_eq!(tensor_algebra(&a2, &a3).unwrap().dim(), 18);
    }

    #[test]
    fn triangular_matrices() {
        let a2 = linear_path_algebra(2).unwrap();
        assert!(triangular_matrix_algebra(&a2, 1).unwrap().same_structure(&a2));
        assert!(triangular_matrix_algebra(&Algebra::field(), 2).unwrap().same_structure(&a2));
        assert_eq!(triangular_matrix_algebra(&a2, 3).unwrap().dim(), 18);
    }

    #[test]
    fn radicals() {
        let k3 = tensor_algebra(&Algebra::field(), &Algebra::field()).unwrap();
        assert!(k3.radical().unwrap().is_empty());
        let a2 = linear_path_algebra(2).unwrap();
        assert_eq!(a2.radical().unwrap(), vec![2]);
        assert_eq!(a2.radical_power_dims().unwrap(), vec![1]);
        let l43 = truncated_line_algebra(4, 3).unwrap();
        assert_eq!(l43.radical().unwrap().len(), 5);
        assert_eq!(l43.radical_power_dims().unwrap(), vec![5, 2]);
    }

    #[test]
    fn gabriel_quivers() {
        for n in 1..=5 {
            let q = linear_path_algebra(n).unwrap().gabriel_quiver();
            assert_eq!(q.multiplicities(), Quiver::linear(n).multiplicities());
        }
        let q = truncated_line_algebra(6, 3).unwrap().gabriel_quiver();
        assert_eq!(q.multiplicities(), Quiver::linear(6).multiplicities());
    }

    #[test]
    fn diagonal_grid_is_product_of_fields() {
        let n = 3;
        let mut labels = vec![vec![Vec::new(); n]; n];
        for (i, row) in labels.iter_mut().enumerate() {
            row[i] = vec![format!("1_{}", i)];
        }
        let mut g = GeneralizedMatrixRing::new(labels, vec![vec![0]; n]).unwrap();
        for i in 0..n {
            g.set_products(i, i, i, vec![vec![(0, Scalar::one())]]).unwrap();
        }
        let a = g.to_algebra().unwrap();
        assert_eq!(a.dim(), 3);
        assert!(a.radical().unwrap().is_empty());
        assert_eq!(a.cartan_matrix(), Matrix::identity(3));
    }

    #[test]
    fn associativity_violation_is_reported() {
        // basis e1, e2, a (1->2), b (2->1 would make it cyclic, so use a bad product instead)
        let a2 = linear_path_algebra(2).unwrap();
        let mut triples = a2.structure_triples();
        // break associativity of e1·α by scaling the product e1·α
        for t in triples.iter_mut() {
            if (t.0, t.1) == (0, 2) {
                t.3 = Scalar::from_i64(2);
            }
        }
        assert!(Algebra::from_triples(a2.labels().to_vec(), vec![0, 1], &triples).is_err());
    }

    #[test]
    fn replicated_algebras() {
        let a2 = linear_path_algebra(2).unwrap();
        assert!(replicated_algebra(&a2, 1).unwrap().same_structure(&a2));
        let k = Algebra::field();
        let r = replicated_algebra(&k, 2).unwrap();
        assert_eq!(r.dim(), 3);
        assert_eq!(r.cartan_matrix(), a2.cartan_matrix());
        assert_eq!(replicated_algebra(&a2, 2).unwrap().dim(), 9);
    }

    #[test]
    fn opposite_swaps_corners() {
        let a2 = linear_path_algebra(2).unwrap();
        let op = a2.opposite();
        assert_eq!(op.corner(2), (1, 0));
        assert_eq!(op.cartan_matrix(), a2.cartan_matrix().transpose());
    }
}
