//! Finite-dimensional right modules given by action matrices.
//!
//! Vectors are rows and act on the right: `v · a = v · ρ(a)`, so that
//! `ρ(ab) = ρ(a)·ρ(b)`. A homomorphism `M → N` is a `dim M × dim N` matrix
//! `F` with `ρ_M(a)·F = F·ρ_N(a)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{linear_path_algebra, Algebra};
use crate::error::{Error, Result};
use crate::linalg::{kernel_vectors, Matrix, SpanReducer, Subspace};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    dim: usize,
    action: Vec<Matrix>,
}

impl Module {
    /// Validates `ρ(a)ρ(b) = ρ(ab)` on all basis pairs and `ρ(1) = I`.
    pub fn new(alg: &Algebra, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != alg.dim() {
            return Err(Error::InvalidModule(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                alg.dim()
            )));
        }
        let dim = action.first().map_or(0, Matrix::rows);
        if action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::InvalidModule("action matrices must be square of equal size".into()));
        }
        let m = Module { dim, action };
        let mut unit = Matrix::zeros(dim, dim);
        for &e in alg.idempotents() {
            unit = unit.add(&m.action[e])?;
        }
        if !unit.is_identity() {
            return Err(Error::InvalidModule("unit does not act as the identity".into()));
        }
        for a in 0..alg.dim() {
            for b in 0..alg.dim() {
                let lhs = m.action[a].mul(&m.action[b])?;
                if lhs != m.action_of(alg.mul_basis(a, b)) {
                    return Err(Error::InvalidModule(format!(
                        "action fails on {}·{}",
                        alg.label(a),
                        alg.label(b)
                    )));
                }
            }
        }
        Ok(m)
    }

    pub fn zero(alg: &Algebra) -> Self {
        Module { dim: 0, action: vec![Matrix::zeros(0, 0); alg.dim()] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn action(&self, b: usize) -> &Matrix {
        &self.action[b]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// `ρ(u)` for an algebra element `u`.
    pub fn action_of(&self, u: &[(usize, Scalar)]) -> Matrix {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (b, c) in u {
            out = out.add(&self.action[*b].scale(c)).expect("same shape");
        }
        out
    }

    /// `v · basis_b`.
    pub fn act(&self, v: &[Scalar], b: usize) -> Vec<Scalar> {
        row_times(v, &self.action[b])
    }

    /// `dim M·e_x` for each vertex.
    pub fn dimension_vector(&self, alg: &Algebra) -> Vec<usize> {
        alg.idempotents().iter().map(|&e| self.action[e].rank()).collect()
    }

    /// Basis of `M·e_x`.
    pub fn vertex_space(&self, alg: &Algebra, x: usize) -> Subspace {
        Subspace::spanned_by(self.dim, &self.action[alg.idempotent(x)].to_rows())
    }

    /// Whether every basis vector lies in a single `M·e_x`.
    pub fn vertex_of_basis(&self, alg: &Algebra) -> Option<Vec<usize>> {
        let mut out = vec![usize::MAX; self.dim];
        for (x, &e) in alg.idempotents().iter().enumerate() {
            let m = &self.action[e];
            for i in 0..self.dim {
                for j in 0..self.dim {
                    let v = &m[(i, j)];
                    if i == j && v.is_one() {
                        out[i] = x;
                    } else if !v.is_zero() {
                        return None;
                    }
                }
            }
        }
        Some(out)
    }

    pub fn direct_sum(&self, other: &Module) -> Module {
        let dim = self.dim + other.dim;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| block_diag(a, b))
            .collect();
        Module { dim, action }
    }

    /// `DM` as a right module over the opposite algebra: `ρ(a)ᵀ`.
    pub fn dual(&self) -> Module {
        Module { dim: self.dim, action: self.action.iter().map(Matrix::transpose).collect() }
    }

    /// Smallest submodule containing `vectors`.
    pub fn submodule_generated(&self, vectors: &[Vec<Scalar>]) -> Subspace {
        let mut span = Subspace::zero(self.dim);
        let mut queue: Vec<Vec<Scalar>> = Vec::new();
        for v in vectors {
            if span.insert(v) {
                queue.push(v.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for m in &self.action {
                let w = row_times(&v, m);
                if span.insert(&w) {
                    queue.push(w);
                }
            }
        }
        span
    }

    pub fn is_submodule(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|v| self.action.iter().all(|m| s.contains(&row_times(v, m))))
    }

    /// The submodule on the given basis (which must span a submodule),
    /// expressed in that basis.
    pub fn restrict(&self, basis: &[Vec<Scalar>]) -> Result<Module> {
        let red = SpanReducer::new(self.dim, basis)?;
        let k = basis.len();
        let mut action = Vec::with_capacity(self.action.len());
        for m in &self.action {
            let mut a = Matrix::zeros(k, k);
            for (i, v) in basis.iter().enumerate() {
                let w = row_times(v, m);
                let c = red.coordinates(&w).ok_or_else(|| Error::InvalidModule("not a submodule".into()))?;
                a.row_mut(i).clone_from_slice(&c);
            }
            action.push(a);
        }
        Ok(Module { dim: k, action })
    }

    /// `M / S` on a complement of `S` chosen vertex by vertex, with the
    /// projection `M → M/S`.
    pub fn quotient(&self, alg: &Algebra, sub: &Subspace) -> Result<(Module, Matrix)> {
        let mut comp: Vec<Vec<Scalar>> = Vec::new();
        let mut span = sub.clone();
        for x in 0..alg.vertex_count() {
            for v in self.action[alg.idempotent(x)].to_rows() {
                if span.insert(&v) {
                    comp.push(v);
                }
            }
        }
        let mut family = comp.clone();
        family.extend(sub.basis().iter().cloned());
        let red = SpanReducer::new(self.dim, &family)?;
        let k = comp.len();
        let coords = |w: &[Scalar]| -> Vec<Scalar> {
            let mut c = red.coordinates(w).expect("complement and subspace span the module");
            c.truncate(k);
            c
        };
        let mut proj = Matrix::zeros(self.dim, k);
        for i in 0..self.dim {
            let mut e = vec![Scalar::zero(); self.dim];
            e[i] = Scalar::one();
            proj.row_mut(i).clone_from_slice(&coords(&e));
        }
        let mut action = Vec::with_capacity(self.action.len());
        for m in &self.action {
            let mut a = Matrix::zeros(k, k);
            for (i, v) in comp.iter().enumerate() {
                a.row_mut(i).clone_from_slice(&coords(&row_times(v, m)));
            }
            action.push(a);
        }
        Ok((Module { dim: k, action }, proj))
    }

    /// `M·rad A`.
    pub fn radical_submodule(&self, alg: &Algebra) -> Subspace {
        let mut span = Subspace::zero(self.dim);
        for b in 0..alg.dim() {
            if alg.is_idempotent_basis(b) {
                continue;
            }
            for v in self.action[b].to_rows() {
                span.insert(&v);
            }
        }
        span
    }

    /// Vectors `v ∈ M·e_x` whose classes form a basis of `M / (M·rad + extra)`,
    /// as `(x, v)` pairs ordered by vertex.
    pub fn top_generators(&self, alg: &Algebra, extra: &Subspace) -> Vec<(usize, Vec<Scalar>)> {
        let mut span = self.radical_submodule(alg);
        for v in extra.basis() {
            span.insert(v);
        }
        let mut out = Vec::new();
        for x in 0..alg.vertex_count() {
            for v in self.action[alg.idempotent(x)].to_rows() {
                if span.insert(&v) {
                    out.push((x, v));
                }
            }
        }
        out
    }

    /// Dimension vector of the top `M / M·rad`.
    pub fn top_dimension_vector(&self, alg: &Algebra) -> Vec<usize> {
        let mut d = vec![0; alg.vertex_count()];
        for (x, _) in self.top_generators(alg, &Subspace::zero(self.dim)) {
            d[x] += 1;
        }
        d
    }
}

pub(crate) fn row_times(v: &[Scalar], m: &Matrix) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); m.cols()];
    for (i, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in m.row(i).iter().enumerate() {
            if !y.is_zero() {
                out[j] += &(x * y);
            }
        }
    }
    out
}

fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.rows() + b.rows();
    let m = a.cols() + b.cols();
    let mut out = Matrix::zeros(n, m);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            out[(i, j)] = a[(i, j)].clone();
        }
    }
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            out[(a.rows() + i, a.cols() + j)] = b[(i, j)].clone();
        }
    }
    out
}

/// A module homomorphism with its endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    pub source: Module,
    pub target: Module,
    pub matrix: Matrix,
}

impl ModuleMap {
    pub fn new(source: Module, target: Module, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != source.dim() || matrix.cols() != target.dim() {
            return Err(Error::DimensionMismatch {
                op: "ModuleMap",
                left: (source.dim(), target.dim()),
                right: (matrix.rows(), matrix.cols()),
            });
        }
        if !is_homomorphism(&source, &target, &matrix) {
            return Err(Error::InvalidModule("matrix does not intertwine the actions".into()));
        }
        Ok(ModuleMap { source, target, matrix })
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &ModuleMap) -> Result<ModuleMap> {
        if self.target != next.source {
            return Err(Error::AlgebraMismatch);
        }
        Ok(ModuleMap {
            source: self.source.clone(),
            target: next.target.clone(),
            matrix: self.matrix.mul(&next.matrix)?,
        })
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

pub fn is_homomorphism(src: &Module, tgt: &Module, f: &Matrix) -> bool {
    src.action.iter().zip(&tgt.action).all(|(a, b)| a.mul(f).ok() == f.mul(b).ok())
}

/// `e_x·A` with the right regular action on the basis of `e_x·A`.
pub fn projective_module(alg: &Algebra, x: usize) -> Module {
    let basis = alg.left_corner_basis(x);
    regular_piece(alg, &basis)
}

fn regular_piece(alg: &Algebra, basis: &[usize]) -> Module {
    let k = basis.len();
    let pos = |c: usize| basis.binary_search(&c).expect("right ideal is closed");
    let action = (0..alg.dim())
        .map(|b| {
            let mut m = Matrix::zeros(k, k);
            for (i, &p) in basis.iter().enumerate() {
                for (c, v) in alg.mul_basis(p, b) {
                    m[(i, pos(*c))] = v.clone();
                }
            }
            m
        })
        .collect();
    Module { dim: k, action }
}

/// `A_A`, the regular module.
pub fn regular_module(alg: &Algebra) -> Module {
    let basis: Vec<usize> = (0..alg.dim()).collect();
    regular_piece(alg, &basis)
}

/// Basis of `A·e_x` ordered by the vertex `y` of `e_y·A·e_x`.
pub(crate) fn injective_basis(alg: &Algebra, x: usize) -> Vec<usize> {
    let mut basis = alg.right_corner_basis(x);
    basis.sort_by_key(|&b| alg.corner(b).0);
    basis
}

/// `D(A·e_x)` with `(φ·a)(u) = φ(a·u)`, on the dual of [`injective_basis`].
pub fn injective_module(alg: &Algebra, x: usize) -> Module {
    let basis = injective_basis(alg, x);
    let k = basis.len();
    let action = (0..alg.dim())
        .map(|a| {
            let mut m = Matrix::zeros(k, k);
            for (j, &u) in basis.iter().enumerate() {
                for (c, v) in alg.mul_basis(a, u) {
                    if let Some(i) = basis.iter().position(|b| b == c) {
                        m[(i, j)] = v.clone();
                    }
                }
            }
            m
        })
        .collect();
    Module { dim: k, action }
}

/// `DA` as a right module, the sum of the `D(A·e_x)`.
pub fn dual_regular_module(alg: &Algebra) -> Module {
    (0..alg.vertex_count()).fold(Module::zero(alg), |acc, x| acc.direct_sum(&injective_module(alg, x)))
}

pub fn simple_module(alg: &Algebra, x: usize) -> Module {
    let e = alg.idempotent(x);
    let action = (0..alg.dim())
        .map(|b| {
            let mut m = Matrix::zeros(1, 1);
            if b == e {
                m[(0, 0)] = Scalar::one();
            }
            m
        })
        .collect();
    Module { dim: 1, action }
}

/// `⊕_t e_{x_t}·A` for the given vertex list.
pub fn free_module(alg: &Algebra, vertices: &[usize]) -> Module {
    vertices
        .iter()
        .fold(Module::zero(alg), |acc, &x| acc.direct_sum(&projective_module(alg, x)))
}

/// The families `P_i`, `S_i`, `I_i` over `kA_n`, indexed from 0.
pub struct StandardModules {
    pub algebra: Algebra,
    pub projectives: Vec<Module>,
    pub simples: Vec<Module>,
    pub injectives: Vec<Module>,
}

pub fn standard_modules(n: usize) -> Result<StandardModules> {
    let algebra = linear_path_algebra(n)?;
    let projectives = (0..n).map(|x| projective_module(&algebra, x)).collect();
    let simples = (0..n).map(|x| simple_module(&algebra, x)).collect();
    let injectives = (0..n).map(|x| injective_module(&algebra, x)).collect();
    Ok(StandardModules { algebra, projectives, simples, injectives })
}

/// Basis of `Hom_A(M, N)`, ordered by the pivots of the intertwining system.
pub fn hom_space(alg: &Algebra, m: &Module, n: &Module) -> Result<Vec<Matrix>> {
    if m.action.len() != alg.dim() || n.action.len() != alg.dim() {
        return Err(Error::AlgebraMismatch);
    }
    let (dm, dn) = (m.dim, n.dim);
    if dm == 0 || dn == 0 {
        return Ok(Vec::new());
    }
    // unknown entries F[i][j]; restricted to equal vertices when both bases are adapted
    let unknowns: Vec<(usize, usize)> = match (m.vertex_of_basis(alg), n.vertex_of_basis(alg)) {
        (Some(vm), Some(vn)) => {
            let mut u = Vec::new();
            for i in 0..dm {
                for j in 0..dn {
                    if vm[i] == vn[j] {
                        u.push((i, j));
                    }
                }
            }
            u
        }
        _ => (0..dm).flat_map(|i| (0..dn).map(move |j| (i, j))).collect(),
    };
    if unknowns.is_empty() {
        return Ok(Vec::new());
    }
    let col: alloc::collections::BTreeMap<(usize, usize), usize> =
        unknowns.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for g in alg.generators() {
        let (a, b) = (&m.action[g], &n.action[g]);
        // (ρ_M(g)·F − F·ρ_N(g))[i][l] = Σ_j a[i][j] F[j][l] − Σ_j F[i][j] b[j][l]
        for i in 0..dm {
            for l in 0..dn {
                let mut row = vec![Scalar::zero(); unknowns.len()];
                let mut any = false;
                for j in 0..dm {
                    if let Some(&k) = col.get(&(j, l)) {
                        if !a[(i, j)].is_zero() {
                            row[k] += &a[(i, j)];
                            any = true;
                        }
                    }
                }
                for j in 0..dn {
                    if let Some(&k) = col.get(&(i, j)) {
                        if !b[(j, l)].is_zero() {
                            row[k] -= &b[(j, l)];
                            any = true;
                        }
                    }
                }
                if any && row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let sys = if rows.is_empty() {
        Matrix::zeros(1, unknowns.len())
    } else {
        Matrix::from_rows(rows)?
    };
    Ok(kernel_vectors(&sys)
        .into_iter()
        .map(|v| {
            let mut f = Matrix::zeros(dm, dn);
            for (k, x) in v.into_iter().enumerate() {
                f[unknowns[k]] = x;
            }
            f
        })
        .collect())
}

/// Images of the generators of a sum of projectives: `Hom(P_x, M) ≅ M·e_x`.
pub fn map_from_free(alg: &Algebra, vertices: &[usize], images: &[Vec<Scalar>], m: &Module) -> Matrix {
    let dims: Vec<usize> = vertices.iter().map(|&x| alg.left_corner_basis(x).len()).collect();
    let total: usize = dims.iter().sum();
    let mut f = Matrix::zeros(total, m.dim());
    let mut row = 0;
    for (&x, v) in vertices.iter().zip(images) {
        for b in alg.left_corner_basis(x) {
            f.row_mut(row).clone_from_slice(&m.act(v, b));
            row += 1;
        }
    }
    f
}

/// Whether `End(M)` is local, i.e. `M` is indecomposable.
pub fn is_indecomposable(alg: &Algebra, m: &Module) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    let end = hom_space(alg, m, m)?;
    Ok(is_local_family(&end))
}

/// Whether the span of the given square matrices (a unital algebra under
/// multiplication) is local: its trace-zero part is nilpotent.
pub(crate) fn is_local_family(end: &[Matrix]) -> bool {
    let h = end.len();
    if h <= 1 {
        return h == 1;
    }
    let d = end[0].rows();
    let flat: Vec<Vec<Scalar>> = end.iter().map(|f| f.data().to_vec()).collect();
    let red = match SpanReducer::new(d * d, &flat) {
        Ok(r) => r,
        Err(_) => return false,
    };
    // trace of left multiplication on the algebra
    let mut traces = Vec::with_capacity(h);
    for f in end {
        let mut t = Scalar::zero();
        for (k, g) in end.iter().enumerate() {
            let p = f.mul(g).expect("square");
            let c = red.coordinates(p.data()).expect("closed under composition");
            t += &c[k];
        }
        traces.push(t);
    }
    let tr = Matrix::from_rows(vec![traces]).expect("one row");
    let nil: Vec<Matrix> = kernel_vectors(&tr)
        .into_iter()
        .map(|c| {
            let mut acc = Matrix::zeros(d, d);
            for (k, x) in c.iter().enumerate() {
                if !x.is_zero() {
                    acc = acc.add(&end[k].scale(x)).expect("same shape");
                }
            }
            acc
        })
        .collect();
    // a subspace of matrices closed under products is nilpotent iff each element is
    nil.iter().all(|f| {
        let mut p = f.clone();
        for _ in 0..d {
            p = p.mul(f).expect("square");
        }
        p.is_zero()
    }) && {
        let span = Subspace::spanned_by(d * d, &nil.iter().map(|f| f.data().to_vec()).collect::<Vec<_>>());
        nil.iter().all(|f| nil.iter().all(|g| span.contains(f.mul(g).expect("square").data())))
    }
}

/// Whether `M ≅ N`, by testing a generic combination of a Hom basis.
pub fn is_isomorphic(alg: &Algebra, m: &Module, n: &Module) -> Result<bool> {
    if m.dim() != n.dim() || m.dimension_vector(alg) != n.dimension_vector(alg) {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let homs = hom_space(alg, m, n)?;
    if homs.is_empty() {
        return Ok(false);
    }
    // rank is lower semicontinuous: try a few deterministic combinations
    for seed in 1..=4i64 {
        let mut f = Matrix::zeros(m.dim(), n.dim());
        let mut c = seed;
        for h in &homs {
            f = f.add(&h.scale(&Scalar::from_i64(c)))?;
            c = (c * 7 + 3) % 101 + 1;
        }
        if f.rank() == m.dim() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Kernel of `f` as a submodule of its source.
pub fn kernel_submodule(f: &Matrix) -> Subspace {
    Subspace::spanned_by(f.rows(), &kernel_vectors(&f.transpose()))
}

/// Image of `f` as a submodule of its target.
pub fn image_submodule(f: &Matrix) -> Subspace {
    Subspace::spanned_by(f.cols(), &f.to_rows())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_dimensions() {
        let a3 = linear_path_algebra(3).unwrap();
        assert_eq!(projective_module(&a3, 2).dim(), 1);
        assert_eq!(projective_module(&a3, 0).dim(), 3);
        let l = crate::algebra::truncated_line_algebra(4, 3).unwrap();
        assert_eq!(projective_module(&l, 0).dim(), 3);
    }

    #[test]
    fn standard_families() {
        for n in 1..=6 {
            let s = standard_modules(n).unwrap();
            let a = &s.algebra;
            for i in 0..n {
                assert_eq!(s.projectives[i].dim(), n - i);
                assert_eq!(s.injectives[i].dim(), i + 1);
                assert_eq!(s.simples[i].dim(), 1);
                for m in [&s.projectives[i], &s.injectives[i], &s.simples[i]] {
                    assert!(Module::new(a, m.actions().to_vec()).is_ok());
                }
            }
            assert_eq!(s.simples[0], s.injectives[0]);
            assert_eq!(s.simples[n - 1], s.projectives[n - 1]);
            assert_eq!(s.injectives[n - 1], s.projectives[0]);
        }
    }

    #[test]
    fn hom_from_projective_is_vertex_space() {
        let s = standard_modules(4).unwrap();
        let a = &s.algebra;
        for x in 0..4 {
            for m in s.projectives.iter().chain(&s.injectives).chain(&s.simples) {
                let h = hom_space(a, &s.projectives[x], m).unwrap();
                assert_eq!(h.len(), m.dimension_vector(a)[x]);
            }
        }
    }

    #[test]
    fn simple_homs() {
        let s = standard_modules(2).unwrap();
        assert!(hom_space(&s.algebra, &s.simples[0], &s.simples[1]).unwrap().is_empty());
        let end = hom_space(&s.algebra, &s.projectives[0], &s.projectives[0]).unwrap();
        assert_eq!(end.len(), 1);
        assert!(end[0].is_identity());
    }

    #[test]
    fn indecomposability() {
        let s = standard_modules(3).unwrap();
        let a = &s.algebra;
        assert!(is_indecomposable(a, &s.projectives[0]).unwrap());
        assert!(is_indecomposable(a, &s.injectives[2]).unwrap());
        let sum = s.simples[0].direct_sum(&s.simples[1]);
        assert!(!is_indecomposable(a, &sum).unwrap());
        assert!(is_isomorphic(a, &s.injectives[2], &s.projectives[0]).unwrap());
        assert!(!is_isomorphic(a, &s.simples[0], &s.simples[1]).unwrap());
    }

    #[test]
    fn quotient_and_top() {
        let s = standard_modules(3).unwrap();
        let a = &s.algebra;
        let p = &s.projectives[0];
        let rad = p.radical_submodule(a);
        assert_eq!(rad.dim(), 2);
        let (top, proj) = p.quotient(a, &rad).unwrap();
        assert!(is_isomorphic(a, &top, &s.simples[0]).unwrap());
        assert!(is_homomorphism(p, &top, &proj));
        assert_eq!(p.top_dimension_vector(a), vec![1, 0, 0]);
        assert_eq!(s.injectives[2].top_dimension_vector(a), vec![1, 0, 0]);
    }
}
