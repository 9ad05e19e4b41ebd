//! Projective resolutions and replacements, the Nakayama functor and its
//! inverse on complexes, cohomology modules and the inverse AR translation.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Elem};
use crate::complex::{elem_matrix_to_module_map, zero_elem_matrix, ElemMatrix, ProjComplex};
use crate::error::{Error, Result};
use crate::linalg::{kernel_vectors, Matrix, SpanReducer, Subspace};
use crate::module::{free_module, injective_basis, map_from_free, row_times, simple_module, Module};
use crate::scalar::Scalar;

/// A bounded complex of modules; `maps[k]` goes from degree `lo + k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleComplex {
    pub lo: i32,
    pub terms: Vec<Module>,
    pub maps: Vec<Matrix>,
}

impl ModuleComplex {
    pub fn stalk(m: Module, degree: i32) -> Self {
        ModuleComplex { lo: degree, terms: vec![m], maps: Vec::new() }
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.terms.len() as i32 - 1
    }

    fn term(&self, n: i32) -> Option<&Module> {
        if n < self.lo || n > self.hi() {
            None
        } else {
            Some(&self.terms[(n - self.lo) as usize])
        }
    }

    fn dim(&self, n: i32) -> usize {
        self.term(n).map_or(0, Module::dim)
    }

    fn map(&self, n: i32) -> Matrix {
        if n < self.lo || n >= self.hi() {
            Matrix::zeros(self.dim(n), self.dim(n + 1))
        } else {
            self.maps[(n - self.lo) as usize].clone()
        }
    }

    /// The underlying module complex of a complex of projectives.
    pub fn from_projective(alg: &Algebra, x: &ProjComplex) -> Self {
        if x.is_zero() {
            return ModuleComplex { lo: 0, terms: Vec::new(), maps: Vec::new() };
        }
        ModuleComplex {
            lo: x.lo(),
            terms: x.degrees().map(|n| x.term_module(alg, n)).collect(),
            maps: (x.lo()..x.hi()).map(|n| x.diff_matrix(alg, n)).collect(),
        }
    }

    /// `H^n` as a module.
    pub fn cohomology_module(&self, alg: &Algebra, n: i32) -> Result<Module> {
        let Some(m) = self.term(n) else {
            return Ok(Module::zero(alg));
        };
        let z = kernel_vectors(&self.map(n).transpose());
        if z.is_empty() {
            return Ok(Module::zero(alg));
        }
        let zmod = m.restrict(&z)?;
        let red = SpanReducer::new(m.dim(), &z)?;
        let b_rows: Vec<Vec<Scalar>> = self
            .map(n - 1)
            .to_rows()
            .iter()
            .map(|v| red.coordinates(v).expect("boundaries are cycles"))
            .collect();
        let b = Subspace::spanned_by(z.len(), &b_rows);
        Ok(zmod.quotient(alg, &b)?.0)
    }
}

/// Finite global dimension certificate: an acyclic Gabriel quiver suffices,
/// otherwise all simples are resolved within `max_len` steps.
pub fn has_finite_global_dimension(alg: &Algebra, max_len: usize) -> Result<bool> {
    if alg.gabriel_quiver().is_acyclic() {
        return Ok(true);
    }
    for x in 0..alg.vertex_count() {
        match projective_resolution(alg, &simple_module(alg, x), max_len) {
            Ok(_) => {}
            Err(Error::ResolutionTooLong { .. }) => return Ok(false),
            Err(e) => return Err(e),
        }
    }
    Ok(true)
}

/// Maximum projective dimension of the simples, if at most `max_len`.
pub fn global_dimension(alg: &Algebra, max_len: usize) -> Result<usize> {
    let mut g = 0;
    for x in 0..alg.vertex_count() {
        let r = projective_resolution(alg, &simple_module(alg, x), max_len)?;
        g = g.max((-r.lo()) as usize);
    }
    Ok(g)
}

/// Minimal projective resolution `... → P^{-1} → P^0` of `M`.
pub fn projective_resolution(alg: &Algebra, m: &Module, max_len: usize) -> Result<ProjComplex> {
    Ok(projective_replacement(alg, &ModuleComplex::stalk(m.clone(), 0), max_len)?.0)
}

/// A bounded complex of projectives `P` with a quasi-isomorphism `P → Y`,
/// built from the top degree down by covering the cycles of the mapping cone.
/// Returns `P` and the module matrices of the comparison map, indexed by degree
/// from `P.lo()`.
pub fn projective_replacement(alg: &Algebra, y: &ModuleComplex, max_len: usize) -> Result<(ProjComplex, Vec<Matrix>)> {
    if y.terms.iter().all(Module::is_zero) {
        return Ok((ProjComplex::zero(), Vec::new()));
    }
    let hi = y.hi();
    // built degrees, highest first
    let mut terms: Vec<Vec<usize>> = Vec::new();
    let mut diffs: Vec<ElemMatrix> = Vec::new(); // diffs[k] from degree hi-k to hi-k+1
    let mut pis: Vec<Matrix> = Vec::new();
    let empty: Vec<usize> = Vec::new();
    let mut n = hi;
    loop {
        let k = (hi - n) as usize;
        let p1: &[usize] = if k >= 1 { &terms[k - 1] } else { &empty };
        let p2: &[usize] = if k >= 2 { &terms[k - 2] } else { &empty };
        let p1_mod = free_module(alg, p1);
        let dp1 = p1_mod.dim();
        let yn = y.term(n).cloned().unwrap_or_else(|| Module::zero(alg));
        let cone = p1_mod.direct_sum(&yn);
        // d_cone(p, v) = (−d_P p, π p + δ v)
        let dp2 = free_module(alg, p2).dim();
        let dy1 = y.dim(n + 1);
        let mut dc = Matrix::zeros(cone.dim(), dp2 + dy1);
        if k >= 2 {
            let dmat = elem_matrix_to_module_map(alg, p1, p2, &diffs[k - 2]);
            for i in 0..dp1 {
                for j in 0..dp2 {
                    dc[(i, j)] = -&dmat[(i, j)];
                }
            }
        }
        if k >= 1 {
            let pi = &pis[k - 1];
            for i in 0..dp1 {
                for j in 0..dy1 {
                    dc[(i, dp2 + j)] = pi[(i, j)].clone();
                }
            }
        }
        let delta = y.map(n);
        for i in 0..yn.dim() {
            for j in 0..dy1 {
                dc[(dp1 + i, dp2 + j)] = delta[(i, j)].clone();
            }
        }
        let kernel = Subspace::spanned_by(cone.dim(), &kernel_vectors(&dc.transpose()));
        if kernel.dim() == 0 && n < y.lo {
            break;
        }
        if n < y.lo && (y.lo - n) as usize > max_len {
            return Err(Error::ResolutionTooLong { max_len });
        }
        // boundaries coming from Y^{n−1}
        let mut w = Subspace::zero(cone.dim());
        for v in y.map(n - 1).to_rows() {
            let mut full = vec![Scalar::zero(); dp1];
            full.extend(v);
            w.insert(&full);
        }
        let gens = sub_top_generators(alg, &cone, &kernel, &w);
        let vertices: Vec<usize> = gens.iter().map(|(x, _)| *x).collect();
        let mut d = zero_elem_matrix(p1.len(), vertices.len());
        let bases: Vec<Vec<usize>> = p1.iter().map(|&x| alg.left_corner_basis(x)).collect();
        let mut y_images = Vec::with_capacity(gens.len());
        for (i, (_, v)) in gens.iter().enumerate() {
            let mut off = 0;
            for (t, basis) in bases.iter().enumerate() {
                let e: Elem = basis
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| !v[off + j].is_zero())
                    .map(|(j, &b)| (b, -&v[off + j]))
                    .collect();
                d[t][i] = e;
                off += basis.len();
            }
            y_images.push(v[dp1..].to_vec());
        }
        pis.push(map_from_free(alg, &vertices, &y_images, &yn));
        terms.push(vertices);
        if k >= 1 {
            diffs.push(d);
        }
        n -= 1;
    }
    let lo = n + 1;
    terms.reverse();
    diffs.reverse();
    pis.reverse();
    let c = ProjComplex::from_parts(lo, terms, diffs)?;
    // trimming can only drop empty outer terms; realign the comparison maps
    while pis.first().is_some_and(|m| m.rows() == 0) && pis.len() > 1 {
        pis.remove(0);
    }
    while pis.last().is_some_and(|m| m.rows() == 0) && pis.len() > 1 {
        pis.pop();
    }
    if c.is_zero() {
        pis.clear();
    }
    c.validate(alg)?;
    Ok((c, pis))
}

/// Generators of the submodule `K` of `M` modulo `K·rad + W`, vertex by vertex.
fn sub_top_generators(alg: &Algebra, m: &Module, k: &Subspace, w: &Subspace) -> Vec<(usize, Vec<Scalar>)> {
    let mut span = w.clone();
    for v in k.basis() {
        for b in 0..alg.dim() {
            if alg.is_idempotent_basis(b) {
                continue;
            }
            span.insert(&row_times(v, m.action(b)));
        }
    }
    let mut out = Vec::new();
    for x in 0..alg.vertex_count() {
        let e = m.action(alg.idempotent(x));
        for v in k.basis() {
            let ve = row_times(v, e);
            if span.insert(&ve) {
                out.push((x, ve));
            }
        }
    }
    out
}

/// Module matrix of `I_x → I_y` induced by `a ∈ e_y·A·e_x`: `φ ↦ aφ`, `(aφ)(u) = φ(u·a)`.
fn injective_map(alg: &Algebra, x: usize, y: usize, a: &[(usize, Scalar)]) -> Matrix {
    let bx = injective_basis(alg, x);
    let by = injective_basis(alg, y);
    let mut m = Matrix::zeros(bx.len(), by.len());
    for (j, &u) in by.iter().enumerate() {
        for (c, v) in alg.mul(&[(u, Scalar::one())], a) {
            let i = bx.iter().position(|&b| b == c).expect("u·a ∈ A·e_x");
            m[(i, j)] = v;
        }
    }
    m
}

/// `ν X` termwise (`e_x A ↦ D(A e_x)`), as a complex of injective modules.
pub fn nakayama_modules(alg: &Algebra, x: &ProjComplex) -> ModuleComplex {
    if x.is_zero() {
        return ModuleComplex { lo: 0, terms: Vec::new(), maps: Vec::new() };
    }
    let terms: Vec<Module> = x
        .degrees()
        .map(|n| {
            x.term(n)
                .iter()
                .fold(Module::zero(alg), |acc, &v| acc.direct_sum(&crate::module::injective_module(alg, v)))
        })
        .collect();
    let maps = (x.lo()..x.hi())
        .map(|n| {
            let src = x.term(n);
            let tgt = x.term(n + 1);
            let rows: usize = src.iter().map(|&v| injective_basis(alg, v).len()).sum();
            let cols: usize = tgt.iter().map(|&v| injective_basis(alg, v).len()).sum();
            let mut m = Matrix::zeros(rows, cols);
            let mut ro = 0;
            for (s, &xs) in src.iter().enumerate() {
                let mut co = 0;
                for (t, &yt) in tgt.iter().enumerate() {
                    let e = x.diff_entry(n, t, s);
                    if !e.is_empty() {
                        let blk = injective_map(alg, xs, yt, e);
                        for i in 0..blk.rows() {
                            for j in 0..blk.cols() {
                                m[(ro + i, co + j)] = blk[(i, j)].clone();
                            }
                        }
                    }
                    co += injective_basis(alg, yt).len();
                }
                ro += injective_basis(alg, xs).len();
            }
            m
        })
        .collect();
    ModuleComplex { lo: x.lo(), terms, maps }
}

/// The Serre functor `ν = − ⊗^L DA` on a complex of projectives, returned as
/// a complex of projectives.
pub fn nakayama(alg: &Algebra, x: &ProjComplex, max_len: usize) -> Result<ProjComplex> {
    if !has_finite_global_dimension(alg, max_len)? {
        return Err(Error::InfiniteGlobalDimension);
    }
    Ok(projective_replacement(alg, &nakayama_modules(alg, x), max_len)?.0)
}

/// `ν⁻¹ Y = (DY)^*`: dualize to the opposite algebra, replace by projectives
/// there and apply `Hom(−, A)`.
pub fn nakayama_inverse_modules(alg: &Algebra, y: &ModuleComplex, max_len: usize) -> Result<ProjComplex> {
    let op = alg.opposite();
    if y.terms.is_empty() {
        return Ok(ProjComplex::zero());
    }
    // (DY)^m = D(Y^{−m}); differential D(Y^{−m}) → D(Y^{−m−1}) is the transpose
    let lo = -y.hi();
    let terms: Vec<Module> = (lo..=-y.lo).map(|m| y.term(-m).expect("in range").dual()).collect();
    let maps: Vec<Matrix> = (lo..-y.lo).map(|m| y.map(-m - 1).transpose()).collect();
    let dy = ModuleComplex { lo, terms, maps };
    let (q, _) = projective_replacement(&op, &dy, max_len)?;
    Ok(dual_projective(&q))
}

/// `Hom_{A^op}(−, A^op)` on a complex of projectives over the opposite algebra.
fn dual_projective(q: &ProjComplex) -> ProjComplex {
    if q.is_zero() {
        return ProjComplex::zero();
    }
    let lo = -q.hi();
    let terms: Vec<Vec<usize>> = (lo..=-q.lo()).map(|n| q.term(-n).to_vec()).collect();
    let diffs: Vec<ElemMatrix> = (lo..-q.lo())
        .map(|n| {
            // from degree n (dual of Q^{−n}) to n+1 (dual of Q^{−n−1})
            let d = q.diff(-n - 1);
            let rows = q.term(-n - 1).len();
            let cols = q.term(-n).len();
            let mut out = zero_elem_matrix(rows, cols);
            for (t, row) in d.iter().enumerate() {
                for (s, e) in row.iter().enumerate() {
                    out[s][t] = e.clone();
                }
            }
            out
        })
        .collect();
    ProjComplex::from_parts(lo, terms, diffs).expect("shapes are transposed consistently")
}

pub fn nakayama_inverse(alg: &Algebra, x: &ProjComplex, max_len: usize) -> Result<ProjComplex> {
    if !has_finite_global_dimension(alg, max_len)? {
        return Err(Error::InfiniteGlobalDimension);
    }
    let c = nakayama_inverse_modules(alg, &ModuleComplex::from_projective(alg, x), max_len)?;
    c.validate(alg)?;
    Ok(c)
}

/// Whether the global dimension is at most one.
pub fn is_hereditary(alg: &Algebra) -> Result<bool> {
    match global_dimension(alg, 2) {
        Ok(g) => Ok(g <= 1),
        Err(Error::ResolutionTooLong { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// `τ⁻M = H⁰(ν⁻M[1]) = H¹(ν⁻M)` over a hereditary algebra.
pub fn tau_inverse(alg: &Algebra, m: &Module) -> Result<Module> {
    if !is_hereditary(alg)? {
        return Err(Error::NotHereditary);
    }
    tau_inverse_unchecked(alg, m)
}

pub(crate) fn tau_inverse_unchecked(alg: &Algebra, m: &Module) -> Result<Module> {
    if m.is_zero() {
        return Ok(Module::zero(alg));
    }
    let nm = nakayama_inverse_modules(alg, &ModuleComplex::stalk(m.clone(), 0), 2)?;
    ModuleComplex::from_projective(alg, &nm).cohomology_module(alg, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{linear_path_algebra, truncated_line_algebra};
    use crate::module::{injective_module, is_isomorphic, projective_module, standard_modules};

    #[test]
    fn resolutions_of_simples() {
        let s = standard_modules(2).unwrap();
        let a = &s.algebra;
        let r = projective_resolution(a, &s.simples[0], 5).unwrap();
        assert_eq!(r.lo(), -1);
        assert_eq!(r.term(0), &[0]);
        assert_eq!(r.term(-1), &[1]);
        let p = projective_resolution(a, &s.projectives[0], 5).unwrap();
        assert_eq!(p, ProjComplex::stalk(vec![0], 0));
        let l = truncated_line_algebra(4, 2).unwrap();
        let r = projective_resolution(&l, &simple_module(&l, 0), 5).unwrap();
        assert!(r.lo() < -1);
        assert_eq!(global_dimension(&l, 5).unwrap(), 3);
    }

    #[test]
    fn injective_resolutions_have_right_cohomology() {
        for n in 1..=4 {
            let a = linear_path_algebra(n).unwrap();
            for x in 0..n {
                let i = injective_module(&a, x);
                let r = projective_resolution(&a, &i, 5).unwrap();
                let h = ModuleComplex::from_projective(&a, &r).cohomology_module(&a, 0).unwrap();
                assert!(is_isomorphic(&a, &h, &i).unwrap());
                for (d, dim) in r.cohomology_dims(&a) {
                    if d != 0 {
                        assert_eq!(dim, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn nakayama_on_projectives() {
        let n = 3;
        let a = linear_path_algebra(n).unwrap();
        for x in 0..n {
            let nu = nakayama(&a, &ProjComplex::stalk(vec![x], 0), 5).unwrap();
            let h = ModuleComplex::from_projective(&a, &nu).cohomology_module(&a, 0).unwrap();
            assert!(is_isomorphic(&a, &h, &injective_module(&a, x)).unwrap());
            let back = nakayama_inverse(&a, &nu, 5).unwrap();
            let h = ModuleComplex::from_projective(&a, &back).cohomology_module(&a, 0).unwrap();
            assert!(is_isomorphic(&a, &h, &projective_module(&a, x)).unwrap());
        }
        let a2 = linear_path_algebra(2).unwrap();
        let nu = nakayama(&a2, &ProjComplex::stalk(vec![1], 0), 5).unwrap();
        let h = ModuleComplex::from_projective(&a2, &nu).cohomology_module(&a2, 0).unwrap();
        assert_eq!(h.dimension_vector(&a2), vec![1, 1]);
    }

    #[test]
    fn tau_inverse_on_a2_and_a3() {
        let s = standard_modules(2).unwrap();
        let a = &s.algebra;
        let t = tau_inverse(a, &s.projectives[1]).unwrap();
        assert!(is_isomorphic(a, &t, &s.simples[0]).unwrap());
        for x in 0..2 {
            assert!(tau_inverse(a, &s.injectives[x]).unwrap().is_zero());
        }
        let s3 = standard_modules(3).unwrap();
        for x in 0..3 {
            assert!(tau_inverse(&s3.algebra, &s3.injectives[x]).unwrap().is_zero());
        }
        let l = truncated_line_algebra(3, 2).unwrap();
        assert_eq!(tau_inverse(&l, &simple_module(&l, 0)), Err(Error::NotHereditary));
    }
}
