//! The tensor construction: from families `T_i` over `A` and `U_i` over `B`,
//! the complex `⊕_i T_i ⊗_k U_i` over `A ⊗ B` and the comparison of its
//! endomorphism ring with the matrix ring of tensor products of Hom spaces.
//!
//! Each `T_i` and `U_i` is given as a list of indecomposable pieces. The
//! summands of the built complex are the products of pieces, ordered by `i`,
//! then `T`-piece, then `U`-piece.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{tensor_algebra, Algebra, Elem, GeneralizedMatrixRing};
use crate::complex::{
    hom_complex, is_chain_map, tensor_complex, tensor_complex_signed, tensor_graded_map, ProjComplex, TensorSign,
};
use crate::error::{Error, Result};
use crate::tilting::{
    canonicalize_diagonal, certify_tilting, end_ring_from_grid, grid_products, projective_summands, standard_family,
    EndRing, HomGrid, StandardFamily, TiltingCertificate,
};

#[derive(Clone, Debug)]
pub struct TensorTiltingInput {
    pub a: Algebra,
    pub b: Algebra,
    pub t: Vec<Vec<ProjComplex>>,
    pub u: Vec<Vec<ProjComplex>>,
    pub sign: TensorSign,
}

impl TensorTiltingInput {
    pub fn new(a: Algebra, b: Algebra, t: Vec<Vec<ProjComplex>>, u: Vec<Vec<ProjComplex>>) -> Result<Self> {
        if t.len() != u.len() {
            return Err(Error::InvalidSize(format!("{} T's but {} U's", t.len(), u.len())));
        }
        for x in t.iter().flatten() {
            x.validate(&a)?;
        }
        for y in u.iter().flatten() {
            y.validate(&b)?;
        }
        Ok(TensorTiltingInput { a, b, t, u, sign: TensorSign::Koszul })
    }

    /// The same input with the sign of the tensor differential replaced.
    pub fn with_sign(mut self, sign: TensorSign) -> Self {
        self.sign = sign;
        self
    }

    pub fn n(&self) -> usize {
        self.t.len()
    }

    /// `(i, a, b)` for every summand of the built complex.
    pub fn summand_index(&self) -> Vec<(usize, usize, usize)> {
        let mut v = Vec::new();
        for i in 0..self.n() {
            for a in 0..self.t[i].len() {
                for b in 0..self.u[i].len() {
                    v.push((i, a, b));
                }
            }
        }
        v
    }
}

fn sum_pieces(pieces: &[ProjComplex]) -> ProjComplex {
    pieces.iter().fold(ProjComplex::zero(), |acc, p| acc.direct_sum(p))
}

/// For every `(i, j)`: `dim Hom(U_i, U_j)` and `dim Hom(T_i, T_j[r])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibilityTable {
    /// `(i, j, dim Hom(U_i, U_j))`.
    pub u_homs: Vec<(usize, usize, usize)>,
    /// `(i, j, r, dim Hom(T_i, T_j[r]))` for `r ≠ 0`.
    pub t_homs: Vec<(usize, usize, i32, usize)>,
    /// First `(i, j, r, dim)` with `Hom(U_i, U_j) ≠ 0` and `Hom(T_i, T_j[r]) ≠ 0`.
    pub violation: Option<(usize, usize, i32, usize)>,
}

impl CompatibilityTable {
    pub fn compatible(&self) -> bool {
        self.violation.is_none()
    }
}

pub fn check_compatibility(input: &TensorTiltingInput) -> Result<CompatibilityTable> {
    let n = input.n();
    let ts: Vec<ProjComplex> = input.t.iter().map(|p| sum_pieces(p)).collect();
    let us: Vec<ProjComplex> = input.u.iter().map(|p| sum_pieces(p)).collect();
    let mut u_homs = Vec::new();
    let mut t_homs = Vec::new();
    let mut violation = None;
    for i in 0..n {
        for j in 0..n {
            let hu = hom_complex(&input.b, &us[i], &us[j])?.complex.cohomology_dim(0);
            u_homs.push((i, j, hu));
            let ht = hom_complex(&input.a, &ts[i], &ts[j])?;
            for r in ht.complex.lo()..=ht.complex.hi() {
                if r == 0 {
                    continue;
                }
                let d = ht.complex.cohomology_dim(r);
                if d != 0 {
                    t_homs.push((i, j, r, d));
                    if hu != 0 && violation.is_none() {
                        violation = Some((i, j, r, d));
                    }
                }
            }
        }
    }
    Ok(CompatibilityTable { u_homs, t_homs, violation })
}

#[derive(Clone, Debug)]
pub struct HypothesisChecks {
    pub u_certificate: TiltingCertificate,
    pub compatibility: CompatibilityTable,
}

pub fn check_hypotheses(input: &TensorTiltingInput) -> Result<HypothesisChecks> {
    let all_u: Vec<ProjComplex> = input.u.iter().flatten().cloned().collect();
    let u_certificate = certify_tilting(&input.b, &all_u)?;
    let compatibility = check_compatibility(input)?;
    Ok(HypothesisChecks { u_certificate, compatibility })
}

/// The output of the construction.
#[derive(Clone, Debug)]
pub struct TensorTilting {
    pub algebra: Algebra,
    pub summands: Vec<ProjComplex>,
    pub complex: ProjComplex,
    pub certificate: TiltingCertificate,
}

fn build_summands(input: &TensorTiltingInput) -> Result<Vec<ProjComplex>> {
    input
        .summand_index()
        .into_iter()
        .map(|(i, a, b)| {
            let (x, y) = (&input.t[i][a], &input.u[i][b]);
            match input.sign {
                TensorSign::Koszul => tensor_complex(&input.a, &input.b, x, y),
                sign => Ok(tensor_complex_signed(&input.a, &input.b, x, y, sign)),
            }
        })
        .collect()
}

/// Checks the hypotheses, builds `⊕ T_i ⊗ U_i` and re-certifies the result.
pub fn build_tensor_tilting(input: &TensorTiltingInput) -> Result<TensorTilting> {
    let h = check_hypotheses(input)?;
    if let Some((i, j, r, d)) = h.compatibility.violation {
        return Err(Error::HypothesisFailure(format!(
            "Hom(U_{}, U_{}) ≠ 0 but dim Hom(T_{}, T_{}[{}]) = {}",
            i + 1,
            j + 1,
            i + 1,
            j + 1,
            r,
            d
        )));
    }
    if let Some((i, j, r, d)) = h.u_certificate.failure {
        return Err(Error::HypothesisFailure(format!(
            "U is not exceptional: dim Hom(U_{}, U_{}[{}]) = {}",
            i + 1,
            j + 1,
            r,
            d
        )));
    }
    if !h.u_certificate.k0_unimodular {
        return Err(Error::HypothesisFailure("U fails the K₀ test".into()));
    }
    let algebra = tensor_algebra(&input.a, &input.b)?;
    let summands = build_summands(input)?;
    for s in &summands {
        s.validate(&algebra)?;
    }
    let certificate = certify_tilting(&algebra, &summands)?;
    let complex = sum_pieces(&summands);
    Ok(TensorTilting { algebra, summands, complex, certificate })
}

/// Degree-0 Hom grid over a list of pieces, without any vanishing check,
/// diagonal cells rebased to identity plus radical.
fn piece_grid(alg: &Algebra, pieces: &[ProjComplex]) -> Result<HomGrid> {
    let n = pieces.len();
    let mut homs = Vec::with_capacity(n);
    let mut h0 = Vec::with_capacity(n);
    for i in 0..n {
        let mut hrow = Vec::with_capacity(n);
        let mut crow = Vec::with_capacity(n);
        for j in 0..n {
            let h = hom_complex(alg, &pieces[j], &pieces[i])?;
            crow.push(h.complex.cohomology(0)?);
            hrow.push(h);
        }
        homs.push(hrow);
        h0.push(crow);
    }
    let mut grid = HomGrid { homs, h0 };
    canonicalize_diagonal(alg, pieces, &mut grid)?;
    Ok(grid)
}

struct Sides {
    a_pieces: Vec<ProjComplex>,
    b_pieces: Vec<ProjComplex>,
    /// Flat `A`-piece and `B`-piece index of every summand.
    index: Vec<(usize, usize)>,
    a_grid: HomGrid,
    b_grid: HomGrid,
}

fn sides(input: &TensorTiltingInput) -> Result<Sides> {
    let a_pieces: Vec<ProjComplex> = input.t.iter().flatten().cloned().collect();
    let b_pieces: Vec<ProjComplex> = input.u.iter().flatten().cloned().collect();
    let a_off: Vec<usize> = input.t.iter().scan(0, |s, p| { let o = *s; *s += p.len(); Some(o) }).collect();
    let b_off: Vec<usize> = input.u.iter().scan(0, |s, p| { let o = *s; *s += p.len(); Some(o) }).collect();
    let index = input.summand_index().into_iter().map(|(i, a, b)| (a_off[i] + a, b_off[i] + b)).collect();
    let a_grid = piece_grid(&input.a, &a_pieces)?;
    let b_grid = piece_grid(&input.b, &b_pieces)?;
    Ok(Sides { a_pieces, b_pieces, index, a_grid, b_grid })
}

fn predicted_from(sides: &Sides, a: &Algebra, b: &Algebra) -> Result<GeneralizedMatrixRing> {
    let m = sides.index.len();
    let ap = grid_products(a, &sides.a_grid)?;
    let bp = grid_products(b, &sides.b_grid)?;
    let dim_a = |i: usize, j: usize| sides.a_grid.h0[i][j].dim();
    let dim_b = |i: usize, j: usize| sides.b_grid.h0[i][j].dim();
    let labels = (0..m)
        .map(|s| {
            (0..m)
                .map(|t| {
                    let (ai, bi) = sides.index[s];
                    let (aj, bj) = sides.index[t];
                    let mut v = Vec::new();
                    for f in 0..dim_a(ai, aj) {
                        for g in 0..dim_b(bi, bj) {
                            v.push(if s == t && f == 0 && g == 0 {
                                format!("1_{}", s + 1)
                            } else {
                                format!("f{},{}.{}⊗g{},{}.{}", ai + 1, aj + 1, f + 1, bi + 1, bj + 1, g + 1)
                            });
                        }
                    }
                    v
                })
                .collect()
        })
        .collect();
    let mut ring = GeneralizedMatrixRing::new(labels, vec![vec![0]; m])?;
    for s in 0..m {
        for t in 0..m {
            for u in 0..m {
                let ((a1, b1), (a2, b2), (a3, b3)) = (sides.index[s], sides.index[t], sides.index[u]);
                let (l1, l2) = (dim_a(a1, a2) * dim_b(b1, b2), dim_a(a2, a3) * dim_b(b2, b3));
                if l1 == 0 || l2 == 0 {
                    continue;
                }
                let at = &ap[&(a1, a2, a3)];
                let bt = &bp[&(b1, b2, b3)];
                let (g12, g23, g13) = (dim_b(b1, b2), dim_b(b2, b3), dim_b(b1, b3));
                let (f23,) = (dim_a(a2, a3),);
                let mut table = Vec::with_capacity(l1 * l2);
                for x in 0..l1 {
                    let (f, g) = (x / g12, x % g12);
                    for y in 0..l2 {
                        let (f2, g2) = (y / g23, y % g23);
                        let fa = &at[f * f23 + f2];
                        let gb = &bt[g * g23 + g2];
                        let mut e: Elem = Vec::with_capacity(fa.len() * gb.len());
                        for (i, c) in fa {
                            for (j, d) in gb {
                                e.push((i * g13 + j, c * d));
                            }
                        }
                        e.sort_by_key(|p| p.0);
                        table.push(e);
                    }
                }
                ring.set_products(s, t, u, table)?;
            }
        }
    }
    Ok(ring)
}

/// `M_ij = Hom(T_j, T_i) ⊗ Hom(U_j, U_i)` at the level of pieces, with
/// `(f ⊗ g)(f' ⊗ g') = ff' ⊗ gg'`.
pub fn predicted_end_ring(input: &TensorTiltingInput) -> Result<GeneralizedMatrixRing> {
    let s = sides(input)?;
    predicted_from(&s, &input.a, &input.b)
}

#[derive(Clone, Debug)]
pub struct ConstructionReport {
    pub hypotheses: HypothesisChecks,
    pub built: ProjComplex,
    pub predicted: GeneralizedMatrixRing,
    pub computed: Option<EndRing>,
    pub matches: bool,
    pub witness: Option<String>,
}

/// Default bound on `dim(A ⊗ B)`.
pub const DEFAULT_DIM_BOUND: usize = 400;

/// Builds the complex, computes its endomorphism ring in the basis of
/// tensor products of chain maps, and compares it with the prediction.
pub fn verify_construction(input: &TensorTiltingInput, dim_bound: usize) -> Result<ConstructionReport> {
    let d = input.a.dim() * input.b.dim();
    if d > dim_bound {
        return Err(Error::ResourceBound(format!("dim(A ⊗ B) = {} exceeds {}", d, dim_bound)));
    }
    let hypotheses = check_hypotheses(input)?;
    let ab = tensor_algebra(&input.a, &input.b)?;
    let summands = build_summands(input)?;
    let built = sum_pieces(&summands);
    let sides = sides(input)?;
    let predicted = predicted_from(&sides, &input.a, &input.b)?;
    let report = |computed: Option<EndRing>, witness: Option<String>| ConstructionReport {
        hypotheses: hypotheses.clone(),
        built: built.clone(),
        predicted: predicted.clone(),
        matches: witness.is_none(),
        computed,
        witness,
    };
    for (s, x) in summands.iter().enumerate() {
        if let Some(n) = x.square_defect(&ab) {
            return Ok(report(None, Some(format!("summand {}: d∘d ≠ 0 in degree {}", s + 1, n))));
        }
    }
    let m = summands.len();
    let mut homs = Vec::with_capacity(m);
    let mut h0 = Vec::with_capacity(m);
    for s in 0..m {
        let mut hrow = Vec::with_capacity(m);
        let mut crow = Vec::with_capacity(m);
        for t in 0..m {
            let h = hom_complex(&ab, &summands[t], &summands[s])?;
            for r in h.complex.lo()..=h.complex.hi() {
                let dim = h.complex.cohomology_dim(r);
                if r != 0 && dim != 0 {
                    return Ok(report(
                        None,
                        Some(format!("dim Hom(X_{}, X_{}[{}]) = {}", t + 1, s + 1, r, dim)),
                    ));
                }
            }
            let coh = h.complex.cohomology(0)?;
            let (ai, bi) = sides.index[s];
            let (aj, bj) = sides.index[t];
            let expected = predicted.cell_dim(s, t);
            if coh.dim() != expected {
                return Ok(report(
                    None,
                    Some(format!("cell ({}, {}): dimension {} but predicted {}", s + 1, t + 1, coh.dim(), expected)),
                ));
            }
            let mut reps = Vec::with_capacity(expected);
            for fv in &sides.a_grid.h0[ai][aj].reps {
                let f = sides.a_grid.homs[ai][aj].decode(0, fv);
                for gv in &sides.b_grid.h0[bi][bj].reps {
                    let g = sides.b_grid.homs[bi][bj].decode(0, gv);
                    let fg = tensor_graded_map(
                        &input.b,
                        &sides.a_pieces[aj],
                        &sides.b_pieces[bj],
                        &sides.a_pieces[ai],
                        &sides.b_pieces[bi],
                        &f,
                        &g,
                    );
                    if !is_chain_map(&ab, &summands[t], &summands[s], &fg) {
                        return Ok(report(
                            None,
                            Some(format!("cell ({}, {}): f ⊗ g is not a chain map", s + 1, t + 1)),
                        ));
                    }
                    reps.push(h.encode(&fg));
                }
            }
            let coh = match coh.rebased(reps) {
                Ok(c) => c,
                Err(_) => {
                    return Ok(report(
                        None,
                        Some(format!("cell ({}, {}): tensor products of maps are dependent", s + 1, t + 1)),
                    ))
                }
            };
            crow.push(coh);
            hrow.push(h);
        }
        homs.push(hrow);
        h0.push(crow);
    }
    let grid = HomGrid { homs, h0 };
    let computed = end_ring_from_grid(&ab, &grid)?;
    let witness = predicted.first_difference(&computed.grid).map(|(i, j, l, a, b)| {
        format!("product of basis {} of cell ({}, {}) and basis {} of cell ({}, {})", a + 1, i + 1, j + 1, b + 1, j + 1, l + 1)
    });
    Ok(report(Some(computed), witness))
}

/// Dimensions of `Hom(T_i ⊗ U_i, T_j ⊗ U_j[r])` against the products
/// `dim Hom(T_i, T_j[r]) · dim Hom(U_i, U_j)`, for all `i, j` and `r` in range.
pub fn hom_product_table(input: &TensorTiltingInput) -> Result<Vec<(usize, usize, i32, usize, usize)>> {
    let ab = tensor_algebra(&input.a, &input.b)?;
    let n = input.n();
    let ts: Vec<ProjComplex> = input.t.iter().map(|p| sum_pieces(p)).collect();
    let us: Vec<ProjComplex> = input.u.iter().map(|p| sum_pieces(p)).collect();
    let xs: Vec<ProjComplex> = (0..n).map(|i| tensor_complex(&input.a, &input.b, &ts[i], &us[i])).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let hx = hom_complex(&ab, &xs[i], &xs[j])?;
            let ht = hom_complex(&input.a, &ts[i], &ts[j])?;
            let hu = hom_complex(&input.b, &us[i], &us[j])?.complex.cohomology_dim(0);
            let lo = hx.complex.lo().min(ht.complex.lo());
            let hi = hx.complex.hi().max(ht.complex.hi());
            for r in lo..=hi {
                let dx = hx.complex.cohomology_dim(r);
                let dt = ht.complex.cohomology_dim(r);
                out.push((i, j, r, dx, dt * hu));
            }
        }
    }
    Ok(out)
}

fn family(n: usize, f: StandardFamily) -> Result<(Algebra, Vec<ProjComplex>)> {
    standard_family(n, f)
}

/// `A = kA_2` with every `T_i` the regular stalk, `B = kA_n`, `U_i = S_i[i−1]`.
pub fn shifted_simple_instance(n: usize) -> Result<TensorTiltingInput> {
    let (a, _) = family(2, StandardFamily::Projective)?;
    let (b, u) = family(n, StandardFamily::ShiftedSimple)?;
    let t = vec![projective_summands(&a); n];
    TensorTiltingInput::new(a, b, t, u.into_iter().map(|x| vec![x]).collect())
}

/// `A = kA_m` with `T_1 = A`, `T_2 = DA`, `B = kA_2`, `U_1 = P_2`, `U_2 = P_1`.
pub fn dual_pair_instance(m: usize) -> Result<TensorTiltingInput> {
    let (a, p) = family(m, StandardFamily::Projective)?;
    let (_, i) = family(m, StandardFamily::Injective)?;
    let (b, q) = family(2, StandardFamily::Projective)?;
    TensorTiltingInput::new(a, b, vec![p, i], vec![vec![q[1].clone()], vec![q[0].clone()]])
}

/// `A = B = kA_2`, `T_i = U_i = S_i[i−1]`, built with the sign of the tensor
/// differential dropped.
pub fn corrupted_sign_instance() -> Result<TensorTiltingInput> {
    let (a, s) = family(2, StandardFamily::ShiftedSimple)?;
    let t: Vec<Vec<ProjComplex>> = s.into_iter().map(|x| vec![x]).collect();
    Ok(TensorTiltingInput::new(a.clone(), a, t.clone(), t)?.with_sign(TensorSign::Dropped))
}
