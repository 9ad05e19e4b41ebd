//! Derived invariants read off the Cartan matrix, and their comparison.
//!
//! With `C[x][y] = dim e_x A e_y`, the Nakayama functor acts on `K₀` by
//! `N = C·C⁻ᵀ` and the Coxeter matrix is `Φ = −C⁻ᵀ·C`.

use alloc::format;
use alloc::string::String;
use core::fmt;

use num_integer::Integer;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{char_poly, matrix_power, Matrix, Polynomial};
use crate::resolution::has_finite_global_dimension;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    pub c: Matrix,
    pub n: Matrix,
    pub phi: Matrix,
    pub coxeter_poly: Polynomial,
}

impl CartanData {
    pub fn rank(&self) -> usize {
        self.c.rows()
    }

    pub fn det(&self) -> Scalar {
        self.c.determinant().expect("square")
    }
}

pub fn cartan_data(alg: &Algebra) -> Result<CartanData> {
    if !has_finite_global_dimension(alg, alg.vertex_count() + 1)? {
        return Err(Error::InfiniteGlobalDimension);
    }
    let c = alg.cartan_matrix();
    let cinv_t = c.inverse()?.transpose();
    let n = c.mul(&cinv_t)?;
    let phi = cinv_t.mul(&c)?.neg();
    if !n.is_integral() || !phi.is_integral() {
        return Err(Error::NonInteger);
    }
    let coxeter_poly = char_poly(&phi)?;
    Ok(CartanData { c, n, phi, coxeter_poly })
}

/// `d/e`, kept unreduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CYFraction {
    pub d: i64,
    pub e: u64,
}

impl CYFraction {
    pub fn new(d: i64, e: u64) -> Result<Self> {
        if e == 0 {
            return Err(Error::InvalidSize("CY denominator must be positive".into()));
        }
        Ok(CYFraction { d, e })
    }
}

impl fmt::Display for CYFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.d, self.e)
    }
}

/// Sum over the least common denominator: `ν^e ≃ [d]` and `ν^{e'} ≃ [d']`
/// give `ν^l ≃ [d·l/e + d'·l/e']` with `l = lcm(e, e')`.
pub fn cy_sum(a: CYFraction, b: CYFraction) -> CYFraction {
    let l = a.e.lcm(&b.e);
    CYFraction { d: a.d * (l / a.e) as i64 + b.d * (l / b.e) as i64, e: l }
}

/// `N^e = (−1)^d·I`, the `K₀` shadow of `ν^e ≃ [d]`.
pub fn cy_check(alg: &Algebra, frac: CYFraction) -> Result<bool> {
    let data = cartan_data(alg)?;
    nakayama_periodicity(&data.n, frac)
}

pub fn nakayama_periodicity(n: &Matrix, frac: CYFraction) -> Result<bool> {
    let p = matrix_power(n, frac.e)?;
    let id = Matrix::identity(n.rows());
    Ok(if frac.d.rem_euclid(2) == 0 { p == id } else { p == id.neg() })
}

/// Smallest `e ≤ bound` with `N^e = ±I`, and the corresponding sign.
pub fn nakayama_order(n: &Matrix, bound: u64) -> Result<Option<(u64, bool)>> {
    let id = Matrix::identity(n.rows());
    let neg = id.neg();
    let mut p = id.clone();
    for e in 1..=bound {
        p = p.mul(n)?;
        if p == id {
            return Ok(Some((e, true)));
        }
        if p == neg {
            return Ok(Some((e, false)));
        }
    }
    Ok(None)
}

/// Rank of `K₀`, `|det C|` and the Coxeter polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantSummary {
    pub rank: usize,
    pub det_cartan: Scalar,
    pub coxeter_poly: Polynomial,
}

pub fn invariant_summary(alg: &Algebra) -> Result<InvariantSummary> {
    let d = cartan_data(alg)?;
    Ok(InvariantSummary { rank: d.rank(), det_cartan: d.det().abs(), coxeter_poly: d.coxeter_poly })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProbeVerdict {
    /// All invariants agree; a necessary condition for derived equivalence only.
    Consistent,
    /// The named invariant differs, so the algebras are not derived equivalent.
    Distinguished(String),
}

impl fmt::Display for ProbeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProbeVerdict::Consistent => write!(f, "consistent"),
            ProbeVerdict::Distinguished(w) => write!(f, "distinguished ({})", w),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeReport {
    pub left: InvariantSummary,
    pub right: InvariantSummary,
    pub verdict: ProbeVerdict,
}

impl ProbeReport {
    pub fn consistent(&self) -> bool {
        self.verdict == ProbeVerdict::Consistent
    }
}

pub fn derived_probe(a: &Algebra, b: &Algebra) -> Result<ProbeReport> {
    let left = invariant_summary(a)?;
    let right = invariant_summary(b)?;
    let verdict = if left.rank != right.rank {
        ProbeVerdict::Distinguished(format!("rank {} vs {}", left.rank, right.rank))
    } else if left.det_cartan != right.det_cartan {
        ProbeVerdict::Distinguished(format!("|det C| {} vs {}", left.det_cartan, right.det_cartan))
    } else if left.coxeter_poly != right.coxeter_poly {
        ProbeVerdict::Distinguished(format!("Coxeter polynomial {} vs {}", left.coxeter_poly, right.coxeter_poly))
    } else {
        ProbeVerdict::Consistent
    };
    Ok(ProbeReport { left, right, verdict })
}
