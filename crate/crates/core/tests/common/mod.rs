#![allow(dead_code)]

use rand::Rng;
use tilting::algebra::{linear_path_algebra, path_algebra, tensor_algebra, truncated_line_algebra, Algebra};
use tilting::complex::{hom_complex, tensor_complex, tensor_graded_map, ProjComplex, VectComplex};
use tilting::invariants::cartan_data;
use tilting::linalg::{Matrix, Subspace};
use tilting::module::{hom_space, injective_module, is_isomorphic, projective_module, simple_module, Module};
use tilting::quiver::{dynkin_quiver, DynkinType, Orientation};
use tilting::tilting::{standard_family, StandardFamily};
use tilting::Scalar;

pub fn dynkin(t: DynkinType, o: &Orientation) -> Algebra {
    path_algebra(&dynkin_quiver(t, o).unwrap()).unwrap()
}

pub fn linear(t: DynkinType) -> Algebra {
    dynkin(t, &Orientation::linear(t))
}

pub fn tensor(a: &Algebra, b: &Algebra) -> Algebra {
    tensor_algebra(a, b).unwrap()
}

pub const FAMILIES: [StandardFamily; 3] =
    [StandardFamily::Projective, StandardFamily::Injective, StandardFamily::ShiftedSimple];

/// `dim Hom(X_i, X_j[r])` predicted for the standard families over `kA_n`.
pub fn closed_form(f: StandardFamily, i: usize, j: usize, r: i32) -> usize {
    if r != 0 {
        return 0;
    }
    match f {
        StandardFamily::Projective | StandardFamily::Injective => usize::from(j <= i),
        StandardFamily::ShiftedSimple => usize::from(j == i || j == i + 1),
    }
}

/// First `(i, j, r, computed, expected)` disagreeing with the closed form.
pub fn family_table_mismatch(n: usize, f: StandardFamily) -> Option<(usize, usize, i32, usize, usize)> {
    let (a, xs) = standard_family(n, f).unwrap();
    for i in 0..n {
        for j in 0..n {
            let h = hom_complex(&a, &xs[i], &xs[j]).unwrap();
            for r in -(n as i32) - 1..=(n as i32) + 1 {
                let d = h.complex.cohomology_dim(r);
                let e = closed_form(f, i, j, r);
                if d != e {
                    return Some((i, j, r, d, e));
                }
            }
        }
    }
    None
}

fn random_summand<R: Rng>(rng: &mut R, n: usize) -> ProjComplex {
    let f = FAMILIES[rng.gen_range(0..3)];
    let (_, xs) = standard_family(n, f).unwrap();
    let x = xs[rng.gen_range(0..n)].clone();
    x.shift(rng.gen_range(-1..=1))
}

/// A small complex of projectives over `kA_n`: one or two shifted members
/// of the standard families.
pub fn random_piece<R: Rng>(rng: &mut R, n: usize) -> ProjComplex {
    let x = random_summand(rng, n);
    if rng.gen_bool(0.5) {
        x.direct_sum(&random_summand(rng, n))
    } else {
        x
    }
}

pub struct SignInstance {
    pub a: Algebra,
    pub b: Algebra,
    pub p: ProjComplex,
    pub x: ProjComplex,
    pub q: ProjComplex,
    pub y: ProjComplex,
}

pub fn random_sign_instance<R: Rng>(rng: &mut R) -> SignInstance {
    let (na, nb) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
    let a = linear_path_algebra(na).unwrap();
    let b = linear_path_algebra(nb).unwrap();
    SignInstance {
        p: random_piece(rng, na),
        x: random_piece(rng, na),
        q: random_piece(rng, nb),
        y: random_piece(rng, nb),
        a,
        b,
    }
}

/// The map `f ⊗ g ↦ (−1)^{i·|g|} f ⊗ g` from `Hom•(P,X) ⊗ Hom•(Q,Y)` to
/// `Hom•(P⊗Q, X⊗Y)` commutes with the differentials and is bijective in
/// every degree.
pub fn sign_map_is_chain_iso(s: &SignInstance) -> Result<(), String> {
    let ab = tensor(&s.a, &s.b);
    let k = hom_complex(&s.a, &s.p, &s.x).unwrap();
    let l = hom_complex(&s.b, &s.q, &s.y).unwrap();
    let pq = tensor_complex(&s.a, &s.b, &s.p, &s.q).unwrap();
    let xy = tensor_complex(&s.a, &s.b, &s.x, &s.y).unwrap();
    let r = hom_complex(&ab, &pq, &xy).unwrap();
    let lhs = k.complex.tensor(&l.complex).unwrap();
    let lo = lhs.lo().min(r.complex.lo()) - 1;
    let hi = lhs.hi().max(r.complex.hi()) + 1;
    let phi = |n: i32| -> Matrix {
        let mut m = Matrix::zeros(r.dim(n), lhs.dim(n));
        let mut col = 0;
        for p in k.complex.lo()..=k.complex.hi() {
            let (dk, dl) = (k.dim(p), l.dim(n - p));
            if dk * dl == 0 {
                continue;
            }
            for i in 0..dk {
                let mut e = vec![Scalar::zero(); dk];
                e[i] = Scalar::one();
                let f = k.decode(p, &e);
                for j in 0..dl {
                    let mut e = vec![Scalar::zero(); dl];
                    e[j] = Scalar::one();
                    let g = l.decode(n - p, &e);
                    let fg = tensor_graded_map(&s.b, &s.p, &s.q, &s.x, &s.y, &f, &g);
                    let v = r.encode(&fg);
                    for (row, x) in v.into_iter().enumerate() {
                        m[(row, col)] = x;
                    }
                    col += 1;
                }
            }
        }
        m
    };
    for n in lo..=hi {
        let (f0, f1) = (phi(n), phi(n + 1));
        if f0.rows() != f0.cols() || f0.rank() != f0.rows() {
            return Err(format!("not bijective in degree {}", n));
        }
        let left = r.complex.diff(n).mul(&f0).unwrap();
        let right = f1.mul(&lhs.diff(n)).unwrap();
        if left != right {
            return Err(format!("not a chain map in degree {}", n));
        }
    }
    Ok(())
}

fn concentrated_in_zero(c: &VectComplex) -> bool {
    (c.lo()..=c.hi()).all(|r| r == 0 || c.cohomology_dim(r) == 0)
}

/// Künneth with `L = Hom•(Q, Y)` concentrated in degree 0:
/// `dim H^r(K ⊗ L) = dim H^r(K) · dim H^0(L)`, also for `Hom•(P⊗Q, X⊗Y)`.
/// Returns `None` when `L` is not concentrated in degree 0.
pub fn kunneth_holds<R: Rng>(rng: &mut R) -> Option<Result<(), String>> {
    let (na, nb) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
    let a = linear_path_algebra(na).unwrap();
    let b = linear_path_algebra(nb).unwrap();
    let (p, x) = (random_piece(rng, na), random_piece(rng, na));
    let f = FAMILIES[rng.gen_range(0..3)];
    let (_, us) = standard_family(nb, f).unwrap();
    let s = rng.gen_range(-1..=1);
    let q = us[rng.gen_range(0..nb)].shift(s);
    let y = us[rng.gen_range(0..nb)].shift(s);
    let k = hom_complex(&a, &p, &x).unwrap();
    let l = hom_complex(&b, &q, &y).unwrap();
    if !concentrated_in_zero(&l.complex) {
        return None;
    }
    let kl = k.complex.tensor(&l.complex).unwrap();
    let ab = tensor(&a, &b);
    let big = hom_complex(&ab, &tensor_complex(&a, &b, &p, &q).unwrap(), &tensor_complex(&a, &b, &x, &y).unwrap())
        .unwrap();
    let h0 = l.complex.cohomology_dim(0);
    for r in -8..=8 {
        let expected = k.complex.cohomology_dim(r) * h0;
        if kl.cohomology_dim(r) != expected || big.complex.cohomology_dim(r) != expected {
            return Some(Err(format!("degree {}", r)));
        }
    }
    Some(Ok(()))
}

/// Checks `0 → X → Y → Z → 0` exact for a nonzero map `X → Y` spanning a
/// one-dimensional Hom space.
fn short_exact(a: &Algebra, x: &Module, y: &Module, z: &Module) -> bool {
    let homs = hom_space(a, x, y).unwrap();
    if homs.len() != 1 {
        return false;
    }
    let f = &homs[0];
    if f.rank() != x.dim() {
        return false;
    }
    let im = Subspace::spanned_by(y.dim(), &f.to_rows());
    let (q, _) = y.quotient(a, &im).unwrap();
    is_isomorphic(a, &q, z).unwrap()
}

/// The three families of short exact sequences among `P_i`, `S_i`, `I_i` over `kA_n`.
pub fn psi_sequences_exact(n: usize) -> Result<(), String> {
    let a = linear_path_algebra(n).unwrap();
    let p = |i: usize| projective_module(&a, i - 1);
    let s = |i: usize| simple_module(&a, i - 1);
    let inj = |i: usize| injective_module(&a, i - 1);
    for i in 1..n {
        if !short_exact(&a, &p(i + 1), &p(i), &s(i)) {
            return Err(format!("0 → P_{} → P_{} → S_{} → 0", i + 1, i, i));
        }
        if !short_exact(&a, &p(i + 1), &p(1), &inj(i)) {
            return Err(format!("0 → P_{} → P_1 → I_{} → 0", i + 1, i));
        }
    }
    for i in 2..=n {
        if !short_exact(&a, &s(i), &inj(i), &inj(i - 1)) {
            return Err(format!("0 → S_{} → I_{} → I_{} → 0", i, i, i - 1));
        }
    }
    if !is_isomorphic(&a, &s(n), &p(n)).unwrap()
        || !is_isomorphic(&a, &s(1), &inj(1)).unwrap()
        || !is_isomorphic(&a, &inj(n), &p(1)).unwrap()
    {
        return Err("boundary identifications".into());
    }
    Ok(())
}

/// Algebras of finite global dimension used for the Kronecker law.
pub fn kronecker_suite() -> Vec<(String, Algebra)> {
    let mut v = Vec::new();
    for n in 1..=4 {
        v.push((format!("kA{}", n), linear_path_algebra(n).unwrap()));
    }
    v.push(("A(4,2)".into(), truncated_line_algebra(4, 2).unwrap()));
    v.push(("A(5,3)".into(), truncated_line_algebra(5, 3).unwrap()));
    let a3 = DynkinType::A(3);
    v.push(("A3 bipartite".into(), dynkin(a3, &Orientation::bipartite(a3))));
    let d4 = DynkinType::D(4);
    v.push(("D4 inward".into(), dynkin(d4, &Orientation::inward(d4))));
    v
}

/// `C_{A⊗B} = C_A ⊗ C_B` and `N_{A⊗B} = N_A ⊗ N_B`.
pub fn kronecker_law(a: &Algebra, b: &Algebra) -> bool {
    let (da, db) = (cartan_data(a).unwrap(), cartan_data(b).unwrap());
    let dab = cartan_data(&tensor(a, b)).unwrap();
    dab.c == da.c.kronecker(&db.c) && dab.n == da.n.kronecker(&db.n)
}
