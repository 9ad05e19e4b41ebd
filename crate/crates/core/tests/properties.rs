mod common;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tilting::algebra::{linear_path_algebra, path_algebra, tensor_algebra, truncated_line_algebra};
use tilting::ar::{auslander_algebra, default_max_steps, knit, stable_auslander_algebra};
use tilting::invariants::{cartan_data, cy_check, cy_sum, derived_probe, CYFraction};
use tilting::linalg::{char_poly, kernel_vectors, Matrix};
use tilting::quiver::{dynkin_quiver, DynkinType, Orientation, Quiver};
use tilting::tensor::{build_tensor_tilting, shifted_simple_instance};
use tilting::tilting::{endomorphism_ring, standard_family, StandardFamily};
use tilting::Scalar;

fn small_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-3i64..=3, r * c)
            .prop_map(move |v| Matrix::from_vec(r, c, v.into_iter().map(Scalar::from_i64).collect()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn sign_map_is_a_chain_isomorphism(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_sign_instance(&mut rng);
        prop_assert_eq!(sign_map_is_chain_iso(&s), Ok(()));
    }

    #[test]
    fn kunneth_dimension_identity(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some(r) = kunneth_holds(&mut rng) {
            prop_assert_eq!(r, Ok(()));
        }
    }

    #[test]
    fn kernel_vectors_are_annihilated(m in small_matrix()) {
        let k = kernel_vectors(&m);
        prop_assert_eq!(k.len() + m.rank(), m.cols());
        for v in k {
            prop_assert!(m.mul(&Matrix::column(v)).unwrap().is_zero());
        }
    }

    #[test]
    fn coxeter_polynomial_is_permutation_invariant(n in 2usize..6, ell in 2usize..4, seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let a = truncated_line_algebra(n, ell).unwrap();
        let d = cartan_data(&a).unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let c = d.c.permute(&perm);
        let cinv_t = c.inverse().unwrap().transpose();
        let phi = cinv_t.mul(&c).unwrap().neg();
        prop_assert_eq!(char_poly(&phi).unwrap(), d.coxeter_poly);
    }

    #[test]
    fn random_acyclic_path_algebras_are_associative(edges in proptest::collection::vec((0usize..4, 0usize..4), 0..5)) {
        let edges: Vec<(usize, usize)> = edges.into_iter().filter(|(s, t)| s < t).collect();
        let q = Quiver::from_edges(4, &edges).unwrap();
        let a = path_algebra(&q).unwrap();
        let d = cartan_data(&a).unwrap();
        prop_assert!(d.c.determinant().unwrap().is_one());
        prop_assert!(d.phi.determinant().unwrap().abs().is_one());
        let g = a.gabriel_quiver();
        prop_assert_eq!(g.arrows().len(), edges.len());
    }
}

#[test]
fn psi_sequences() {
    for n in 1..=6 {
        assert_eq!(psi_sequences_exact(n), Ok(()), "n = {}", n);
    }
}

#[test]
fn kronecker_law_on_suite() {
    let suite = kronecker_suite();
    for (x, a) in &suite {
        for (y, b) in &suite {
            assert!(kronecker_law(a, b), "{} ⊗ {}", x, y);
        }
    }
}

#[test]
fn cy_fractions_add_under_tensor_products() {
    let cases: Vec<(tilting::algebra::Algebra, CYFraction)> = (1..=4)
        .map(|n| (linear_path_algebra(n).unwrap(), CYFraction::new(n as i64 - 1, n as u64 + 1).unwrap()))
        .chain([(linear(DynkinType::D(4)), CYFraction::new(4, 6).unwrap())])
        .collect();
    for (a, fa) in &cases {
        assert!(cy_check(a, *fa).unwrap());
        for (b, fb) in &cases {
            assert!(cy_check(&tensor_algebra(a, b).unwrap(), cy_sum(*fa, *fb)).unwrap());
        }
    }
}

#[test]
fn homogeneity_matches_symmetric_orientations() {
    for t in [DynkinType::A(3), DynkinType::A(4), DynkinType::D(4), DynkinType::D(5)] {
        for o in Orientation::all(t) {
            let a = path_algebra(&dynkin_quiver(t, &o).unwrap()).unwrap();
            let d = knit(&a, default_max_steps(&a)).unwrap();
            assert_eq!(d.is_homogeneous(), o.is_symmetric(t), "{} {}", t.name(), o.to_arrow_string());
            assert_eq!(d.count(), t.positive_roots());
            assert_eq!(d.orbit_sizes().iter().map(|r| r + 1).sum::<usize>(), d.count());
        }
    }
}

#[test]
fn knit_counts() {
    for n in 1..=7 {
        let a = linear_path_algebra(n).unwrap();
        assert_eq!(knit(&a, default_max_steps(&a)).unwrap().count(), n * (n + 1) / 2);
    }
    for t in [DynkinType::D(4), DynkinType::D(5), DynkinType::E(6)] {
        let a = linear(t);
        assert_eq!(knit(&a, default_max_steps(&a)).unwrap().count(), t.positive_roots());
    }
}

#[test]
fn auslander_of_even_line_matches_stable_of_odd_line() {
    for n in 1..=2 {
        let even = linear_path_algebra(2 * n).unwrap();
        let odd = linear_path_algebra(2 * n + 1).unwrap();
        let aus = auslander_algebra(&even, default_max_steps(&even)).unwrap();
        let saus = stable_auslander_algebra(&odd, default_max_steps(&odd)).unwrap();
        assert_eq!(aus.dim(), saus.dim());
        assert!(derived_probe(&aus, &saus).unwrap().consistent());
        let rect = tensor_algebra(&linear_path_algebra(2 * n + 1).unwrap(), &linear_path_algebra(n).unwrap()).unwrap();
        assert!(derived_probe(&aus, &rect).unwrap().consistent());
    }
}

#[test]
fn endomorphism_rings_of_tilting_families_probe_consistent() {
    for n in 1..=5 {
        for f in [StandardFamily::Projective, StandardFamily::Injective, StandardFamily::ShiftedSimple] {
            let (a, xs) = standard_family(n, f).unwrap();
            let e = endomorphism_ring(&a, &xs).unwrap();
            assert!(derived_probe(&a, &e.algebra).unwrap().consistent(), "{:?} n = {}", f, n);
        }
    }
}

#[test]
fn built_tensor_complexes_are_certified() {
    for n in 1..=3 {
        let t = build_tensor_tilting(&shifted_simple_instance(n).unwrap()).unwrap();
        assert!(t.certificate.exceptional);
        assert!(t.certificate.k0_unimodular);
    }
}

#[test]
fn dynkin_quivers_have_expected_invariants() {
    for t in [DynkinType::A(4), DynkinType::D(5), DynkinType::E(6), DynkinType::E(7), DynkinType::E(8)] {
        let h = t.coxeter_number() as u64;
        let a = linear(t);
        assert!(cy_check(&a, CYFraction::new(h as i64 - 2, h).unwrap()).unwrap(), "{}", t.name());
        let q = dynkin_quiver(t, &Orientation::bipartite(t)).unwrap();
        let b = path_algebra(&q).unwrap();
        assert!(derived_probe(&a, &b).unwrap().consistent());
    }
}
