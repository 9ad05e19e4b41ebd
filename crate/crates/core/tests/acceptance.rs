//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::time::Instant;

use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tilting::algebra::{linear_path_algebra, truncated_line_algebra, Algebra};
use tilting::ar::{auslander_algebra, default_max_steps, initial_endomorphism_algebra, knit, stable_auslander_algebra};
use tilting::invariants::{cy_check, cy_sum, derived_probe, CYFraction};
use tilting::module::simple_module;
use tilting::quiver::{DynkinType, Orientation};
use tilting::resolution::projective_resolution;
use tilting::tensor::{corrupted_sign_instance, dual_pair_instance, shifted_simple_instance, verify_construction, DEFAULT_DIM_BOUND};
use tilting::tilting::{certify_tilting, endomorphism_ring, standard_family, verify_line_rectangle_iso, StandardFamily};
use tilting::complex::ProjComplex;

type Outcome = Result<(), String>;

fn frac(d: i64, e: u64) -> CYFraction {
    CYFraction::new(d, e).unwrap()
}

fn consistent(a: &Algebra, b: &Algebra, what: &str) -> Outcome {
    let p = derived_probe(a, b).map_err(|e| format!("{}: {}", what, e))?;
    if p.consistent() {
        Ok(())
    } else {
        Err(format!("{}: {}", what, p.verdict))
    }
}

fn cy(a: &Algebra, f: CYFraction, what: &str) -> Outcome {
    if cy_check(a, f).map_err(|e| e.to_string())? {
        Ok(())
    } else {
        Err(format!("{} is not {}-CY on K0", what, f))
    }
}

/// Hom tables of the standard families and their endomorphism rings.
fn criterion_1() -> Outcome {
    for n in 1..=6 {
        for f in FAMILIES {
            if let Some((i, j, r, d, e)) = family_table_mismatch(n, f) {
                return Err(format!("{:?} n={}: Hom(X{}, X{}[{}]) = {}, expected {}", f, n, i + 1, j + 1, r, d, e));
            }
        }
        // End(⊕P_i), End(⊕I_i): Gabriel quiver linear A_n and dimension n(n+1)/2 force kA_n
        let kan = linear_path_algebra(n).unwrap();
        for f in [StandardFamily::Projective, StandardFamily::Injective] {
            let (a, xs) = standard_family(n, f).unwrap();
            let e = endomorphism_ring(&a, &xs).map_err(|e| e.to_string())?;
            let q = e.algebra.gabriel_quiver();
            let mut arrows: Vec<(usize, usize)> = q.arrows().iter().map(|a| (a.source, a.target)).collect();
            arrows.sort();
            let expected: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
            let mut rev: Vec<(usize, usize)> = expected.iter().map(|&(s, t)| (t, s)).collect();
            rev.sort();
            if e.algebra.dim() != kan.dim() || (arrows != expected && arrows != rev) {
                return Err(format!("End of {:?} family for n={} is not kA_n", f, n));
            }
        }
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    let mut inputs = Vec::new();
    for n in 1..=4 {
        inputs.push((format!("kA2 ⊗ kA{} with S-shifts", n), shifted_simple_instance(n).unwrap()));
    }
    inputs.push(("kA3 ⊗ kA2 with P-family".into(), dual_pair_instance(3).unwrap()));
    for (name, input) in inputs {
        let r = verify_construction(&input, DEFAULT_DIM_BOUND).map_err(|e| format!("{}: {}", name, e))?;
        if !r.matches {
            return Err(format!("{}: {}", name, r.witness.unwrap_or_default()));
        }
        if !r.hypotheses.compatibility.compatible() {
            return Err(format!("{}: incompatible input", name));
        }
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    for m in 1..=4 {
        for n in 1..=4 {
            let c = verify_line_rectangle_iso(m, n).map_err(|e| e.to_string())?;
            if !c.iso {
                return Err(format!("m={} n={}: {}", m, n, c.failure.unwrap_or_default()));
            }
        }
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    for n in 1..=8 {
        let t = DynkinType::ade_chain(n).unwrap();
        consistent(&truncated_line_algebra(n, 3).unwrap(), &linear(t), &format!("A({},3) vs k{}", n, t.name()))?;
    }
    for (m, n) in [(2, 2), (2, 3), (2, 4), (3, 3), (2, 5)] {
        let rect = tensor(&linear_path_algebra(m).unwrap(), &linear_path_algebra(n).unwrap());
        consistent(&truncated_line_algebra(m * n, m + 1).unwrap(), &rect, &format!("A({},{}) vs kA{}⊗kA{}", m * n, m + 1, m, n))?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    let line = truncated_line_algebra(10, 3).unwrap();
    let rect = tensor(&linear_path_algebra(5).unwrap(), &linear_path_algebra(2).unwrap());
    let a5 = linear_path_algebra(5).unwrap();
    let saus = stable_auslander_algebra(&a5, default_max_steps(&a5)).map_err(|e| e.to_string())?;
    consistent(&line, &rect, "A(10,3) vs kA5⊗kA2")?;
    consistent(&line, &saus, "A(10,3) vs sAus(kA5)")?;
    consistent(&rect, &saus, "kA5⊗kA2 vs sAus(kA5)")
}

fn criterion_6() -> Outcome {
    let a3 = DynkinType::A(3);
    let lin = linear(a3);
    let bip = dynkin(a3, &Orientation::bipartite(a3));
    let aus_lin = auslander_algebra(&lin, 20).map_err(|e| e.to_string())?;
    let aus_bip = auslander_algebra(&bip, 20).map_err(|e| e.to_string())?;
    let rect = tensor(&linear_path_algebra(2).unwrap(), &linear_path_algebra(3).unwrap());
    consistent(&aus_lin, &linear(DynkinType::D(6)), "Aus(kA3 linear) vs kD6")?;
    consistent(&aus_bip, &rect, "Aus(kA3 bipartite) vs kA2⊗kA3")?;
    consistent(&rect, &linear(DynkinType::E(6)), "kA2⊗kA3 vs kE6")
}

fn criterion_7() -> Outcome {
    let a3 = DynkinType::A(3);
    let d4 = DynkinType::D(4);
    let a5 = DynkinType::A(5);
    let cases = [
        ("A3 bipartite", dynkin(a3, &Orientation::bipartite(a3))),
        ("D4 inward", dynkin(d4, &Orientation::inward(d4))),
        ("A5 symmetric", dynkin(a5, &Orientation::symmetric(a5).unwrap())),
    ];
    for (name, kq) in cases {
        let steps = default_max_steps(&kq);
        let d = knit(&kq, steps).map_err(|e| e.to_string())?;
        if !d.is_homogeneous() {
            return Err(format!("{} is not homogeneous", name));
        }
        let r = d.orbit_sizes()[0];
        for s in 0..=r {
            let e = initial_endomorphism_algebra(&kq, s, steps).map_err(|e| e.to_string())?;
            let t = tensor(&kq, &linear_path_algebra(s + 1).unwrap());
            consistent(&e, &t, &format!("{} r={}", name, s))?;
        }
    }
    Ok(())
}

/// Dynkin `kQ` is `(h−2)/h`-CY.
fn dynkin_cy(t: DynkinType) -> CYFraction {
    let h = t.coxeter_number() as u64;
    frac(h as i64 - 2, h)
}

fn criterion_8() -> Outcome {
    let a = |n| DynkinType::A(n);
    let d = |n| DynkinType::D(n);
    // (diagram, symmetric orientation, Aus partner A_k, sAus partner A_k, Aus CY, sAus CY)
    let rows = [
        (a(3), dynkin(a(3), &Orientation::symmetric(a(3)).unwrap()), 2, 1),
        (a(5), dynkin(a(5), &Orientation::symmetric(a(5)).unwrap()), 3, 2),
        (d(4), dynkin(d(4), &Orientation::inward(d(4))), 3, 2),
        (d(5), dynkin(d(5), &Orientation::symmetric(d(5)).unwrap()), 4, 3),
    ];
    for (t, kq, aus_k, saus_k) in rows {
        let name = t.name();
        let steps = default_max_steps(&kq);
        let aus = auslander_algebra(&kq, steps).map_err(|e| e.to_string())?;
        let partner = tensor(&kq, &linear_path_algebra(aus_k).unwrap());
        consistent(&aus, &partner, &format!("Aus(k{}) vs {}×A{}", name, name, aus_k))?;
        let f = cy_sum(dynkin_cy(t), dynkin_cy(DynkinType::A(aus_k)));
        cy(&aus, f, &format!("Aus(k{})", name))?;
        cy(&partner, f, &format!("k{}⊗kA{}", name, aus_k))?;
        let lin = linear(t);
        let saus = stable_auslander_algebra(&lin, default_max_steps(&lin)).map_err(|e| e.to_string())?;
        let partner = tensor(&kq, &linear_path_algebra(saus_k).unwrap());
        consistent(&saus, &partner, &format!("sAus(k{}) vs {}×A{}", name, name, saus_k))?;
        let f = cy_sum(dynkin_cy(t), dynkin_cy(DynkinType::A(saus_k)));
        cy(&saus, f, &format!("sAus(k{})", name))?;
    }
    let e6a6 = tensor(&linear(DynkinType::E(6)), &linear_path_algebra(6).unwrap());
    cy(&e6a6, frac(130, 84), "kE6⊗kA6")
}

fn criterion_9() -> Outcome {
    let printed = [
        ((10, 12), (5, 7), (130, 84)),
        ((8, 9), (8, 10), (152, 90)),
        ((14, 15), (14, 16), (434, 240)),
        ((10, 12), (4, 6), (18, 12)),
        ((8, 9), (7, 9), (15, 9)),
        ((14, 15), (13, 15), (27, 15)),
    ];
    for (x, y, z) in printed {
        let s = cy_sum(frac(x.0, x.1), frac(y.0, y.1));
        if s != frac(z.0, z.1) {
            return Err(format!("{}/{} + {}/{} gave {}", x.0, x.1, y.0, y.1, s));
        }
    }
    // the generic rows with a printed left-hand side
    for n in 1..=10i64 {
        let u = n as u64;
        let rows = [
            (frac(2 * n, 2 * u + 2), frac(n - 1, u + 1), frac(4 * n - 2, 2 * u + 2)),
            (frac(2 * n - 2, 2 * u - 1), frac(2 * n - 3, 2 * u - 1), frac(4 * n - 5, 2 * u - 1)),
            (frac(4 * n - 2, 4 * u), frac(2 * n - 2, 2 * u), frac(8 * n - 6, 4 * u)),
        ];
        for (x, y, z) in rows {
            if cy_sum(x, y) != z {
                return Err(format!("{} + {} gave {}, expected {}", x, y, cy_sum(x, y), z));
            }
        }
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for k in 0..100 {
        let s = random_sign_instance(&mut rng);
        sign_map_is_chain_iso(&s).map_err(|e| format!("sign map instance {}: {}", k, e))?;
    }
    let mut done = 0;
    while done < 100 {
        if let Some(r) = kunneth_holds(&mut rng) {
            r.map_err(|e| format!("Künneth instance {}: {}", done, e))?;
            done += 1;
        }
    }
    for n in 1..=6 {
        psi_sequences_exact(n).map_err(|e| format!("n={}: {}", n, e))?;
    }
    let suite = kronecker_suite();
    for (x, a) in &suite {
        for (y, b) in &suite {
            if !kronecker_law(a, b) {
                return Err(format!("Kronecker law fails for {} ⊗ {}", x, y));
            }
        }
    }
    for n in 1..=7 {
        let a = linear_path_algebra(n).unwrap();
        let c = knit(&a, default_max_steps(&a)).map_err(|e| e.to_string())?.count();
        if c != n * (n + 1) / 2 {
            return Err(format!("kA{} knits {} indecomposables", n, c));
        }
    }
    let d4 = linear(DynkinType::D(4));
    let c = knit(&d4, default_max_steps(&d4)).map_err(|e| e.to_string())?.count();
    if c != 12 {
        return Err(format!("kD4 knits {} indecomposables", c));
    }
    Ok(())
}

fn criterion_11() -> Outcome {
    let r = verify_construction(&corrupted_sign_instance().unwrap(), DEFAULT_DIM_BOUND).map_err(|e| e.to_string())?;
    if r.matches {
        return Err("corrupted sign was not detected".into());
    }
    let a3 = linear_path_algebra(3).unwrap();
    let a22 = tensor(&linear_path_algebra(2).unwrap(), &linear_path_algebra(2).unwrap());
    if derived_probe(&a3, &a22).map_err(|e| e.to_string())?.consistent() {
        return Err("kA3 and kA2⊗kA2 were not distinguished".into());
    }
    let a2 = linear_path_algebra(2).unwrap();
    let s1 = projective_resolution(&a2, &simple_module(&a2, 0), 4).map_err(|e| e.to_string())?;
    let s2 = ProjComplex::stalk(vec![1], 0);
    let c = certify_tilting(&a2, &[s1, s2]).map_err(|e| e.to_string())?;
    if c.exceptional {
        return Err("S1 ⊕ S2 passed the exceptionality check".into());
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("Hom tables of P, I and shifted S families over kA_n, n <= 6", criterion_1),
        ("tensor construction matches the predicted endomorphism ring", criterion_2),
        ("line/rectangle basis map is an algebra isomorphism, m, n <= 4", criterion_3),
        ("ADE chain and line/rectangle probes consistent", criterion_4),
        ("A(10,3), kA5⊗kA2, sAus(kA5) pairwise consistent", criterion_5),
        ("Auslander algebras of A3 orientations", criterion_6),
        ("initial preprojective endomorphism algebras vs T_{r+1}(kQ)", criterion_7),
        ("Auslander and stable Auslander tables with CY periodicity", criterion_8),
        ("CY fraction arithmetic of the tables", criterion_9),
        ("property suites", criterion_10),
        ("negative controls", criterion_11),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = f();
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(()) => println!("criterion {:>2}: PASS  {} ({:.1}s)", k + 1, name, secs),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {} ({:.1}s): {}", k + 1, name, secs, e);
            }
        }
    }
    if failed > 0 {
        println!("{} criteria failed", failed);
        std::process::exit(1);
    }
    println!("all 11 criteria passed");
}
