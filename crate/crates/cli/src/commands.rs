//! Command implementations. Each returns the text to print, an optional DOT
//! document and the exit status of its verdict.

use serde_json::{json, Value};
use tilting::algebra::Algebra;
use tilting::ar::{ar_quiver, default_max_steps, knit};
use tilting::complex::ProjComplex;
use tilting::invariants::derived_probe;
use tilting::module::{injective_module, simple_module};
use tilting::resolution::projective_resolution;
use tilting::tensor::{
    corrupted_sign_instance, dual_pair_instance, shifted_simple_instance, verify_construction, TensorTiltingInput,
    DEFAULT_DIM_BOUND,
};
use tilting::tilting::{certify_tilting_within, Verdict, DEFAULT_MAX_LEN};

use crate::error::CliError;
use crate::format::{
    ar_quiver_dot, arrow_list, invariants_value, matrix_value, quiver_dot, AlgebraJson,
};
use crate::spec::{algebra_from_spec, EvalOptions};

/// Exit status for a positive verdict.
pub const EXIT_POSITIVE: i32 = 0;
/// Exit status for a negative verdict.
pub const EXIT_NEGATIVE: i32 = 1;

#[derive(Clone, Debug)]
pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub dot: Option<String>,
    pub code: i32,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub max_steps: Option<usize>,
    pub hom_range: Option<i32>,
}

impl Options {
    fn eval(&self) -> EvalOptions {
        EvalOptions { max_steps: self.max_steps }
    }
}

/// A spec expression, or `@file.json` holding an algebra in JSON form.
pub fn load_algebra(spec: &str, opts: &Options) -> Result<Algebra, CliError> {
    match spec.strip_prefix('@') {
        Some(path) => crate::format::load_algebra_json(&std::fs::read_to_string(path)?),
        None => algebra_from_spec(spec, opts.eval()),
    }
}

pub fn construct(spec: &str, opts: &Options) -> Result<Outcome, CliError> {
    let a = load_algebra(spec, opts)?;
    let q = a.gabriel_quiver();
    let arrows = arrow_list(&q);
    let json = json!({
        "spec": spec,
        "dim": a.dim(),
        "vertices": a.vertex_count(),
        "gabriel_arrows": arrows,
        "cartan": matrix_value(&a.cartan_matrix()),
        "algebra": AlgebraJson::from_algebra(&a),
    });
    let text = format!(
        "{}\ndim {}\nvertices {}\nGabriel arrows {}\n",
        spec,
        a.dim(),
        a.vertex_count(),
        arrows.iter().map(|(s, t)| format!("{}->{}", s, t)).collect::<Vec<_>>().join(" ")
    );
    Ok(Outcome { json, text, dot: Some(quiver_dot(spec, &q)), code: EXIT_POSITIVE })
}

/// One summand `P3`, `I1`, `S2[1]`: the projective, injective or simple
/// module at a 1-based vertex, resolved and shifted.
fn summand(alg: &Algebra, word: &str) -> Result<ProjComplex, CliError> {
    let bad = || CliError::Parse(format!("bad summand `{}`", word));
    let (body, shift) = match word.split_once('[') {
        Some((b, rest)) => {
            let r = rest.strip_suffix(']').ok_or_else(bad)?;
            (b, r.trim().parse::<i32>().map_err(|_| bad())?)
        }
        None => (word, 0),
    };
    let mut chars = body.chars();
    let kind = chars.next().ok_or_else(bad)?;
    let x: usize = chars.as_str().parse().map_err(|_| bad())?;
    if x == 0 || x > alg.vertex_count() {
        return Err(CliError::Parse(format!("vertex {} in `{}` out of range 1..={}", x, word, alg.vertex_count())));
    }
    let v = x - 1;
    let c = match kind {
        'P' => ProjComplex::stalk(vec![v], 0),
        'I' => projective_resolution(alg, &injective_module(alg, v), DEFAULT_MAX_LEN)?,
        'S' => projective_resolution(alg, &simple_module(alg, v), DEFAULT_MAX_LEN)?,
        _ => return Err(bad()),
    };
    Ok(c.shift(shift))
}

/// `P`, `I`, `S` (simples `S_x[x−1]`), `regular`, or a comma-separated list
/// of summands.
pub fn parse_summands(alg: &Algebra, spec: &str) -> Result<Vec<ProjComplex>, CliError> {
    let n = alg.vertex_count();
    let words: Vec<String> = match spec.trim() {
        "P" | "regular" => (1..=n).map(|x| format!("P{}", x)).collect(),
        "I" => (1..=n).map(|x| format!("I{}", x)).collect(),
        "S" => (1..=n).map(|x| format!("S{}[{}]", x, x - 1)).collect(),
        s => s.split(',').map(|w| w.trim().to_string()).collect(),
    };
    words.iter().map(|w| summand(alg, w)).collect()
}

pub fn check_tilting(spec: &str, complex: &str, opts: &Options) -> Result<Outcome, CliError> {
    let a = load_algebra(spec, opts)?;
    let summands = parse_summands(&a, complex)?;
    let c = certify_tilting_within(&a, &summands, opts.hom_range.unwrap_or(0))?;
    let failure = c.failure.map(|(i, j, r, d)| json!({ "i": i + 1, "j": j + 1, "r": r, "dim": d }));
    let k0 = c.k0.as_ref().map(|k| json!({ "matrix": matrix_value(&k.matrix), "unimodular": k.unimodular }));
    let json = json!({
        "spec": spec,
        "summands": complex,
        "exceptional": c.exceptional,
        "hom_table": c.table,
        "failure": failure,
        "k0": k0,
        "k0_unimodular": c.k0_unimodular,
        "verdict": c.verdict.to_string(),
        "tiers": { "exceptionality": "decided", "generation": "necessary condition on K0" },
    });
    let mut text = format!("exceptional: {}\n", c.exceptional);
    if let Some((i, j, r, d)) = c.failure {
        text.push_str(&format!("  Hom(T{}, T{}[{}]) has dimension {}\n", i + 1, j + 1, r, d));
    }
    text.push_str(&format!("K0 unimodular: {}\nverdict: {}\n", c.k0_unimodular, c.verdict));
    let code = if c.verdict == Verdict::CertifiedNecessary { EXIT_POSITIVE } else { EXIT_NEGATIVE };
    Ok(Outcome { json, text, dot: None, code })
}

pub fn compare(specs: &[String], opts: &Options) -> Result<Outcome, CliError> {
    if specs.len() < 2 {
        return Err(CliError::Parse("compare needs at least two algebras".into()));
    }
    let algs = specs.iter().map(|s| load_algebra(s, opts)).collect::<Result<Vec<_>, _>>()?;
    let mut entries = Vec::new();
    let mut pairs = Vec::new();
    let mut text = String::new();
    let mut all = true;
    for i in 0..algs.len() {
        for j in i + 1..algs.len() {
            let p = derived_probe(&algs[i], &algs[j])?;
            if i == 0 && j == 1 {
                entries.push(json!({ "spec": specs[0], "invariants": invariants_value(&p.left) }));
            }
            if i == 0 {
                entries.push(json!({ "spec": specs[j], "invariants": invariants_value(&p.right) }));
            }
            all &= p.consistent();
            text.push_str(&format!("{} vs {}: {}\n", specs[i], specs[j], p.verdict));
            pairs.push(json!({ "left": specs[i], "right": specs[j], "verdict": p.verdict.to_string() }));
        }
    }
    let verdict = if all { "consistent" } else { "distinguished" };
    let json = json!({
        "algebras": entries,
        "pairs": pairs,
        "verdict": verdict,
        "note": "consistent invariants are a necessary condition for derived equivalence, not a proof",
    });
    Ok(Outcome { json, text, dot: None, code: if all { EXIT_POSITIVE } else { EXIT_NEGATIVE } })
}

pub fn knit_command(spec: &str, opts: &Options) -> Result<Outcome, CliError> {
    let a = load_algebra(spec, opts)?;
    let steps = opts.max_steps.unwrap_or_else(|| default_max_steps(&a));
    let d = knit(&a, steps)?;
    let q = ar_quiver(&d)?;
    let orbits: Vec<Vec<Vec<usize>>> =
        d.orbits.iter().map(|o| o.iter().map(|m| m.dimension_vector(&a)).collect()).collect();
    let vertices: Vec<Value> =
        q.vertices.iter().map(|(l, p)| json!({ "dimension_vector": l, "projective": p })).collect();
    let json = json!({
        "spec": spec,
        "count": d.count(),
        "orbit_sizes": d.orbit_sizes(),
        "homogeneous": d.is_homogeneous(),
        "orbits": orbits,
        "ar_quiver": { "vertices": vertices, "arrows": q.arrows },
    });
    let text = format!(
        "{} indecomposables\norbit sizes {:?}\nhomogeneous: {}\n",
        d.count(),
        d.orbit_sizes(),
        d.is_homogeneous()
    );
    Ok(Outcome { json, text, dot: Some(ar_quiver_dot(spec, &q)), code: EXIT_POSITIVE })
}

/// `shifted-simple:N`, `dual-pair:M` or `corrupted-sign`.
pub fn tensor_instance(name: &str) -> Result<TensorTiltingInput, CliError> {
    let bad = || CliError::Parse(format!("unknown tensor instance `{}`", name));
    let (kind, arg) = match name.split_once(':') {
        Some((k, a)) => (k, Some(a.parse::<usize>().map_err(|_| bad())?)),
        None => (name, None),
    };
    Ok(match (kind, arg) {
        ("shifted-simple", Some(n)) => shifted_simple_instance(n)?,
        ("dual-pair", Some(m)) => dual_pair_instance(m)?,
        ("corrupted-sign", None) => corrupted_sign_instance()?,
        _ => return Err(bad()),
    })
}

pub fn verify_tensor(instance: &str, dim_bound: Option<usize>) -> Result<Outcome, CliError> {
    let input = tensor_instance(instance)?;
    let r = verify_construction(&input, dim_bound.unwrap_or(DEFAULT_DIM_BOUND))?;
    let compat = &r.hypotheses.compatibility;
    let json = json!({
        "instance": instance,
        "summands": input.n(),
        "u_verdict": r.hypotheses.u_certificate.verdict.to_string(),
        "compatible": compat.compatible(),
        "compatibility_violation": compat.violation.map(|(i, j, s, d)| json!({ "i": i + 1, "j": j + 1, "r": s, "dim": d })),
        "predicted_cell_dims": r.predicted.cell_dims(),
        "computed_dim": r.computed.as_ref().map(|e| e.algebra.dim()),
        "matches": r.matches,
        "witness": r.witness,
    });
    let mut text = format!("predicted cell dims {:?}\nmatches: {}\n", r.predicted.cell_dims(), r.matches);
    if let Some(w) = &r.witness {
        text.push_str(&format!("witness: {}\n", w));
    }
    Ok(Outcome { json, text, dot: None, code: if r.matches { EXIT_POSITIVE } else { EXIT_NEGATIVE } })
}
