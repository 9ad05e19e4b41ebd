//! JSON and Graphviz DOT encodings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use tilting::algebra::Algebra;
use tilting::ar::ARQuiver;
use tilting::invariants::InvariantSummary;
use tilting::quiver::Quiver;
use tilting::{Matrix, Polynomial, Scalar};

use crate::error::CliError;

/// Integers as JSON numbers when they fit in `i64`, everything else as text.
pub fn scalar_value(s: &Scalar) -> Value {
    match s.to_i64() {
        Some(n) => Value::from(n),
        None => Value::from(s.to_string()),
    }
}

pub fn matrix_value(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(scalar_value).collect())).collect())
}

/// Coefficients in increasing degree.
pub fn polynomial_value(p: &Polynomial) -> Value {
    Value::Array(p.coeffs().iter().map(scalar_value).collect())
}

/// An algebra on a fixed basis: `mult` lists `(a, b, c, coeff)` with
/// `basis[a]·basis[b]` having coefficient `coeff` at `basis[c]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub basis: Vec<String>,
    pub unit: Vec<String>,
    pub idempotents: Vec<usize>,
    pub mult: Vec<(usize, usize, usize, String)>,
}

impl AlgebraJson {
    pub fn from_algebra(a: &Algebra) -> Self {
        AlgebraJson {
            basis: a.labels().to_vec(),
            unit: a.unit().iter().map(Scalar::to_string).collect(),
            idempotents: a.idempotents().to_vec(),
            mult: a.structure_triples().into_iter().map(|(x, y, z, c)| (x, y, z, c.to_string())).collect(),
        }
    }

    pub fn to_algebra(&self) -> Result<Algebra, CliError> {
        let parse = |s: &str| s.parse::<Scalar>().map_err(|e| CliError::Format(e.to_string()));
        let triples = self
            .mult
            .iter()
            .map(|(a, b, c, v)| Ok((*a, *b, *c, parse(v)?)))
            .collect::<Result<Vec<_>, CliError>>()?;
        let alg = Algebra::from_triples(self.basis.clone(), self.idempotents.clone(), &triples)?;
        let unit = self.unit.iter().map(|s| parse(s)).collect::<Result<Vec<_>, CliError>>()?;
        if unit != alg.unit() {
            return Err(CliError::Format("unit is not the sum of the idempotents".into()));
        }
        Ok(alg)
    }
}

pub fn load_algebra_json(text: &str) -> Result<Algebra, CliError> {
    let v: Value = serde_json::from_str(text)?;
    // accept either a bare algebra or the output of `construct`
    let inner = v.get("algebra").cloned().unwrap_or(v);
    let a: AlgebraJson = serde_json::from_value(inner)?;
    a.to_algebra()
}

pub fn invariants_value(s: &InvariantSummary) -> Value {
    serde_json::json!({
        "rank": s.rank,
        "det_cartan": scalar_value(&s.det_cartan),
        "coxeter_poly": polynomial_value(&s.coxeter_poly),
    })
}

/// Gabriel arrows as 1-based `(source, target)` pairs.
pub fn arrow_list(q: &Quiver) -> Vec<(usize, usize)> {
    q.arrows().iter().map(|a| (a.source + 1, a.target + 1)).collect()
}

pub fn quiver_dot(name: &str, q: &Quiver) -> String {
    let mut s = String::new();
    writeln!(s, "digraph {} {{", dot_id(name)).unwrap();
    writeln!(s, "  rankdir=LR;").unwrap();
    for v in 0..q.vertex_count() {
        writeln!(s, "  {};", v + 1).unwrap();
    }
    for (a, b) in arrow_list(q) {
        writeln!(s, "  {} -> {};", a, b).unwrap();
    }
    s.push_str("}\n");
    s
}

/// Projectives are drawn as boxes.
pub fn ar_quiver_dot(name: &str, q: &ARQuiver) -> String {
    let mut s = String::new();
    writeln!(s, "digraph {} {{", dot_id(name)).unwrap();
    writeln!(s, "  rankdir=LR;").unwrap();
    for (i, (label, proj)) in q.vertices.iter().enumerate() {
        let shape = if *proj { "box" } else { "ellipse" };
        writeln!(s, "  m{} [label=\"{}\", shape={}];", i, label, shape).unwrap();
    }
    for (a, b) in &q.arrows {
        writeln!(s, "  m{} -> m{};", a, b).unwrap();
    }
    s.push_str("}\n");
    s
}

fn dot_id(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

#[cfg(test)]
mod tests {
    use super::*;
    use tilting::algebra::{linear_path_algebra, truncated_line_algebra};

    #[test]
    fn json_round_trip() {
        for a in [linear_path_algebra(3).unwrap(), truncated_line_algebra(5, 2).unwrap(), Algebra::field()] {
            let text = serde_json::to_string(&AlgebraJson::from_algebra(&a)).unwrap();
            let b = load_algebra_json(&text).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn bad_unit_rejected() {
        let mut j = AlgebraJson::from_algebra(&linear_path_algebra(2).unwrap());
        j.unit[0] = "2".into();
        assert!(j.to_algebra().is_err());
    }

    #[test]
    fn dot_lists_arrows() {
        let q = linear_path_algebra(3).unwrap().gabriel_quiver();
        let d = quiver_dot("A3", &q);
        assert!(d.starts_with("digraph \"A3\" {"));
        assert_eq!(d.matches("->").count(), 2);
    }
}
