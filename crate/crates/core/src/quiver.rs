//! Finite quivers and the Dynkin diagrams with their orientations.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub label: String,
}

/// A finite quiver on vertices `0..vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for a in &arrows {
            if a.source >= vertex_count || a.target >= vertex_count {
                return Err(Error::InvalidQuiver(format!(
                    "arrow {} has endpoint outside 0..{}",
                    a.label, vertex_count
                )));
            }
            if !seen.insert(a.label.clone()) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow label {}", a.label)));
            }
        }
        Ok(Quiver { vertex_count, arrows })
    }

    /// Quiver from `(source, target)` pairs, labelled `a1, a2, ...`.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let arrows = edges
            .iter()
            .enumerate()
            .map(|(i, &(s, t))| Arrow { source: s, target: t, label: format!("a{}", i + 1) })
            .collect();
        Self::new(vertex_count, arrows)
    }

    /// `1 → 2 → ... → n`.
    pub fn linear(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("linear quiver is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// Number of arrows `x → y`.
    pub fn arrow_count(&self, x: usize, y: usize) -> usize {
        self.arrows.iter().filter(|a| a.source == x && a.target == y).count()
    }

    /// Adjacency multiplicities `m[x][y] = #arrows x → y`.
    pub fn multiplicities(&self) -> Vec<Vec<usize>> {
        let mut m = vec![vec![0; self.vertex_count]; self.vertex_count];
        for a in &self.arrows {
            m[a.source][a.target] += 1;
        }
        m
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// A topological order of the vertices (smallest ready vertex first).
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count;
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut ready: BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    ready.insert(a.target);
                }
            }
        }
        (order.len() == n).then_some(order)
    }
}

/// Simply-laced Dynkin types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

impl DynkinType {
    pub fn new_a(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSize("A_n needs n >= 1".into()));
        }
        Ok(DynkinType::A(n))
    }

    pub fn new_d(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::InvalidSize("D_n needs n >= 4".into()));
        }
        Ok(DynkinType::D(n))
    }

    pub fn new_e(n: usize) -> Result<Self> {
        if !(6..=8).contains(&n) {
            return Err(Error::InvalidSize("E_n needs 6 <= n <= 8".into()));
        }
        Ok(DynkinType::E(n))
    }

    pub fn rank(&self) -> usize {
        match *self {
            DynkinType::A(n) | DynkinType::D(n) | DynkinType::E(n) => n,
        }
    }

    pub fn coxeter_number(&self) -> usize {
        match *self {
            DynkinType::A(n) => n + 1,
            DynkinType::D(n) => 2 * n - 2,
            DynkinType::E(6) => 12,
            DynkinType::E(7) => 18,
            DynkinType::E(_) => 30,
        }
    }

    /// Number of positive roots, i.e. indecomposables of any orientation.
    pub fn positive_roots(&self) -> usize {
        self.rank() * self.coxeter_number() / 2
    }

    /// Undirected edges `(u, v)` with `u < v`, 0-indexed.
    ///
    /// `A_n`: the chain. `D_n`: chain `0..n-2` with `n-2` and `n-1`
    /// attached to `n-3`. `E_n`: chain `0..n-1` with `n-1` attached to `2`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        match *self {
            DynkinType::A(n) => (1..n).map(|i| (i - 1, i)).collect(),
            DynkinType::D(n) => {
                let mut e: Vec<_> = (1..n - 2).map(|i| (i - 1, i)).collect();
                e.push((n - 3, n - 2));
                e.push((n - 3, n - 1));
                e
            }
            DynkinType::E(n) => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
                e.push((2, n - 1));
                e
            }
        }
    }

    /// The diagram automorphism whose invariant orientations are homogeneous.
    pub fn symmetry(&self) -> Vec<usize> {
        match *self {
            DynkinType::A(n) => (0..n).map(|i| n - 1 - i).collect(),
            DynkinType::D(n) if n % 2 == 1 => {
                let mut s: Vec<usize> = (0..n).collect();
                s.swap(n - 2, n - 1);
                s
            }
            DynkinType::D(n) => (0..n).collect(),
            DynkinType::E(6) => vec![4, 3, 2, 1, 0, 5],
            DynkinType::E(n) => (0..n).collect(),
        }
    }

    pub fn name(&self) -> String {
        match *self {
            DynkinType::A(n) => format!("A{}", n),
            DynkinType::D(n) => format!("D{}", n),
            DynkinType::E(n) => format!("E{}", n),
        }
    }

    /// The `n`-th member of the chain `A1, A2, A3, D4, D5, E6, E7, E8`.
    pub fn ade_chain(n: usize) -> Result<Self> {
        match n {
            1..=3 => Ok(DynkinType::A(n)),
            4 | 5 => Ok(DynkinType::D(n)),
            6..=8 => Ok(DynkinType::E(n)),
            _ => Err(Error::InvalidSize(format!("ADE chain has no member {}", n))),
        }
    }
}

/// Orientation of each edge of a Dynkin diagram, in [`DynkinType::edges`] order:
/// `true` orients `(u, v)` as `u → v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orientation(pub Vec<bool>);

impl Orientation {
    /// Every edge from the smaller to the larger vertex index.
    pub fn linear(t: DynkinType) -> Self {
        Orientation(vec![true; t.edges().len()])
    }

    /// Alternating sinks and sources; vertices of even distance from 0 are sources.
    pub fn bipartite(t: DynkinType) -> Self {
        let parity = vertex_parity(t);
        Orientation(t.edges().iter().map(|&(u, _)| parity[u] == 0).collect())
    }

    /// All arrows pointing toward the branch vertex (or the middle of `A_n`).
    pub fn inward(t: DynkinType) -> Self {
        let center = match t {
            DynkinType::A(n) => (n - 1) / 2,
            DynkinType::D(n) => n - 3,
            DynkinType::E(_) => 2,
        };
        let dist = distances(t, center);
        Orientation(t.edges().iter().map(|&(u, v)| dist[u] > dist[v]).collect())
    }

    /// A canonical orientation invariant under [`DynkinType::symmetry`], if any.
    pub fn symmetric(t: DynkinType) -> Option<Self> {
        let o = match t {
            // bipartite orientations of odd chains and of all other trees are invariant
            DynkinType::A(n) if n % 2 == 0 && n > 1 => return None,
            _ => Orientation::bipartite(t),
        };
        o.is_symmetric(t).then_some(o)
    }

    /// Parses a string of `>`/`<` characters, one per edge.
    pub fn parse_arrows(t: DynkinType, s: &str) -> Result<Self> {
        let bits: Result<Vec<bool>> = s
            .chars()
            .map(|c| match c {
                '>' => Ok(true),
                '<' => Ok(false),
                _ => Err(Error::InvalidQuiver(format!("bad orientation character {:?}", c))),
            })
            .collect();
        let bits = bits?;
        if bits.len() != t.edges().len() {
            return Err(Error::InvalidQuiver(format!(
                "{} has {} edges, orientation gives {}",
                t.name(),
                t.edges().len(),
                bits.len()
            )));
        }
        Ok(Orientation(bits))
    }

    pub fn to_arrow_string(&self) -> String {
        self.0.iter().map(|&b| if b { '>' } else { '<' }).collect()
    }

    pub fn all(t: DynkinType) -> Vec<Self> {
        let m = t.edges().len();
        (0..1usize << m).map(|mask| Orientation((0..m).map(|i| mask >> i & 1 == 1).collect())).collect()
    }

    /// Oriented edges as `(source, target)`.
    pub fn directed_edges(&self, t: DynkinType) -> Vec<(usize, usize)> {
        t.edges()
            .iter()
            .zip(&self.0)
            .map(|(&(u, v), &fwd)| if fwd { (u, v) } else { (v, u) })
            .collect()
    }

    pub fn is_symmetric(&self, t: DynkinType) -> bool {
        let sigma = t.symmetry();
        let dir: BTreeSet<(usize, usize)> = self.directed_edges(t).into_iter().collect();
        dir.iter().all(|&(s, e)| dir.contains(&(sigma[s], sigma[e])))
    }
}

fn distances(t: DynkinType, from: usize) -> Vec<usize> {
    let n = t.rank();
    let edges = t.edges();
    let mut dist = vec![usize::MAX; n];
    dist[from] = 0;
    let mut frontier = vec![from];
    while let Some(v) = frontier.pop() {
        for &(a, b) in &edges {
            let w = if a == v { b } else if b == v { a } else { continue };
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                frontier.push(w);
            }
        }
    }
    dist
}

fn vertex_parity(t: DynkinType) -> Vec<usize> {
    distances(t, 0).into_iter().map(|d| d % 2).collect()
}

/// The oriented Dynkin quiver.
pub fn dynkin_quiver(t: DynkinType, o: &Orientation) -> Result<Quiver> {
    if o.0.len() != t.edges().len() {
        return Err(Error::InvalidQuiver("orientation length does not match edge count".into()));
    }
    Quiver::from_edges(t.rank(), &o.directed_edges(t))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quiver_validation() {
        assert!(Quiver::from_edges(2, &[(0, 2)]).is_err());
        let dup = vec![
            Arrow { source: 0, target: 1, label: "a".into() },
            Arrow { source: 1, target: 0, label: "a".into() },
        ];
        assert!(Quiver::new(2, dup).is_err());
        let cyc = Quiver::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(!cyc.is_acyclic());
        assert!(Quiver::linear(4).is_acyclic());
    }

    #[test]
    fn dynkin_shapes() {
        assert_eq!(DynkinType::D(4).edges(), vec![(0, 1), (1, 2), (1, 3)]);
        assert_eq!(DynkinType::E(6).edges().len(), 5);
        assert_eq!(DynkinType::E(8).positive_roots(), 120);
        assert_eq!(DynkinType::D(4).positive_roots(), 12);
    }

    #[test]
    fn symmetric_orientations_exist_as_expected() {
        for n in 1..=8 {
            let t = DynkinType::A(n);
            let count = Orientation::all(t).iter().filter(|o| o.is_symmetric(t)).count();
            if n % 2 == 0 && n > 1 {
                assert_eq!(count, 0, "A{}", n);
            } else {
                assert!(count > 0);
            }
        }
        for t in [DynkinType::D(4), DynkinType::D(6), DynkinType::E(7), DynkinType::E(8)] {
            assert!(Orientation::all(t).iter().all(|o| o.is_symmetric(t)));
        }
        assert!(Orientation::symmetric(DynkinType::E(6)).is_some());
        assert!(Orientation::symmetric(DynkinType::D(5)).is_some());
    }

    #[test]
    fn inward_d4_is_all_in() {
        let o = Orientation::inward(DynkinType::D(4));
        let q = dynkin_quiver(DynkinType::D(4), &o).unwrap();
        assert!(q.arrows().iter().all(|a| a.target == 1));
    }
}
