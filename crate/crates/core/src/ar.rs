//! Auslander–Reiten theory for representation-finite hereditary algebras:
//! τ⁻-orbits of projectives, Auslander and stable Auslander algebras.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Elem, GeneralizedMatrixRing};
use crate::error::{Error, Result};
use crate::linalg::{greedy_complement, kernel_vectors, Matrix, SpanReducer, Subspace};
use crate::module::{hom_space, is_indecomposable, is_isomorphic, projective_module, Module};
use crate::resolution::{is_hereditary, tau_inverse_unchecked};
use crate::scalar::Scalar;

/// The preprojective component, as the τ⁻-orbits of the indecomposable projectives.
#[derive(Clone, Debug)]
pub struct ARData {
    pub algebra: Algebra,
    /// `orbits[x] = [P_x, τ⁻P_x, ..., τ^{−r_x}P_x]`.
    pub orbits: Vec<Vec<Module>>,
}

impl ARData {
    /// `r_x` for every vertex.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o.len() - 1).collect()
    }

    /// `(x, i)` for every indecomposable `τ^{−i}P_x`, orbit by orbit.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        self.orbits.iter().enumerate().flat_map(|(x, o)| (0..o.len()).map(move |i| (x, i))).collect()
    }

    pub fn indecomposables(&self) -> Vec<Module> {
        self.orbits.iter().flatten().cloned().collect()
    }

    pub fn count(&self) -> usize {
        self.orbits.iter().map(Vec::len).sum()
    }

    pub fn is_homogeneous(&self) -> bool {
        let r = self.orbit_sizes();
        r.windows(2).all(|w| w[0] == w[1])
    }
}

/// Default per-orbit step bound, `2·(vertices + Gabriel arrows)`.
pub fn default_max_steps(alg: &Algebra) -> usize {
    let q = alg.gabriel_quiver();
    2 * (q.vertex_count() + q.arrows().len())
}

/// Iterates τ⁻ on each `P_x` until it vanishes.
pub fn knit(alg: &Algebra, max_steps: usize) -> Result<ARData> {
    if !is_hereditary(alg)? {
        return Err(Error::NotHereditary);
    }
    let mut orbits: Vec<Vec<Module>> = Vec::with_capacity(alg.vertex_count());
    for x in 0..alg.vertex_count() {
        let mut orbit = vec![projective_module(alg, x)];
        loop {
            let next = tau_inverse_unchecked(alg, orbit.last().unwrap())?;
            if next.is_zero() {
                break;
            }
            if orbit.len() > max_steps {
                return Err(Error::StepLimit { max_steps });
            }
            if !is_indecomposable(alg, &next)? {
                return Err(Error::NotIndecomposable(format!("τ^-{} P_{}", orbit.len(), x + 1)));
            }
            orbit.push(next);
        }
        orbits.push(orbit);
    }
    let all: Vec<(&Module, Vec<usize>)> =
        orbits.iter().flatten().map(|m| (m, m.dimension_vector(alg))).collect();
    for i in 0..all.len() {
        for j in 0..i {
            if all[i].1 == all[j].1 && is_isomorphic(alg, all[i].0, all[j].0)? {
                return Err(Error::NotIndecomposable(format!("indecomposables {} and {} are isomorphic", j + 1, i + 1)));
            }
        }
    }
    Ok(ARData { algebra: alg.clone(), orbits })
}

/// Whether all `r_x` agree, together with the `r_x`.
pub fn is_homogeneous(alg: &Algebra, max_steps: usize) -> Result<(bool, Vec<usize>)> {
    let d = knit(alg, max_steps)?;
    Ok((d.is_homogeneous(), d.orbit_sizes()))
}

fn flatten(m: &Matrix) -> Vec<Scalar> {
    m.data().to_vec()
}

struct Cell {
    reps: Vec<Matrix>,
    reducer: Option<SpanReducer>,
}

impl Cell {
    fn coords(&self, f: &Matrix) -> Result<Elem> {
        let Some(r) = &self.reducer else {
            return Ok(Vec::new());
        };
        let c = r
            .coordinates(&flatten(f))
            .ok_or_else(|| Error::InvalidModule("composite is not a homomorphism".into()))?;
        Ok(c.into_iter().take(self.reps.len()).enumerate().filter(|(_, x)| !x.is_zero()).collect())
    }
}

/// `End(M_1 ⊕ ... ⊕ M_n)` for pairwise non-isomorphic indecomposables, with
/// cell `(i, j) = Hom(M_j, M_i)`; if `stable`, each cell is taken modulo the
/// maps factoring through a projective.
pub fn module_end_grid(alg: &Algebra, modules: &[Module], stable: bool) -> Result<GeneralizedMatrixRing> {
    let n = modules.len();
    let v = alg.vertex_count();
    let (to_proj, from_proj) = if stable {
        let projs: Vec<Module> = (0..v).map(|x| projective_module(alg, x)).collect();
        let to: Vec<Vec<Vec<Matrix>>> = modules
            .iter()
            .map(|m| projs.iter().map(|p| hom_space(alg, m, p)).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        let from: Vec<Vec<Vec<Matrix>>> = projs
            .iter()
            .map(|p| modules.iter().map(|m| hom_space(alg, p, m)).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        (to, from)
    } else {
        (Vec::new(), Vec::new())
    };
    let mut cells: Vec<Vec<Cell>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let (mi, mj) = (&modules[i], &modules[j]);
            let homs = hom_space(alg, mj, mi)?;
            let len = mj.dim() * mi.dim();
            let mut trivial = Subspace::zero(len);
            if stable {
                for x in 0..v {
                    for a in &to_proj[j][x] {
                        for b in &from_proj[x][i] {
                            trivial.insert(&flatten(&a.mul(b)?));
                        }
                    }
                }
            }
            let reps: Vec<Matrix> = if i == j {
                let id = Matrix::identity(mi.dim());
                if trivial.contains(&flatten(&id)) {
                    return Err(Error::Precondition(format!("module {} is projective", i + 1)));
                }
                // identity, then a complement of k·id ⊕ trivial inside the trace-zero part
                let traces = Matrix::from_rows(vec![homs
                    .iter()
                    .map(|h| (0..h.rows()).fold(Scalar::zero(), |t, k| &t + &h[(k, k)]))
                    .collect()])?;
                let rad: Vec<Matrix> = kernel_vectors(&traces)
                    .into_iter()
                    .map(|c| {
                        c.iter().zip(&homs).fold(Matrix::zeros(mi.dim(), mi.dim()), |acc, (x, h)| {
                            acc.add(&h.scale(x)).expect("same shape")
                        })
                    })
                    .collect();
                let mut base = trivial.clone();
                base.insert(&flatten(&id));
                let cand: Vec<Vec<Scalar>> = rad.iter().map(flatten).collect();
                let mut reps = vec![id];
                reps.extend(greedy_complement(&base, &cand).into_iter().map(|k| rad[k].clone()));
                reps
            } else {
                let cand: Vec<Vec<Scalar>> = homs.iter().map(flatten).collect();
                greedy_complement(&trivial, &cand).into_iter().map(|k| homs[k].clone()).collect()
            };
            let reducer = if len == 0 {
                None
            } else {
                let mut family: Vec<Vec<Scalar>> = reps.iter().map(flatten).collect();
                family.extend(trivial.basis().iter().cloned());
                Some(SpanReducer::new(len, &family)?)
            };
            row.push(Cell { reps, reducer });
        }
        cells.push(row);
    }
    let labels = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..cells[i][j].reps.len())
                        .map(|k| if i == j && k == 0 { format!("1_{}", i + 1) } else { format!("m{},{}.{}", i + 1, j + 1, k + 1) })
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut g = GeneralizedMatrixRing::new(labels, vec![vec![0]; n])?;
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let (fs, gs) = (&cells[i][j].reps, &cells[j][l].reps);
                if fs.is_empty() || gs.is_empty() {
                    continue;
                }
                let mut table = Vec::with_capacity(fs.len() * gs.len());
                for f in fs {
                    for h in gs {
                        table.push(cells[i][l].coords(&h.mul(f)?)?);
                    }
                }
                g.set_products(i, j, l, table)?;
            }
        }
    }
    Ok(g)
}

pub fn module_end_algebra(alg: &Algebra, modules: &[Module], stable: bool) -> Result<Algebra> {
    module_end_grid(alg, modules, stable)?.to_algebra()
}

/// `End(A ⊕ τ⁻A ⊕ ... ⊕ τ^{−r}A)`.
pub fn initial_endomorphism_algebra(alg: &Algebra, r: usize, max_steps: usize) -> Result<Algebra> {
    let d = knit(alg, max_steps)?;
    for (x, o) in d.orbits.iter().enumerate() {
        if o.len() <= r {
            return Err(Error::Precondition(format!("τ^-{} P_{} = 0", r, x + 1)));
        }
    }
    let modules: Vec<Module> = (0..=r).flat_map(|i| d.orbits.iter().map(move |o| o[i].clone())).collect();
    module_end_algebra(alg, &modules, false)
}

pub fn auslander_algebra(alg: &Algebra, max_steps: usize) -> Result<Algebra> {
    let d = knit(alg, max_steps)?;
    module_end_algebra(alg, &d.indecomposables(), false)
}

/// `End` of the non-projective indecomposables modulo maps factoring through projectives.
pub fn stable_auslander_algebra(alg: &Algebra, max_steps: usize) -> Result<Algebra> {
    let d = knit(alg, max_steps)?;
    let modules: Vec<Module> = d.orbits.iter().flat_map(|o| o[1..].iter().cloned()).collect();
    if modules.is_empty() {
        return Err(Error::Precondition("every indecomposable is projective".into()));
    }
    module_end_algebra(alg, &modules, true)
}

/// The AR quiver: vertices are the indecomposables in [`ARData::positions`]
/// order, arrows the irreducible maps read off the Auslander algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ARQuiver {
    /// `(label, projective)`, label the dimension vector.
    pub vertices: Vec<(String, bool)>,
    /// `(source, target)` of irreducible maps, with multiplicity.
    pub arrows: Vec<(usize, usize)>,
}

pub fn ar_quiver(data: &ARData) -> Result<ARQuiver> {
    let alg = &data.algebra;
    let modules = data.indecomposables();
    let aus = module_end_algebra(alg, &modules, false)?;
    let q = aus.gabriel_quiver();
    let vertices = data
        .positions()
        .into_iter()
        .zip(&modules)
        .map(|((_, i), m)| {
            let dv = m.dimension_vector(alg);
            let parts: Vec<String> = dv.iter().map(|d| format!("{}", d)).collect();
            let sep = if dv.iter().all(|&d| d < 10) { "" } else { "," };
            (parts.join(sep), i == 0)
        })
        .collect();
    // an element of e_i·Aus·e_j is a map M_j → M_i
    let arrows = q.arrows().iter().map(|a| (a.target, a.source)).collect();
    Ok(ARQuiver { vertices, arrows })
}
