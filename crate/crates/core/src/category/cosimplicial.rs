//! The cosimplicial objects `C[Δ•]` and `B[Δ•]`, the comparison functors
//! `f_n : C[Δⁿ] → B[Δⁿ]`, and the composite `χ ∘ C[τ]`.
//!
//! All functors here are determined by what they do on vertices: the homs
//! involved are nerves of posets (cubes and products of chains), so a
//! simplicial map between them is the nerve of a monotone map.

use std::collections::HashMap;

use super::simplicial::{frak_b, frak_c, SimplicialCategory, SimplicialFunctor};
use crate::report::ValidationReport;
use crate::sset::{poset_nerve_labeled, standard_simplex_labeled, FinitePoset, SimplicialMap};
use crate::{Error, Result};

/// Elements of the subset of `{i..=j}` with middle-element mask `mask`.
pub fn subset_of(i: usize, j: usize, mask: usize) -> Vec<usize> {
    let mut s = vec![i];
    for t in 1..j.saturating_sub(i) {
        if mask >> (t - 1) & 1 == 1 {
            s.push(i + t);
        }
    }
    if j > i {
        s.push(j);
    }
    s
}

/// Middle-element mask of a subset of `{i..=j}` containing `i` and `j`.
pub fn mask_of(i: usize, j: usize, subset: &[usize]) -> usize {
    subset
        .iter()
        .filter(|&&e| e > i && e < j)
        .fold(0, |m, &e| m | 1 << (e - i - 1))
}

/// Componentwise order on tuples.
pub fn tuple_leq(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
}

/// The value of `f_n` on the vertex `S = {i = i_0 < ⋯ < i_m = j}` of
/// `C[Δⁿ](i, j)`: each `i_{t−1}` repeated `i_t − i_{t−1}` times, steps listed
/// from the top down.
pub fn comparison_vertex(i: usize, j: usize, mask: usize) -> Vec<usize> {
    let s = subset_of(i, j, mask);
    let mut out = Vec::with_capacity(j - i);
    for t in (1..s.len()).rev() {
        for _ in s[t - 1]..s[t] {
            out.push(s[t - 1]);
        }
    }
    out
}

/// A functor `C[Δⁿ] → [p]_{Δᵐ}` recorded on vertices: an object map and, for
/// each `i < j`, a tuple in `[m]^(g(j) − g(i))` for every vertex of
/// `C[Δⁿ](i, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct CubeFunctor {
    pub n: usize,
    /// Target objects are `0..=p`.
    pub p: usize,
    /// Tuple entries lie in `[m]`.
    pub m: usize,
    pub objects: Vec<usize>,
    /// `values[i * (n + 1) + j][mask]` for `i < j`; empty otherwise.
    pub values: Vec<Vec<Vec<usize>>>,
}

impl CubeFunctor {
    /// `f_n`.
    pub fn comparison(n: usize) -> Self {
        let objs = n + 1;
        let values = (0..objs * objs)
            .map(|p| {
                let (i, j) = (p / objs, p % objs);
                if i >= j {
                    return Vec::new();
                }
                (0..1usize << (j - i - 1)).map(|mask| comparison_vertex(i, j, mask)).collect()
            })
            .collect();
        CubeFunctor {
            n,
            p: n,
            m: n,
            objects: (0..=n).collect(),
            values,
        }
    }

    pub fn value(&self, i: usize, j: usize, mask: usize) -> &[usize] {
        &self.values[i * (self.n + 1) + j][mask]
    }

    /// Value on a vertex of `C[Δⁿ](i, j)` for any `i ≤ j`, identities giving
    /// the empty tuple.
    pub fn value_or_identity(&self, i: usize, j: usize, mask: usize) -> Vec<usize> {
        if i == j {
            Vec::new()
        } else {
            self.value(i, j, mask).to_vec()
        }
    }

    /// Monotonicity on every hom and compatibility with composition.
    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        let n = self.n;
        if self.objects.len() != n + 1 || self.objects.windows(2).any(|w| w[0] > w[1]) || self.objects.iter().any(|&o| o > self.p) {
            r.push("objects", "object map", "not a monotone map into the target objects");
            return r;
        }
        for i in 0..=n {
            for j in i + 1..=n {
                let width = self.objects[j] - self.objects[i];
                let vals = &self.values[i * (n + 1) + j];
                if vals.len() != 1 << (j - i - 1) || vals.iter().any(|t| t.len() != width || t.iter().any(|&v| v > self.m)) {
                    r.push("shape", format!("hom({i},{j})"), "values have the wrong shape");
                    continue;
                }
                for a in 0..vals.len() {
                    for b in 0..vals.len() {
                        if a & !b == 0 && !tuple_leq(&vals[a], &vals[b]) {
                            r.push(
                                "monotone",
                                format!("hom({i},{j})"),
                                format!("{:?} ⊂ {:?} but {:?} ≰ {:?}", subset_of(i, j, a), subset_of(i, j, b), vals[a], vals[b]),
                            );
                        }
                    }
                }
            }
        }
        if !r.is_ok() {
            return r;
        }
        for i in 0..=n {
            for k in i + 1..=n {
                for j in k + 1..=n {
                    for lo in 0..1usize << (k - i - 1) {
                        for hi in 0..1usize << (j - k - 1) {
                            let union = lo | 1 << (k - i - 1) | hi << (k - i);
                            let mut cat = self.value(k, j, hi).to_vec();
                            cat.extend_from_slice(self.value(i, k, lo));
                            if self.value(i, j, union) != cat.as_slice() {
                                r.push(
                                    "composition",
                                    format!("objects ({i},{k},{j})"),
                                    format!("{:?} ↦ {:?}, expected {:?}", subset_of(i, j, union), self.value(i, j, union), cat),
                                );
                            }
                        }
                    }
                }
            }
        }
        r
    }

    /// The simplicial functor `C[Δⁿ] → B[Δᵐ]` obtained by applying the
    /// nerve to each hom.
    pub fn to_simplicial(&self, dim: usize) -> Result<SimplicialFunctor> {
        let r = self.validate();
        if !r.is_ok() {
            return Err(Error::Invalid { kind: "cube functor", report: r });
        }
        let simplex = standard_simplex_labeled(self.m, dim);
        let objs = self.n + 1;
        let mut homs = Vec::with_capacity(objs * objs);
        for p in 0..objs * objs {
            let (i, j) = (p / objs, p % objs);
            let levels = if i > j {
                vec![Vec::new(); dim + 1]
            } else if i == j {
                // hom(o, o) of B[Δᵐ] is the point
                vec![vec![0]; dim + 1]
            } else {
                let cube = poset_nerve_labeled(&FinitePoset::cube(j - i), dim);
                (0..=dim)
                    .map(|l| {
                        cube.labels[l]
                            .iter()
                            .map(|chain| {
                                let tuples: Vec<&[usize]> = chain.iter().map(|&mask| self.value(i, j, mask)).collect();
                                tuple_chain_cell(&simplex, l, &tuples)
                            })
                            .collect()
                    })
                    .collect()
            };
            homs.push(SimplicialMap::new(levels));
        }
        Ok(SimplicialFunctor {
            objects: self.objects.clone(),
            homs,
        })
    }
}

/// Index in `(Δᵐ)^w` of the level-`l` cell given by a chain of `l + 1`
/// tuples (first factor most significant).
pub(crate) fn tuple_chain_cell(simplex: &crate::sset::LabeledSet<Vec<usize>>, l: usize, tuples: &[&[usize]]) -> usize {
    let width = tuples.first().map_or(0, |t| t.len());
    let size = simplex.set.size(l);
    let mut idx = 0;
    for p in 0..width {
        let seq: Vec<usize> = tuples.iter().map(|t| t[p]).collect();
        idx = idx * size + simplex.index[l][&seq];
    }
    idx
}

/// `C[f]` on a vertex: the image of the subset `S ⊆ {i..=j}` under `f`,
/// as `(f(i), f(j), mask)`.
pub fn frak_c_vertex(f: &[usize], i: usize, j: usize, mask: usize) -> (usize, usize, usize) {
    let img: Vec<usize> = subset_of(i, j, mask).iter().map(|&e| f[e]).collect();
    (f[i], f[j], mask_of(f[i], f[j], &img))
}

/// `B[f]` on a vertex of `B[Δᵃ](i, j)`: each step `k` with entry `y`
/// becomes `f(y)` repeated `f(k) − f(k−1)` times.
pub fn bar_vertex(f: &[usize], j: usize, tuple: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for (p, &y) in tuple.iter().enumerate() {
        let k = j - p;
        for _ in f[k - 1]..f[k] {
            out.push(f[y]);
        }
    }
    out
}

fn check_monotone(f: &[usize], b: usize) -> Result<()> {
    if f.windows(2).any(|w| w[0] > w[1]) || f.iter().any(|&v| v > b) {
        return Err(Error::NotMonotone(format!("{f:?} as a map into [{b}]")));
    }
    Ok(())
}

/// `C[f] : C[Δᵃ] → C[Δᵇ]` for monotone `f : [a] → [b]`.
pub fn frak_c_map(f: &[usize], b: usize, dim: usize) -> Result<SimplicialFunctor> {
    check_monotone(f, b)?;
    let a = f.len() - 1;
    let objs = a + 1;
    let target = frak_c(b, dim);
    let nerves: HashMap<usize, crate::sset::LabeledSet<Vec<usize>>> =
        (1..=a.max(b)).map(|g| (g, poset_nerve_labeled(&FinitePoset::cube(g), dim))).collect();
    let mut homs = Vec::with_capacity(objs * objs);
    for p in 0..objs * objs {
        let (i, j) = (p / objs, p % objs);
        let levels = if i > j {
            vec![Vec::new(); dim + 1]
        } else if i == j || f[i] == f[j] {
            (0..=dim)
                .map(|l| {
                    let count = if i == j { 1 } else { nerves[&(j - i)].set.size(l) };
                    vec![target.identity_at(f[i], l); count]
                })
                .collect()
        } else {
            let (src, tgt) = (&nerves[&(j - i)], &nerves[&(f[j] - f[i])]);
            (0..=dim)
                .map(|l| {
                    src.labels[l]
                        .iter()
                        .map(|chain| {
                            let img: Vec<usize> = chain.iter().map(|&m| frak_c_vertex(f, i, j, m).2).collect();
                            tgt.index[l][&img]
                        })
                        .collect()
                })
                .collect()
        };
        homs.push(SimplicialMap::new(levels));
    }
    Ok(SimplicialFunctor {
        objects: f.to_vec(),
        homs,
    })
}

/// `B[f] : B[Δᵃ] → B[Δᵇ]` for monotone `f : [a] → [b]`.
pub fn bar_map(f: &[usize], b: usize, dim: usize) -> Result<SimplicialFunctor> {
    check_monotone(f, b)?;
    let a = f.len() - 1;
    let objs = a + 1;
    let src_simplex = standard_simplex_labeled(a, dim);
    let tgt_simplex = standard_simplex_labeled(b, dim);
    let mut homs = Vec::with_capacity(objs * objs);
    for p in 0..objs * objs {
        let (i, j) = (p / objs, p % objs);
        let levels = (0..=dim)
            .map(|l| {
                let count = if i > j { 0 } else { src_simplex.set.size(l).pow((j - i) as u32) };
                (0..count)
                    .map(|c| {
                        // decode the tuple of level-l cells of Δᵃ
                        let width = j - i;
                        let size = src_simplex.set.size(l);
                        let mut rest = c;
                        let mut cells = vec![0; width];
                        for q in (0..width).rev() {
                            cells[q] = rest % size;
                            rest /= size;
                        }
                        let seqs: Vec<&Vec<usize>> = cells.iter().map(|&x| &src_simplex.labels[l][x]).collect();
                        let tuples: Vec<Vec<usize>> = (0..=l)
                            .map(|u| {
                                let t: Vec<usize> = seqs.iter().map(|s| s[u]).collect();
                                bar_vertex(f, j, &t)
                            })
                            .collect();
                        let refs: Vec<&[usize]> = tuples.iter().map(Vec::as_slice).collect();
                        tuple_chain_cell(&tgt_simplex, l, &refs)
                    })
                    .collect()
            })
            .collect();
        homs.push(SimplicialMap::new(levels));
    }
    Ok(SimplicialFunctor {
        objects: f.to_vec(),
        homs,
    })
}

/// The composite `χ ∘ C[τ] : C[Δʳ] → [p]_{Δ^q}` for an `r`-cell `τ` of
/// `Δᵖ × Δ^q`, given as a weakly increasing chain of pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiComposite {
    pub p: usize,
    pub q: usize,
    pub tau: Vec<(usize, usize)>,
}

impl ChiComposite {
    pub fn new(p: usize, q: usize, tau: Vec<(usize, usize)>) -> Result<Self> {
        if tau.is_empty() || tau.iter().any(|&(a, b)| a > p || b > q) {
            return Err(Error::Malformed(format!("{tau:?} is not a cell of Δ^{p} × Δ^{q}")));
        }
        if tau.windows(2).any(|w| w[0].0 > w[1].0 || w[0].1 > w[1].1) {
            return Err(Error::NotMonotone(format!("{tau:?}")));
        }
        Ok(ChiComposite { p, q, tau })
    }

    pub fn level(&self) -> usize {
        self.tau.len() - 1
    }

    /// `χ(τ(k)) = a_k`.
    pub fn object(&self, k: usize) -> usize {
        self.tau[k].0
    }

    /// The tuple assigned to the vertex `S` (mask relative to `i`) of
    /// `C[Δʳ](i, j)`: for `a_i < π ≤ a_j`, from the top down,
    /// `max { b : (a, b) ∈ τ(S), a < π }`.
    pub fn hom_vertex(&self, i: usize, j: usize, mask: usize) -> Vec<usize> {
        let s = subset_of(i, j, mask);
        let (lo, hi) = (self.tau[i].0, self.tau[j].0);
        (lo + 1..=hi)
            .rev()
            .map(|pi| {
                s.iter()
                    .map(|&e| self.tau[e])
                    .filter(|&(a, _)| a < pi)
                    .map(|(_, b)| b)
                    .max()
                    .expect("τ(i) has first coordinate below π")
            })
            .collect()
    }

    /// The composite as a [`CubeFunctor`] into `[p]_{Δ^q}` (recorded with
    /// `m = q`).
    pub fn as_cube_functor(&self) -> CubeFunctor {
        let r = self.level();
        let objs = r + 1;
        CubeFunctor {
            n: r,
            p: self.p,
            m: self.q,
            objects: (0..=r).map(|k| self.object(k)).collect(),
            values: (0..objs * objs)
                .map(|pr| {
                    let (i, j) = (pr / objs, pr % objs);
                    if i >= j {
                        return Vec::new();
                    }
                    (0..1usize << (j - i - 1)).map(|m| self.hom_vertex(i, j, m)).collect()
                })
                .collect(),
        }
    }
}

/// `C[Δⁿ]`, `B[Δⁿ]`, and `f_n` as a simplicial functor between them.
pub fn comparison_functor(n: usize, dim: usize) -> (SimplicialCategory, SimplicialCategory, SimplicialFunctor) {
    let f = CubeFunctor::comparison(n).to_simplicial(dim).expect("f_n is a functor");
    (frak_c(n, dim), frak_b(n, dim), f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displayed_values() {
        assert_eq!(comparison_vertex(0, 1, 0), vec![0]);
        assert_eq!(comparison_vertex(0, 2, 0), vec![0, 0]);
        assert_eq!(comparison_vertex(0, 2, 1), vec![1, 0]);
        assert!(tuple_leq(&[0, 0], &[1, 0]));
    }

    #[test]
    fn comparison_is_functor() {
        for n in 0..=4 {
            let f = CubeFunctor::comparison(n);
            assert!(f.validate().is_ok(), "f_{n}: {}", f.validate());
        }
    }

    #[test]
    fn chi_example() {
        let chi = ChiComposite::new(2, 1, vec![(0, 0), (1, 1), (2, 1)]).unwrap();
        // S is the full subset {0, 1, 2}: middle element 1 present
        assert_eq!(chi.hom_vertex(0, 2, 1), vec![1, 0]);
        assert!(ChiComposite::new(2, 1, vec![(1, 0), (0, 1)]).is_err());
        assert!(chi.as_cube_functor().validate().is_ok());
    }

    #[test]
    fn chi_with_point_factor_is_projection() {
        let chi = ChiComposite::new(3, 0, vec![(0, 0), (1, 0), (3, 0)]).unwrap();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            for m in 0..1usize << (j - i - 1) {
                assert!(chi.hom_vertex(i, j, m).iter().all(|&v| v == 0));
                assert_eq!(chi.hom_vertex(i, j, m).len(), chi.object(j) - chi.object(i));
            }
        }
    }
}
