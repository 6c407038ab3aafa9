//! The comparison map `B(C) → N_hc(C)`.

use std::sync::Arc;

use super::binerve::{binerve, Binerve, Chain};
use super::coherent::{hc_nerve, pairs, CoherentNerve, HcSimplex};
use super::cube::cube;
use crate::category::{comparison_vertex, SimplicialCategory};
use crate::report::ValidationReport;
use crate::sset::{SimplicialMap, SimplicialSet};
use crate::{Error, Result};

/// The simplex `σ' ∘ G` where `σ' : [p]_{Δ^q} → C` is the functor of a
/// binerve cell and `G : C[Δʳ] → [p]_{Δ^q}` sends `k ↦ a_k` and the vertex
/// `S` of `C[Δʳ](i, j)` to `tuple(i, j, S)`.
pub(crate) fn bar_simplex(
    sc: &SimplicialCategory,
    chain: &Chain,
    q: usize,
    a: &[usize],
    tuple: impl Fn(usize, usize, usize) -> Vec<usize>,
) -> HcSimplex {
    let r = a.len() - 1;
    let components = pairs(r).into_iter().map(|(i, j)| bar_component(sc, chain, q, a, i, j, &tuple)).collect();
    HcSimplex::from_parts(a.iter().map(|&k| chain.objects[k]).collect(), components)
}

/// The `(i, j)` component of [`bar_simplex`].
pub(crate) fn bar_component(
    sc: &SimplicialCategory,
    chain: &Chain,
    q: usize,
    a: &[usize],
    i: usize,
    j: usize,
    tuple: &impl Fn(usize, usize, usize) -> Vec<usize>,
) -> Arc<[u32]> {
    let c = cube(j - i);
    let (lo, hi) = (a[i], a[j]);
    if lo == hi {
        let x = chain.objects[lo];
        return c.dims.iter().map(|&d| sc.identity_at(x, d) as u32).collect();
    }
    let tuples: Vec<Vec<usize>> = (0..1usize << (j - i - 1)).map(|m| tuple(i, j, m)).collect();
    let x = &chain.objects;
    c.chains
        .iter()
        .map(|masks| {
            let l = masks.len() - 1;
            // position t of a tuple belongs to the step hi − t → hi − t + 1
            let factor = |s: usize| -> usize {
                let t = hi - s;
                let alpha: Vec<usize> = masks.iter().map(|&m| tuples[m as usize][t]).collect();
                sc.hom(x[s - 1], x[s]).apply(q, chain.cells[s - 1], &alpha)
            };
            let mut acc = factor(lo + 1);
            for s in lo + 2..=hi {
                acc = sc.compose(x[lo], x[s - 1], x[s], l, factor(s), acc);
            }
            acc as u32
        })
        .collect()
}

/// The image of a `k`-cell of `B(C)`, a `(k, k)`-cell of the binerve:
/// precomposition with `f_k`.
pub fn comparison_simplex(sc: &SimplicialCategory, chain: &Chain, k: usize) -> HcSimplex {
    let a: Vec<usize> = (0..=k).collect();
    bar_simplex(sc, chain, k, &a, |i, j, m| comparison_vertex(i, j, m))
}

/// `B(C)`, `N_hc(C)` and the comparison map between them up to level `L`.
#[derive(Clone, Debug)]
pub struct ComparisonMap {
    pub binerve: Binerve,
    pub source: SimplicialSet,
    pub target: CoherentNerve,
    pub map: SimplicialMap,
}

/// Builds the comparison map up to level `L ≤ D`.
pub fn comparison_map(sc: &SimplicialCategory, max_level: usize) -> Result<ComparisonMap> {
    let b = binerve(sc, max_level, max_level)?;
    let source = b.space().diagonal();
    let target = hc_nerve(sc, max_level)?;
    let mut report = ValidationReport::new();
    let mut levels = Vec::with_capacity(max_level + 1);
    for k in 0..=max_level {
        let mut level = Vec::with_capacity(source.size(k));
        for c in 0..source.size(k) {
            let chain = b.chain(k, k, c);
            let s = comparison_simplex(sc, &chain, k);
            match target.find(&s) {
                Some(t) => level.push(t),
                None => {
                    report.absorb(&format!("image of cell ({k}, {c})"), s.validate(sc));
                    report.push("comparison", format!("cell ({k}, {c})"), "image is not a simplex of the coherent nerve");
                    level.push(0);
                }
            }
        }
        levels.push(level);
    }
    if !report.is_ok() {
        return Err(Error::Invalid { kind: "comparison map", report });
    }
    Ok(ComparisonMap {
        binerve: b,
        source,
        target,
        map: SimplicialMap::new(levels),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::FiniteCategory;
    use crate::sset::FinitePoset;

    #[test]
    fn bg_z2_fibers() {
        let sc = SimplicialCategory::bg(&FiniteCategory::cyclic(2), 2).unwrap();
        let cm = comparison_map(&sc, 2).unwrap();
        assert!(cm.map.validate(&cm.source, &cm.target.set).is_ok());
        assert_eq!(cm.map.levels()[1], vec![0, 0]);
        let mut fibers = vec![0; cm.target.set.size(2)];
        for &t in &cm.map.levels()[2] {
            fibers[t] += 1;
        }
        assert_eq!(fibers, vec![8, 8]);
    }

    #[test]
    fn discrete_is_identity_shaped() {
        let c = FiniteCategory::poset(&FinitePoset::chain(2));
        let sc = SimplicialCategory::discrete(&c, 3);
        let cm = comparison_map(&sc, 3).unwrap();
        assert_eq!(cm.source.sizes(), cm.target.set.sizes());
        assert!(cm.map.is_isomorphism(&cm.target.set));
    }
}
