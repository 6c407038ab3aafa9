//! The homotopy coherent nerve.
//!
//! An `n`-simplex is a simplicial functor `C[Δⁿ] → C`. It is stored as the
//! object sequence together with, for each `i < j`, the images of the strict
//! chains of `P_{i,j}` (a copy of `P_{0,j−i}`); degenerate chains are
//! recovered by degeneracies. Pairs are kept gap-major: `(0,1), (1,2), …,
//! (0,2), …`.

use std::borrow::Cow;
use std::collections::HashMap;
use std::sync::Arc;

use super::cube::{cube, MAX_GAP};
use crate::category::{RelativeSimplicialCategory, SimplicialCategory};
use crate::report::ValidationReport;
use crate::sset::{BoundaryIndex, MapSearch, MarkedSimplicialSet, SimplicialSet};
use crate::{Error, Result};

/// Position of the pair `(i, j)`, `i < j ≤ n`, in gap-major order.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    let g = j - i;
    (1..g).map(|h| n + 1 - h).sum::<usize>() + i
}

/// All pairs `i < j ≤ n` in gap-major order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|g| (0..=n - g).map(move |i| (i, i + g))).collect()
}

/// An `n`-simplex of the homotopy coherent nerve.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HcSimplex {
    objects: Vec<usize>,
    components: Vec<Arc<[u32]>>,
}

impl HcSimplex {
    pub fn vertex(x: usize) -> Self {
        HcSimplex {
            objects: vec![x],
            components: Vec::new(),
        }
    }

    /// Raw constructor; see [`HcSimplex::validate`].
    pub fn from_parts(objects: Vec<usize>, components: Vec<Arc<[u32]>>) -> Self {
        HcSimplex { objects, components }
    }

    pub fn level(&self) -> usize {
        self.objects.len() - 1
    }

    pub fn objects(&self) -> &[usize] {
        &self.objects
    }

    pub fn components(&self) -> &[Arc<[u32]>] {
        &self.components
    }

    /// Images of the strict chains of `P_{i,j}`.
    pub fn component(&self, i: usize, j: usize) -> &[u32] {
        &self.components[pair_index(self.level(), i, j)]
    }

    /// Value on a weakly increasing chain of middle-element masks of
    /// `P_{i,j}` (relative to `i`); a cell of `hom(F i, F j)` at level
    /// `chain.len() − 1`.
    pub fn eval(&self, sc: &SimplicialCategory, i: usize, j: usize, chain: &[u32]) -> usize {
        eval_parts(sc, &self.objects, &self.components, self.level(), i, j, chain)
    }

    /// The simplex whose components are all degenerate: the pair `(a, b)`
    /// takes the composite of the given vertices `v_{a+1}, …, v_b`
    /// (`vertices[k − 1] ∈ hom(X_{k−1}, X_k)_0`).
    pub fn constant(sc: &SimplicialCategory, objects: &[usize], vertices: &[usize]) -> Self {
        let n = objects.len() - 1;
        let components = pairs(n)
            .into_iter()
            .map(|(a, b)| {
                let mut acc = vertices[a];
                for k in a + 2..=b {
                    acc = sc.compose(objects[a], objects[k - 1], objects[k], 0, vertices[k - 1], acc);
                }
                let h = sc.hom(objects[a], objects[b]);
                let c = cube(b - a);
                let mut at_level = vec![acc];
                for l in 0..c.g - 1 {
                    at_level.push(h.degen(l, 0, at_level[l]));
                }
                c.dims.iter().map(|&d| at_level[d] as u32).collect::<Vec<u32>>().into()
            })
            .collect();
        HcSimplex {
            objects: objects.to_vec(),
            components,
        }
    }

    /// Precomposition with `C[f]` for monotone `f : [m] → [n]`.
    pub fn precompose(&self, sc: &SimplicialCategory, f: &[usize]) -> HcSimplex {
        let components = pairs(f.len() - 1)
            .into_iter()
            .map(|(a, b)| self.precompose_component(sc, f, a, b))
            .collect();
        HcSimplex {
            objects: f.iter().map(|&k| self.objects[k]).collect(),
            components,
        }
    }

    /// The `(a, b)` component of the precomposition with `C[f]`.
    pub fn precompose_component(&self, sc: &SimplicialCategory, f: &[usize], a: usize, b: usize) -> Arc<[u32]> {
        let c = cube(b - a);
        let (fa, fb) = (f[a], f[b]);
        let (xa, xb) = (self.objects[fa], self.objects[fb]);
        if fa == fb {
            return c.dims.iter().map(|&d| sc.identity_at(xa, d) as u32).collect();
        }
        if fb - fa == b - a {
            return self.components[pair_index(self.level(), fa, fb)].clone();
        }
        let rho: Vec<usize> = (a..=b).map(|t| f[t] - fa).collect();
        let table = c.map_to(&rho);
        let src = &self.components[pair_index(self.level(), fa, fb)];
        let tgt_dims = &cube(fb - fa).dims;
        let h = sc.hom(xa, xb);
        table
            .iter()
            .map(|(pos, word)| {
                let pos = *pos as usize;
                h.apply_degeneracies(tgt_dims[pos], src[pos] as usize, word) as u32
            })
            .collect()
    }

    pub fn face(&self, sc: &SimplicialCategory, k: usize) -> HcSimplex {
        let n = self.level();
        let f: Vec<usize> = (0..n).map(|t| if t < k { t } else { t + 1 }).collect();
        self.precompose(sc, &f)
    }

    pub fn degeneracy(&self, sc: &SimplicialCategory, k: usize) -> HcSimplex {
        let n = self.level();
        let f: Vec<usize> = (0..=n + 1).map(|t| if t <= k { t } else { t - 1 }).collect();
        self.precompose(sc, &f)
    }

    /// Checks that the data is a simplicial functor `C[Δⁿ] → C`: component
    /// shapes, compatibility with faces inside each cube, and the
    /// composition condition for every middle object.
    pub fn validate(&self, sc: &SimplicialCategory) -> ValidationReport {
        let mut r = ValidationReport::new();
        let n = self.level();
        if self.objects.iter().any(|&o| o >= sc.objects()) || self.components.len() != pairs(n).len() {
            r.push("shape", "simplex", "objects out of range or wrong number of components");
            return r;
        }
        if n > sc.dim() + 1 {
            r.push("truncation", "simplex", format!("level {n} needs homs up to level {}", n - 1));
            return r;
        }
        for (i, j) in pairs(n) {
            let c = cube(j - i);
            let comp = self.component(i, j);
            let h = sc.hom(self.objects[i], self.objects[j]);
            if comp.len() != c.len() || comp.iter().zip(&c.dims).any(|(&v, &d)| v as usize >= h.size(d)) {
                r.push("shape", format!("component ({i},{j})"), "wrong length or cell out of range");
                return r;
            }
        }
        for (i, j) in pairs(n) {
            let c = cube(j - i);
            let comp = self.component(i, j);
            let h = sc.hom(self.objects[i], self.objects[j]);
            for pos in 0..c.len() {
                let d = c.dims[pos];
                for (t, &fpos) in c.faces[pos].iter().enumerate() {
                    if h.face(d, t, comp[pos] as usize) != comp[fpos] as usize {
                        r.push("component-face", format!("component ({i},{j}) chain {:?}", c.chains[pos]), format!("d_{t}"));
                    }
                }
            }
            for k in i + 1..j {
                let bit = 1u32 << (k - i - 1);
                let low = bit - 1;
                for pos in 0..c.len() {
                    let chain = &c.chains[pos];
                    if chain.iter().any(|&m| m & bit == 0) {
                        continue;
                    }
                    let lower: Vec<u32> = chain.iter().map(|&m| m & low).collect();
                    let upper: Vec<u32> = chain.iter().map(|&m| m >> (k - i)).collect();
                    let d = c.dims[pos];
                    let want = sc.compose(
                        self.objects[i],
                        self.objects[k],
                        self.objects[j],
                        d,
                        self.eval(sc, k, j, &upper),
                        self.eval(sc, i, k, &lower),
                    );
                    if want != comp[pos] as usize {
                        r.push(
                            "composition",
                            format!("component ({i},{j}) through {k}"),
                            format!("chain {chain:?} has {} but the composite is {want}", comp[pos]),
                        );
                    }
                }
            }
        }
        r
    }
}

fn eval_parts(
    sc: &SimplicialCategory,
    objects: &[usize],
    components: &[Arc<[u32]>],
    n: usize,
    i: usize,
    j: usize,
    chain: &[u32],
) -> usize {
    let level = chain.len() - 1;
    if i == j {
        return sc.identity_at(objects[i], level);
    }
    let c = cube(j - i);
    let (pos, word) = c.locate(chain);
    let v = components[pair_index(n, i, j)][pos] as usize;
    sc.hom(objects[i], objects[j]).apply_degeneracies(c.dims[pos], v, &word)
}

/// The homotopy coherent nerve up to some level, with its simplices.
#[derive(Clone, Debug)]
pub struct CoherentNerve {
    pub set: SimplicialSet,
    cells: Vec<Vec<HcSimplex>>,
    index: Vec<HashMap<HcSimplex, usize>>,
}

impl CoherentNerve {
    pub fn cell(&self, n: usize, x: usize) -> &HcSimplex {
        &self.cells[n][x]
    }

    pub fn cells(&self, n: usize) -> &[HcSimplex] {
        &self.cells[n]
    }

    pub fn find(&self, s: &HcSimplex) -> Option<usize> {
        self.index.get(s.level())?.get(s).copied()
    }

    /// `(N_hc C, mor W_0)`: an edge is marked when its vertex lies in `W`.
    pub fn marked(&self, rel: &RelativeSimplicialCategory) -> MarkedSimplicialSet {
        if self.set.dim() == 0 {
            return MarkedSimplicialSet::minimal(self.set.clone());
        }
        let flags = self.cells[1]
            .iter()
            .map(|s| rel.in_sub(s.objects[0], s.objects[1], 0, s.components[0][0] as usize))
            .collect();
        MarkedSimplicialSet::from_flags(self.set.clone(), flags).expect("one flag per edge")
    }
}

/// Enumerates all simplices of level `n`: object sequences in
/// lexicographic order, then components gap by gap. Chains through a middle
/// object are pinned to composites; the rest are searched.
fn enumerate_level(sc: &SimplicialCategory, n: usize, indexes: &[BoundaryIndex]) -> Vec<HcSimplex> {
    let objs = sc.objects();
    let mut out = Vec::new();
    if n == 0 {
        return (0..objs).map(HcSimplex::vertex).collect();
    }
    let pair_list = pairs(n);
    let mut objects = vec![0; n + 1];
    loop {
        let mut comps: Vec<Arc<[u32]>> = Vec::with_capacity(pair_list.len());
        assign(sc, n, &objects, &pair_list, indexes, &mut comps, &mut out);
        // next object tuple
        let mut k = n + 1;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            objects[k] += 1;
            if objects[k] < objs {
                break;
            }
            objects[k] = 0;
        }
        if objs == 0 {
            return out;
        }
    }
}

fn assign(
    sc: &SimplicialCategory,
    n: usize,
    objects: &[usize],
    pair_list: &[(usize, usize)],
    indexes: &[BoundaryIndex],
    comps: &mut Vec<Arc<[u32]>>,
    out: &mut Vec<HcSimplex>,
) {
    let p = comps.len();
    if p == pair_list.len() {
        out.push(HcSimplex {
            objects: objects.to_vec(),
            components: comps.clone(),
        });
        return;
    }
    let (i, j) = pair_list[p];
    let c = cube(j - i);
    let (xi, xj) = (objects[i], objects[j]);
    let target = sc.hom(xi, xj);
    if target.size(0) == 0 {
        return;
    }
    let (shape, cells) = c.shape();
    let mut search = MapSearch::from_shape(
        shape.clone(),
        cells.clone(),
        target,
        Cow::Borrowed(&indexes[xi * sc.objects() + xj]),
    );
    for pos in 0..c.len() {
        let chain = &c.chains[pos];
        if chain[0] == 0 {
            continue;
        }
        let k = i + 1 + chain[0].trailing_zeros() as usize;
        let bit = 1u32 << (k - i - 1);
        let lower: Vec<u32> = chain.iter().map(|&m| m & (bit - 1)).collect();
        let upper: Vec<u32> = chain.iter().map(|&m| m >> (k - i)).collect();
        let d = c.dims[pos];
        let hi = eval_parts(sc, objects, comps, n, k, j, &upper);
        let lo = eval_parts(sc, objects, comps, n, i, k, &lower);
        search.pin_position(pos, sc.compose(xi, objects[k], xj, d, hi, lo));
    }
    for images in search.images() {
        comps.push(images.into_iter().map(|v| v as u32).collect());
        assign(sc, n, objects, pair_list, indexes, comps, out);
        comps.pop();
    }
}

/// `N_hc(C)` up to level `max_level ≤ D + 1`.
pub fn hc_nerve(sc: &SimplicialCategory, max_level: usize) -> Result<CoherentNerve> {
    if max_level > sc.dim() + 1 {
        return Err(Error::truncation("hc_nerve", max_level - 1, sc.dim()));
    }
    if max_level > MAX_GAP {
        return Err(Error::truncation("hc_nerve cube registry", max_level, MAX_GAP));
    }
    let n = sc.objects();
    let indexes: Vec<BoundaryIndex> = (0..n * n)
        .map(|p| BoundaryIndex::new(sc.hom(p / n, p % n), max_level.saturating_sub(1)))
        .collect();
    let cells: Vec<Vec<HcSimplex>> = (0..=max_level).map(|l| enumerate_level(sc, l, &indexes)).collect();
    let index: Vec<HashMap<HcSimplex, usize>> = cells
        .iter()
        .map(|lv| lv.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect())
        .collect();
    let look = |l: usize, s: &HcSimplex| -> usize { *index[l].get(s).expect("faces and degeneracies of simplices are simplices") };
    let face = (0..=max_level)
        .map(|l| {
            if l == 0 {
                return Vec::new();
            }
            (0..=l)
                .map(|k| cells[l].iter().map(|s| look(l - 1, &s.face(sc, k))).collect())
                .collect()
        })
        .collect();
    let degen = (0..=max_level)
        .map(|l| {
            if l == max_level {
                return Vec::new();
            }
            (0..=l)
                .map(|k| cells[l].iter().map(|s| look(l + 1, &s.degeneracy(sc, k))).collect())
                .collect()
        })
        .collect();
    let sizes = cells.iter().map(Vec::len).collect();
    Ok(CoherentNerve {
        set: SimplicialSet::from_tables(max_level, sizes, face, degen),
        cells,
        index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{nerve_cat, FiniteCategory};
    use crate::sset::FinitePoset;

    #[test]
    fn pair_order() {
        assert_eq!(pairs(3), vec![(0, 1), (1, 2), (2, 3), (0, 2), (1, 3), (0, 3)]);
        for (k, (i, j)) in pairs(4).into_iter().enumerate() {
            assert_eq!(pair_index(4, i, j), k);
        }
    }

    #[test]
    fn bg_z2_counts() {
        let sc = SimplicialCategory::bg(&FiniteCategory::cyclic(2), 3).unwrap();
        let nerve = hc_nerve(&sc, 3).unwrap();
        assert_eq!(nerve.set.sizes(), &[1, 1, 2, 8]);
        assert!(nerve.set.validate().is_ok());
        for l in 0..=3 {
            for s in nerve.cells(l) {
                assert!(s.validate(&sc).is_ok());
            }
        }
    }

    #[test]
    fn discrete_is_ordinary_nerve() {
        let c = FiniteCategory::poset(&FinitePoset::chain(2));
        let sc = SimplicialCategory::discrete(&c, 3);
        let nerve = hc_nerve(&sc, 3).unwrap();
        assert_eq!(nerve.set.sizes(), nerve_cat(&c, 3).sizes());
    }

    #[test]
    fn too_high_is_truncation_error() {
        let sc = SimplicialCategory::bg(&FiniteCategory::cyclic(2), 1).unwrap();
        assert!(matches!(hc_nerve(&sc, 3), Err(Error::Truncation { .. })));
    }
}
