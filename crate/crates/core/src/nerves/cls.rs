//! The classification diagram `Cls⁺(X, S)`.
//!
//! A `(p, q)`-cell is a map `u : Δᵖ × Δ^q → X` carrying every edge of every
//! slice `{i} × Δ^q` into `S`. It is recorded by its images of the
//! nondegenerate cells of `Δᵖ × Δ^q`, which are the strictly increasing
//! chains in `[p] × [q]`. A `(1, q)`-cell is marked when every edge of
//! `Δ¹ × Δ^q` lands in `S`.

use std::collections::HashMap;

use crate::bisset::{BisimplicialSet, MarkedBisimplicialSet};
use crate::sset::{product, standard_simplex_labeled, surjection_word, MapSearch, MarkedSimplicialSet, SimplicialSet};
use crate::{Error, Result};

pub type GridChain = Vec<(usize, usize)>;

/// The strictly increasing chains of `[p] × [q]`, level by level, each
/// level in lexicographic order.
#[derive(Clone, Debug)]
pub struct Grid {
    pub p: usize,
    pub q: usize,
    chains: Vec<GridChain>,
    level_start: Vec<usize>,
    index: HashMap<GridChain, usize>,
}

impl Grid {
    pub fn new(p: usize, q: usize) -> Grid {
        let top = p + q;
        let mut by_level: Vec<Vec<GridChain>> = vec![Vec::new(); top + 1];
        fn go(cur: &mut GridChain, p: usize, q: usize, out: &mut Vec<Vec<GridChain>>) {
            out[cur.len() - 1].push(cur.clone());
            let (a, b) = *cur.last().expect("nonempty");
            for a2 in a..=p {
                for b2 in b..=q {
                    if (a2, b2) != (a, b) {
                        cur.push((a2, b2));
                        go(cur, p, q, out);
                        cur.pop();
                    }
                }
            }
        }
        for a in 0..=p {
            for b in 0..=q {
                go(&mut vec![(a, b)], p, q, &mut by_level);
            }
        }
        let mut chains = Vec::new();
        let mut level_start = Vec::new();
        for mut lv in by_level {
            lv.sort();
            level_start.push(chains.len());
            chains.extend(lv);
        }
        level_start.push(chains.len());
        let index = chains.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        Grid {
            p,
            q,
            chains,
            level_start,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    pub fn top(&self) -> usize {
        self.p + self.q
    }

    pub fn chain(&self, k: usize) -> &GridChain {
        &self.chains[k]
    }

    pub fn chains(&self) -> &[GridChain] {
        &self.chains
    }

    /// Positions of the chains of length `r + 1`; empty above the top.
    pub fn level(&self, r: usize) -> std::ops::Range<usize> {
        if r > self.top() {
            return 0..0;
        }
        self.level_start[r]..self.level_start[r + 1]
    }

    pub fn position(&self, chain: &[(usize, usize)]) -> Option<usize> {
        self.index.get(chain).copied()
    }

    /// Removes repeats: `(position of the strict chain, degeneracy word)`.
    pub fn collapse(&self, weak: &[(usize, usize)]) -> (usize, Vec<usize>) {
        let mut strict = weak.to_vec();
        strict.dedup();
        let mut ranks = Vec::with_capacity(weak.len());
        let mut k = 0;
        for t in 0..weak.len() {
            if t > 0 && weak[t] != weak[t - 1] {
                k += 1;
            }
            ranks.push(k);
        }
        (self.index[&strict], surjection_word(&ranks))
    }
}

/// Image of a chain under `f × g` for monotone `f`, `g` given by values.
pub fn map_chain(chain: &[(usize, usize)], f: &[usize], g: &[usize]) -> GridChain {
    chain.iter().map(|&(a, b)| (f[a], g[b])).collect()
}

/// Coface `δ_i : [n − 1] → [n]` and codegeneracy `σ_i : [n + 1] → [n]` as
/// value lists.
pub fn coface(n: usize, i: usize) -> Vec<usize> {
    (0..n).map(|t| if t < i { t } else { t + 1 }).collect()
}

pub fn codegeneracy(n: usize, i: usize) -> Vec<usize> {
    (0..=n + 1).map(|t| if t <= i { t } else { t - 1 }).collect()
}

/// `Cls⁺(M)` up to bidegree `(P, Q)` with the images of its cells.
#[derive(Clone, Debug)]
pub struct ClsDiagram {
    pub marked: MarkedBisimplicialSet,
    grids: Vec<Vec<Grid>>,
    images: Vec<Vec<Vec<Vec<usize>>>>,
    index: Vec<Vec<HashMap<Vec<usize>, usize>>>,
}

impl ClsDiagram {
    pub fn grid(&self, p: usize, q: usize) -> &Grid {
        &self.grids[p][q]
    }

    /// Images of the chains of `grid(p, q)` under the cell `x`.
    pub fn images(&self, p: usize, q: usize, x: usize) -> &[usize] {
        &self.images[p][q][x]
    }

    pub fn find(&self, p: usize, q: usize, images: &[usize]) -> Option<usize> {
        self.index[p][q].get(images).copied()
    }
}

/// Evaluates a cell on an arbitrary (possibly degenerate) chain.
fn eval(x: &SimplicialSet, grid: &Grid, images: &[usize], weak: &[(usize, usize)]) -> usize {
    let (pos, word) = grid.collapse(weak);
    x.apply_degeneracies(grid.chain(pos).len() - 1, images[pos], &word)
}

fn enumerate_cells(m: &MarkedSimplicialSet, grid: &Grid) -> Vec<Vec<usize>> {
    let x = m.space();
    let (p, q) = (grid.p, grid.q);
    let top = grid.top();
    let dp = standard_simplex_labeled(p, top);
    let dq = standard_simplex_labeled(q, top);
    let source = product(&dp.set, &dq.set);
    let chain_of = |level: usize, cell: usize| -> GridChain {
        let (a, b) = (cell / dq.set.size(level), cell % dq.set.size(level));
        dp.labels[level][a].iter().copied().zip(dq.labels[level][b].iter().copied()).collect()
    };
    let search = MapSearch::new(&source, x).filter(|level, cell, image| {
        if level != 1 {
            return true;
        }
        let c = chain_of(1, cell);
        c[0].0 != c[1].0 || m.is_marked(image)
    });
    let order: Vec<usize> = search
        .cells()
        .iter()
        .map(|&(l, c)| grid.position(&chain_of(l, c)).expect("nondegenerate product cells are strict chains"))
        .collect();
    search
        .images()
        .into_iter()
        .map(|found| {
            let mut out = vec![0; grid.len()];
            for (k, v) in found.into_iter().enumerate() {
                out[order[k]] = v;
            }
            out
        })
        .collect()
}

/// `Cls⁺(X, S)` up to bidegree `(P, Q)`, `P + Q ≤ dim X`.
pub fn cls_diagram(m: &MarkedSimplicialSet, cols: usize, rows: usize) -> Result<ClsDiagram> {
    let x = m.space();
    if cols + rows > x.dim() {
        return Err(Error::truncation("cls_diagram", cols + rows, x.dim()));
    }
    let grids: Vec<Vec<Grid>> = (0..=cols).map(|p| (0..=rows).map(|q| Grid::new(p, q)).collect()).collect();
    let images: Vec<Vec<Vec<Vec<usize>>>> = (0..=cols)
        .map(|p| (0..=rows).map(|q| enumerate_cells(m, &grids[p][q])).collect())
        .collect();
    let index: Vec<Vec<HashMap<Vec<usize>, usize>>> = images
        .iter()
        .map(|col| {
            col.iter()
                .map(|cells| cells.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect())
                .collect()
        })
        .collect();
    // an operator is precomposition with (f × g); `to` is the target bidegree
    let op = |from: (usize, usize), to: (usize, usize), f: &[usize], g: &[usize]| -> Vec<usize> {
        let (src, dst) = (&grids[from.0][from.1], &grids[to.0][to.1]);
        images[from.0][from.1]
            .iter()
            .map(|u| {
                let new: Vec<usize> = dst.chains().iter().map(|c| eval(x, src, u, &map_chain(c, f, g))).collect();
                index[to.0][to.1][&new]
            })
            .collect()
    };
    let id = |n: usize| -> Vec<usize> { (0..=n).collect() };
    let grid_of = |f: &dyn Fn(usize, usize) -> Vec<Vec<usize>>| -> Vec<Vec<Vec<Vec<usize>>>> {
        (0..=cols).map(|p| (0..=rows).map(|q| f(p, q)).collect()).collect()
    };
    let hface = grid_of(&|p, q| {
        if p == 0 {
            return Vec::new();
        }
        (0..=p).map(|i| op((p, q), (p - 1, q), &coface(p, i), &id(q))).collect()
    });
    let hdegen = grid_of(&|p, q| {
        if p == cols {
            return Vec::new();
        }
        (0..=p).map(|i| op((p, q), (p + 1, q), &codegeneracy(p, i), &id(q))).collect()
    });
    let vface = grid_of(&|p, q| {
        if q == 0 {
            return Vec::new();
        }
        (0..=q).map(|i| op((p, q), (p, q - 1), &id(p), &coface(q, i))).collect()
    });
    let vdegen = grid_of(&|p, q| {
        if q == rows {
            return Vec::new();
        }
        (0..=q).map(|i| op((p, q), (p, q + 1), &id(p), &codegeneracy(q, i))).collect()
    });
    let sizes = images.iter().map(|col| col.iter().map(Vec::len).collect()).collect();
    let space = BisimplicialSet::from_parts((cols, rows), sizes, hface, hdegen, vface, vdegen)?;
    let marking = if cols == 0 {
        Vec::new()
    } else {
        (0..=rows)
            .map(|q| {
                let g = &grids[1][q];
                images[1][q].iter().map(|u| g.level(1).all(|k| m.is_marked(u[k]))).collect()
            })
            .collect()
    };
    Ok(ClsDiagram {
        marked: MarkedBisimplicialSet::new(space, marking)?,
        grids,
        images,
        index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::standard_simplex;

    #[test]
    fn grid_counts() {
        // nondegenerate cells of Δ¹ × Δ¹: 4, 5, 2
        let g = Grid::new(1, 1);
        assert_eq!((0..=2).map(|r| g.level(r).len()).collect::<Vec<_>>(), vec![4, 5, 2]);
        assert_eq!(Grid::new(3, 3).level(6).len(), 20);
    }

    #[test]
    fn interval_minimally_marked() {
        let m = MarkedSimplicialSet::minimal(standard_simplex(1, 3));
        let c = cls_diagram(&m, 2, 1).unwrap();
        assert_eq!(c.marked.space().size(1, 0), 3);
        assert_eq!(c.marked.space().size(0, 1), 2);
        assert!(c.marked.validate().is_ok());
    }

    #[test]
    fn point_is_terminal() {
        let m = MarkedSimplicialSet::minimal(SimplicialSet::point(4));
        let c = cls_diagram(&m, 2, 2).unwrap();
        assert!(c.marked.space().sizes().iter().flatten().all(|&s| s == 1));
    }

    #[test]
    fn all_marked_gives_all_maps() {
        let x = standard_simplex(1, 3);
        let c = cls_diagram(&MarkedSimplicialSet::maximal(x.clone()), 1, 1).unwrap();
        // maps Δ¹ × Δ¹ → Δ¹ are monotone maps of the grid poset
        assert_eq!(c.marked.space().size(1, 1), 6);
        assert!(c.marked.marking()[1].iter().all(|&b| b));
        assert!(c.marked.validate().is_ok());
    }

    #[test]
    fn truncation_is_checked() {
        let m = MarkedSimplicialSet::minimal(standard_simplex(1, 2));
        assert!(matches!(cls_diagram(&m, 2, 1), Err(Error::Truncation { .. })));
    }
}
