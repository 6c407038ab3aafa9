//! Strict chains in the cubes `P_{0,g}` and the maps between them induced
//! by monotone maps of intervals.
//!
//! A vertex of `P_{0,g}` is a mask of middle elements (bit `t − 1` for the
//! element `t`). A component of a homotopy coherent simplex stores one hom
//! cell per strict chain, in the order kept here: by dimension, then
//! lexicographically in the masks.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::sset::enumerate::Shape;
use crate::sset::surjection_word;

/// Largest gap supported; chains in `P_{0,g}` number 18731 at `g = 7`.
pub const MAX_GAP: usize = 8;

pub(crate) type ChainMap = Arc<Vec<(u32, Vec<usize>)>>;

pub(crate) struct Cube {
    pub g: usize,
    pub chains: Vec<Vec<u32>>,
    pub dims: Vec<usize>,
    pub position: HashMap<Vec<u32>, usize>,
    pub faces: Vec<Vec<usize>>,
    shape: (Shape, Vec<(usize, usize)>),
    maps: Mutex<HashMap<Vec<usize>, ChainMap>>,
}

impl Cube {
    fn new(g: usize) -> Cube {
        let full: u32 = (1u32 << (g - 1)) - 1;
        let mut by_len: Vec<Vec<Vec<u32>>> = vec![Vec::new(); g];
        fn go(cur: &mut Vec<u32>, full: u32, out: &mut Vec<Vec<Vec<u32>>>) {
            out[cur.len() - 1].push(cur.clone());
            let last = *cur.last().expect("nonempty");
            for next in last + 1..=full {
                if last & !next == 0 {
                    cur.push(next);
                    go(cur, full, out);
                    cur.pop();
                }
            }
        }
        for start in 0..=full {
            go(&mut vec![start], full, &mut by_len);
        }
        for level in &mut by_len {
            level.sort();
        }
        let chains: Vec<Vec<u32>> = by_len.into_iter().flatten().collect();
        let dims = chains.iter().map(|c| c.len() - 1).collect();
        let position: HashMap<Vec<u32>, usize> = chains.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        let faces = chains
            .iter()
            .map(|c| {
                if c.len() == 1 {
                    return Vec::new();
                }
                (0..c.len())
                    .map(|t| {
                        let mut d = c.clone();
                        d.remove(t);
                        position[&d]
                    })
                    .collect()
            })
            .collect::<Vec<Vec<usize>>>();
        let shape = (
            Shape {
                levels: dims_of(&chains),
                faces: faces.iter().map(|f| f.iter().map(|&p| (p, Vec::new())).collect()).collect(),
            },
            chains.iter().enumerate().map(|(p, c)| (c.len() - 1, p)).collect(),
        );
        Cube {
            g,
            shape,
            chains,
            dims,
            position,
            faces,
            maps: Mutex::new(HashMap::new()),
        }
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    /// The kernel shape: every face of a strict chain is a strict chain.
    pub fn shape(&self) -> &(Shape, Vec<(usize, usize)>) {
        &self.shape
    }

    /// Collapses a weak chain: `(position of the strict chain, degeneracy word)`.
    pub fn locate(&self, weak: &[u32]) -> (usize, Vec<usize>) {
        let mut strict = weak.to_vec();
        strict.dedup();
        if strict.len() == weak.len() {
            return (self.position[&strict], Vec::new());
        }
        let mut ranks = Vec::with_capacity(weak.len());
        let mut k = 0;
        for t in 0..weak.len() {
            if t > 0 && weak[t] != weak[t - 1] {
                k += 1;
            }
            ranks.push(k);
        }
        (self.position[&strict], surjection_word(&ranks))
    }

    /// For `ρ : [g'] → [g]` monotone with `ρ(0) = 0`, `ρ(g') = g` (here
    /// `self` is the source cube `P_{0,g'}`), the image of every strict chain
    /// in `P_{0,g}` as `(position, word)`.
    pub fn map_to(&self, rho: &[usize]) -> ChainMap {
        if let Some(m) = self.maps.lock().expect("cube cache").get(rho) {
            return m.clone();
        }
        let g_tgt = *rho.last().expect("nonempty");
        let target = cube(g_tgt);
        let image_mask = |mask: u32| -> u32 {
            let mut out = 0u32;
            for t in 1..self.g {
                if mask >> (t - 1) & 1 == 1 {
                    let v = rho[t];
                    if v > 0 && v < g_tgt {
                        out |= 1 << (v - 1);
                    }
                }
            }
            out
        };
        let table: Vec<(u32, Vec<usize>)> = self
            .chains
            .iter()
            .map(|c| {
                let weak: Vec<u32> = c.iter().map(|&m| image_mask(m)).collect();
                let (pos, word) = target.locate(&weak);
                (pos as u32, word)
            })
            .collect();
        let arc = Arc::new(table);
        self.maps.lock().expect("cube cache").insert(rho.to_vec(), arc.clone());
        arc
    }
}

fn dims_of(chains: &[Vec<u32>]) -> Vec<usize> {
    chains.iter().map(|c| c.len() - 1).collect()
}

static CUBES: OnceLock<Vec<OnceLock<Cube>>> = OnceLock::new();

/// The registry entry for `P_{0,g}`, `1 ≤ g ≤ MAX_GAP`.
pub(crate) fn cube(g: usize) -> &'static Cube {
    assert!((1..=MAX_GAP).contains(&g), "cube gap {g} outside 1..={MAX_GAP}");
    let all = CUBES.get_or_init(|| (0..=MAX_GAP).map(|_| OnceLock::new()).collect());
    all[g].get_or_init(|| Cube::new(g))
}

/// Number of strict chains in `P_{0,g}`.
pub fn cube_chain_count(g: usize) -> usize {
    cube(g).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{poset_nerve, FinitePoset};

    #[test]
    fn chain_counts() {
        let counts: Vec<usize> = (1..=6).map(cube_chain_count).collect();
        assert_eq!(counts, vec![1, 3, 11, 51, 299, 2163]);
        for g in 1..=5 {
            let nd: usize = poset_nerve(&FinitePoset::cube(g), g).nondegenerate_counts().iter().sum();
            assert_eq!(nd, cube_chain_count(g));
        }
    }

    #[test]
    fn identity_map_is_identity() {
        let c = cube(4);
        let m = c.map_to(&[0, 1, 2, 3, 4]);
        for (p, (q, w)) in m.iter().enumerate() {
            assert_eq!(p, *q as usize);
            assert!(w.is_empty());
        }
    }
}
