//! Backtracking enumeration of simplicial maps.
//!
//! A map out of `A` is determined by the images of the nondegenerate cells of
//! `A`. Each cell is assigned after its faces, top cells as early as
//! possible, and the target's boundary index lists the cells with exactly
//! those faces.

use std::collections::HashMap;

use rayon::prelude::*;

use super::{SimplicialMap, SimplicialSet};
use crate::{Error, Result};

/// Nondegenerate cells of a source, with each face written as
/// `(position of a nondegenerate cell, degeneracy word)`.
#[derive(Clone, Debug)]
pub(crate) struct Shape {
    pub levels: Vec<usize>,
    pub faces: Vec<Vec<(usize, Vec<usize>)>>,
}

impl Shape {
    /// Shape of a simplicial set; positions follow dimension, then index.
    pub fn of(a: &SimplicialSet) -> (Shape, Vec<(usize, usize)>) {
        let mut cells = Vec::new();
        let mut pos = HashMap::new();
        for n in 0..=a.dim() {
            for x in a.nondegenerate(n) {
                pos.insert((n, x), cells.len());
                cells.push((n, x));
            }
        }
        let faces = cells
            .iter()
            .map(|&(n, x)| {
                if n == 0 {
                    return Vec::new();
                }
                (0..=n)
                    .map(|i| {
                        let (m, y, word) = a.ez(n - 1, a.face(n, i, x));
                        (pos[&(m, y)], word)
                    })
                    .collect()
            })
            .collect();
        let levels = cells.iter().map(|&(n, _)| n).collect();
        (Shape { levels, faces }, cells)
    }
}

/// For each level of a target, the cells grouped by their tuple of faces.
#[derive(Clone, Debug, Default)]
pub struct BoundaryIndex {
    vertices: Vec<usize>,
    levels: Vec<HashMap<Vec<usize>, Vec<usize>>>,
}

impl BoundaryIndex {
    pub fn new(x: &SimplicialSet, max_level: usize) -> Self {
        let top = max_level.min(x.dim());
        let vertices = (0..x.size(0)).collect();
        let mut levels = vec![HashMap::new()];
        for n in 1..=top {
            let mut m: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
            for c in 0..x.size(n) {
                m.entry(x.faces_of(n, c)).or_default().push(c);
            }
            levels.push(m);
        }
        BoundaryIndex { vertices, levels }
    }

    /// Cells of level `n ≥ 1` whose faces are exactly `faces`.
    pub fn fillers(&self, n: usize, faces: &[usize]) -> &[usize] {
        if n == 0 {
            return &self.vertices;
        }
        self.levels[n].get(faces).map_or(&[], Vec::as_slice)
    }
}

type Filter<'a> = Box<dyn Fn(usize, usize, usize) -> bool + Send + Sync + 'a>;

/// Enumerates simplicial maps `A → X` with optional pinned images and a
/// per-cell filter. Results come in lexicographic order of the images of the
/// nondegenerate cells of `A` (dimension-major, then index).
pub struct MapSearch<'a> {
    shape: Shape,
    cells: Vec<(usize, usize)>,
    target: &'a SimplicialSet,
    index: std::borrow::Cow<'a, BoundaryIndex>,
    pins: Vec<Option<usize>>,
    filter: Option<Filter<'a>>,
    parallel: bool,
    /// Assignment order: every cell comes after its faces.
    eager: Vec<usize>,
}

/// Depth-first closure from the top cells down, so a simplex is assigned as
/// soon as its boundary is.
fn eager_order(shape: &Shape) -> Vec<usize> {
    fn visit(p: usize, shape: &Shape, seen: &mut [bool], out: &mut Vec<usize>) {
        if seen[p] {
            return;
        }
        seen[p] = true;
        for &(q, _) in &shape.faces[p] {
            visit(q, shape, seen, out);
        }
        out.push(p);
    }
    let n = shape.levels.len();
    let mut seen = vec![false; n];
    let mut out = Vec::with_capacity(n);
    let mut by_level: Vec<usize> = (0..n).collect();
    by_level.sort_by_key(|&p| std::cmp::Reverse(shape.levels[p]));
    for p in by_level {
        visit(p, shape, &mut seen, &mut out);
    }
    out
}

impl<'a> MapSearch<'a> {
    pub fn new(source: &SimplicialSet, target: &'a SimplicialSet) -> Self {
        let (shape, cells) = Shape::of(source);
        let top = shape.levels.iter().copied().max().unwrap_or(0);
        let index = std::borrow::Cow::Owned(BoundaryIndex::new(target, top));
        Self::from_shape(shape, cells, target, index)
    }

    pub(crate) fn from_shape(
        shape: Shape,
        cells: Vec<(usize, usize)>,
        target: &'a SimplicialSet,
        index: std::borrow::Cow<'a, BoundaryIndex>,
    ) -> Self {
        let n = cells.len();
        let eager = eager_order(&shape);
        MapSearch {
            eager,
            shape,
            cells,
            target,
            index,
            pins: vec![None; n],
            filter: None,
            parallel: false,
        }
    }

    /// The nondegenerate source cells `(level, index)` in assignment order.
    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    /// Forces the image of the nondegenerate source cell `(level, cell)`.
    pub fn pin(mut self, level: usize, cell: usize, image: usize) -> Self {
        let p = self
            .cells
            .iter()
            .position(|&c| c == (level, cell))
            .expect("pinned cell must be nondegenerate in the source");
        self.pins[p] = Some(image);
        self
    }

    pub(crate) fn pin_position(&mut self, p: usize, image: usize) {
        self.pins[p] = Some(image);
    }

    /// Keeps only images accepted by `f(level, source cell, image)`.
    pub fn filter(mut self, f: impl Fn(usize, usize, usize) -> bool + Send + Sync + 'a) -> Self {
        self.filter = Some(Box::new(f));
        self
    }

    /// Splits the search over the candidates of the first cell. The output
    /// order is unchanged.
    pub fn parallel(mut self, yes: bool) -> Self {
        self.parallel = yes;
        self
    }

    fn candidates(&self, p: usize, images: &[usize]) -> Vec<usize> {
        let n = self.shape.levels[p];
        let faces: Vec<usize> = self.shape.faces[p]
            .iter()
            .map(|(q, word)| {
                self.target.apply_degeneracies(self.shape.levels[*q], images[*q], word)
            })
            .collect();
        let fillers = self.index.fillers(n, &faces);
        let ok = |c: &usize| self.filter.as_ref().map_or(true, |f| f(n, self.cells[p].1, *c));
        match self.pins[p] {
            Some(c) => {
                if fillers.binary_search(&c).is_ok() && ok(&c) {
                    vec![c]
                } else {
                    Vec::new()
                }
            }
            None => fillers.iter().copied().filter(ok).collect(),
        }
    }

    /// Assigns `order[k..]`; `images` is indexed by cell position.
    fn descend(&self, order: &[usize], k: usize, images: &mut [usize], out: &mut Vec<Vec<usize>>, limit: usize) {
        if out.len() >= limit {
            return;
        }
        if k == order.len() {
            out.push(images.to_vec());
            return;
        }
        let p = order[k];
        for c in self.candidates(p, images) {
            images[p] = c;
            self.descend(order, k + 1, images, out, limit);
            if out.len() >= limit {
                return;
            }
        }
    }

    fn run(&self, order: &[usize], limit: usize) -> Vec<Vec<usize>> {
        if self.cells.is_empty() {
            return vec![Vec::new()];
        }
        let blank = vec![usize::MAX; self.cells.len()];
        if self.parallel && limit == usize::MAX {
            let first = self.candidates(order[0], &blank);
            let parts: Vec<Vec<Vec<usize>>> = first
                .par_iter()
                .map(|&c| {
                    let mut out = Vec::new();
                    let mut images = blank.clone();
                    images[order[0]] = c;
                    self.descend(order, 1, &mut images, &mut out, usize::MAX);
                    out
                })
                .collect();
            return parts.into_iter().flatten().collect();
        }
        let mut out = Vec::new();
        self.descend(order, 0, &mut blank.clone(), &mut out, limit);
        out
    }

    /// Images of the nondegenerate source cells, one vector per map.
    pub fn images(&self) -> Vec<Vec<usize>> {
        let mut out = self.run(&self.eager, usize::MAX);
        out.sort_unstable();
        out
    }

    /// The first map in canonical order, if any.
    pub fn first(&self) -> Option<Vec<usize>> {
        let canonical: Vec<usize> = (0..self.cells.len()).collect();
        self.run(&canonical, 1).pop()
    }

    pub fn exists(&self) -> bool {
        !self.run(&self.eager, 1).is_empty()
    }

    pub fn count(&self) -> usize {
        self.run(&self.eager, usize::MAX).len()
    }
}

/// Extends images of nondegenerate cells to a full simplicial map.
pub(crate) fn extend_map(
    source: &SimplicialSet,
    target: &SimplicialSet,
    cells: &[(usize, usize)],
    images: &[usize],
) -> SimplicialMap {
    let pos: HashMap<(usize, usize), usize> = cells.iter().enumerate().map(|(p, &c)| (c, p)).collect();
    let levels = (0..=source.dim().min(target.dim()))
        .map(|n| {
            (0..source.size(n))
                .map(|x| {
                    let (m, y, word) = source.ez(n, x);
                    target.apply_degeneracies(m, images[pos[&(m, y)]], &word)
                })
                .collect()
        })
        .collect();
    SimplicialMap::new(levels)
}

/// All simplicial maps `A → X` in canonical order.
pub fn enumerate_maps(a: &SimplicialSet, x: &SimplicialSet) -> Result<Vec<SimplicialMap>> {
    if a.dim() > x.dim() {
        return Err(Error::truncation("enumerate_maps target", a.dim(), x.dim()));
    }
    let search = MapSearch::new(a, x);
    let cells = search.cells.clone();
    Ok(search
        .images()
        .into_iter()
        .map(|im| extend_map(a, x, &cells, &im))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{disjoint_union, standard_simplex};

    #[test]
    fn small_counts() {
        let i = standard_simplex(1, 1);
        assert_eq!(enumerate_maps(&i, &i).unwrap().len(), 3);
        let two = disjoint_union(&standard_simplex(0, 1), &standard_simplex(0, 1));
        assert_eq!(enumerate_maps(&two, &i).unwrap().len(), 4);
    }

    #[test]
    fn yoneda() {
        let x = standard_simplex(2, 3);
        for k in 0..=3 {
            let simplex = crate::sset::standard_simplex_labeled(k, k);
            let id = simplex.cell(k, &(0..=k).collect()).unwrap();
            let maps = enumerate_maps(&simplex.set, &x).unwrap();
            let top: Vec<usize> = maps.iter().map(|m| m.apply(k, id)).collect();
            let expect: Vec<usize> = (0..x.size(k)).collect();
            let mut sorted = top.clone();
            sorted.sort();
            assert_eq!(sorted, expect);
        }
    }

    #[test]
    fn parallel_matches_serial() {
        let a = standard_simplex(2, 2);
        let x = standard_simplex(3, 2);
        let s = MapSearch::new(&a, &x).images();
        let p = MapSearch::new(&a, &x).parallel(true).images();
        assert_eq!(s, p);
    }

    #[test]
    fn dimension_mismatch_is_error() {
        assert!(enumerate_maps(&standard_simplex(1, 2), &standard_simplex(1, 1)).is_err());
    }
}
