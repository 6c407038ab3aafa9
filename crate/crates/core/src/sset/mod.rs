//! Truncated simplicial sets and maps between them.

pub(crate) mod enumerate;
mod marked;
mod poset;

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use crate::report::ValidationReport;
use crate::{Error, Result};

pub use enumerate::{enumerate_maps, BoundaryIndex, MapSearch};
pub use marked::MarkedSimplicialSet;
pub use poset::{poset_nerve, poset_nerve_labeled, FinitePoset};

/// A simplicial set truncated at `dim`: all cells of levels `0..=dim`,
/// degenerate ones included.
///
/// `face[n][i][x]` is `d_i x` for an `n`-cell `x` (so `face[0]` is empty) and
/// `degen[n][i][x]` is `s_i x` (so `degen[dim]` is empty).
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialSet {
    dim: usize,
    sizes: Vec<usize>,
    face: Vec<Vec<Vec<usize>>>,
    degen: Vec<Vec<Vec<usize>>>,
    nondeg: Vec<Vec<bool>>,
}

impl fmt::Debug for SimplicialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialSet")
            .field("dim", &self.dim)
            .field("sizes", &self.sizes)
            .finish_non_exhaustive()
    }
}

impl SimplicialSet {
    /// Builds a simplicial set from raw tables, checking shapes and ranges but
    /// not the simplicial identities (see [`SimplicialSet::validate`]).
    pub fn from_parts(
        dim: usize,
        sizes: Vec<usize>,
        face: Vec<Vec<Vec<usize>>>,
        degen: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::Malformed(msg));
        if sizes.len() != dim + 1 || face.len() != dim + 1 || degen.len() != dim + 1 {
            return bad(format!(
                "expected {} levels, got cells {}, face {}, degen {}",
                dim + 1,
                sizes.len(),
                face.len(),
                degen.len()
            ));
        }
        for n in 0..=dim {
            let want_faces = if n == 0 { 0 } else { n + 1 };
            if face[n].len() != want_faces {
                return bad(format!("level {n}: {} face maps, expected {want_faces}", face[n].len()));
            }
            for (i, table) in face[n].iter().enumerate() {
                if table.len() != sizes[n] {
                    return bad(format!("d_{i} on level {n} has {} entries, expected {}", table.len(), sizes[n]));
                }
                if let Some(&x) = table.iter().find(|&&x| x >= sizes[n - 1]) {
                    return bad(format!("d_{i} on level {n} points to missing cell {x}"));
                }
            }
            let want_degens = if n == dim { 0 } else { n + 1 };
            if degen[n].len() != want_degens {
                return bad(format!("level {n}: {} degeneracy maps, expected {want_degens}", degen[n].len()));
            }
            for (i, table) in degen[n].iter().enumerate() {
                if table.len() != sizes[n] {
                    return bad(format!("s_{i} on level {n} has {} entries, expected {}", table.len(), sizes[n]));
                }
                if let Some(&x) = table.iter().find(|&&x| x >= sizes[n + 1]) {
                    return bad(format!("s_{i} on level {n} points to missing cell {x}"));
                }
            }
        }
        Ok(Self::from_tables(dim, sizes, face, degen))
    }

    pub(crate) fn from_tables(
        dim: usize,
        sizes: Vec<usize>,
        face: Vec<Vec<Vec<usize>>>,
        degen: Vec<Vec<Vec<usize>>>,
    ) -> Self {
        let mut nondeg: Vec<Vec<bool>> = sizes.iter().map(|&s| vec![true; s]).collect();
        for n in 0..dim {
            for table in &degen[n] {
                for &y in table {
                    nondeg[n + 1][y] = false;
                }
            }
        }
        SimplicialSet {
            dim,
            sizes,
            face,
            degen,
            nondeg,
        }
    }

    /// The empty simplicial set truncated at `dim`.
    pub fn empty(dim: usize) -> Self {
        Self::from_tables(
            dim,
            vec![0; dim + 1],
            (0..=dim).map(|n| vec![Vec::new(); if n == 0 { 0 } else { n + 1 }]).collect(),
            (0..=dim).map(|n| vec![Vec::new(); if n == dim { 0 } else { n + 1 }]).collect(),
        )
    }

    /// The terminal simplicial set Δ⁰ truncated at `dim`.
    pub fn point(dim: usize) -> Self {
        Self::discrete(1, dim)
    }

    /// `k` points, every level of size `k`, all operators identities.
    pub fn discrete(k: usize, dim: usize) -> Self {
        let id: Vec<usize> = (0..k).collect();
        Self::from_tables(
            dim,
            vec![k; dim + 1],
            (0..=dim).map(|n| vec![id.clone(); if n == 0 { 0 } else { n + 1 }]).collect(),
            (0..=dim).map(|n| vec![id.clone(); if n == dim { 0 } else { n + 1 }]).collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn size(&self, n: usize) -> usize {
        self.sizes[n]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn face(&self, n: usize, i: usize, x: usize) -> usize {
        self.face[n][i][x]
    }

    pub fn degen(&self, n: usize, i: usize, x: usize) -> usize {
        self.degen[n][i][x]
    }

    pub fn face_table(&self, n: usize, i: usize) -> &[usize] {
        &self.face[n][i]
    }

    pub fn degen_table(&self, n: usize, i: usize) -> &[usize] {
        &self.degen[n][i]
    }

    pub fn face_tables(&self) -> &Vec<Vec<Vec<usize>>> {
        &self.face
    }

    pub fn degen_tables(&self) -> &Vec<Vec<Vec<usize>>> {
        &self.degen
    }

    pub fn is_nondegenerate(&self, n: usize, x: usize) -> bool {
        self.nondeg[n][x]
    }

    pub fn nondegenerate(&self, n: usize) -> impl Iterator<Item = usize> + '_ {
        self.nondeg[n].iter().enumerate().filter(|(_, &b)| b).map(|(x, _)| x)
    }

    pub fn nondegenerate_counts(&self) -> Vec<usize> {
        self.nondeg.iter().map(|l| l.iter().filter(|&&b| b).count()).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.iter().all(|&s| s == 0)
    }

    /// All faces of an `n`-cell, `d_0 x, …, d_n x`.
    pub fn faces_of(&self, n: usize, x: usize) -> Vec<usize> {
        (0..=n).map(|i| self.face[n][i][x]).collect()
    }

    /// Applies degeneracies in order: `word = [a, b]` gives `s_b s_a x`.
    pub fn apply_degeneracies(&self, mut n: usize, mut x: usize, word: &[usize]) -> usize {
        for &i in word {
            x = self.degen[n][i][x];
            n += 1;
        }
        x
    }

    /// `α^* x` for a monotone `α : [s] → [n]` given by its values.
    ///
    /// `α` is factored as a surjection followed by an injection; the
    /// injection contributes the faces for missing values (largest first) and
    /// the surjection the degeneracies.
    pub fn apply(&self, n: usize, x: usize, alpha: &[usize]) -> usize {
        debug_assert!(alpha.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(alpha.last().map_or(true, |&a| a <= n));
        let mut image: Vec<usize> = alpha.to_vec();
        image.dedup();
        // faces for values of [n] missing from the image, in descending order
        let mut y = x;
        let mut level = n;
        let mut j = n + 1;
        let mut pos = image.len();
        while j > 0 {
            j -= 1;
            if pos > 0 && image[pos - 1] == j {
                pos -= 1;
            } else {
                y = self.face[level][j][y];
                level -= 1;
            }
        }
        // the surjection [s] → [m], recorded as ranks into the image
        let ranks: Vec<usize> = {
            let mut r = Vec::with_capacity(alpha.len());
            let mut k = 0;
            for (t, &a) in alpha.iter().enumerate() {
                if t > 0 && a != alpha[t - 1] {
                    k += 1;
                }
                r.push(k);
            }
            r
        };
        self.apply_degeneracies(level, y, &surjection_word(&ranks))
    }

    /// Eilenberg–Zilber decomposition: `x = s_{w_k} ⋯ s_{w_1} y` with `y`
    /// nondegenerate, returned as `(level of y, y, [w_1, …, w_k])`.
    pub fn ez(&self, n: usize, x: usize) -> (usize, usize, Vec<usize>) {
        let mut word = Vec::new();
        let (mut level, mut y) = (n, x);
        while !self.nondeg[level][y] {
            let i = (0..level)
                .find(|&i| self.degen[level - 1][i][self.face[level][i][y]] == y)
                .expect("degenerate cell is s_i d_i of itself for some i");
            word.push(i);
            y = self.face[level][i][y];
            level -= 1;
        }
        word.reverse();
        (level, y, word)
    }

    /// Checks every simplicial identity within the truncation.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let d = |n: usize, i: usize, x: usize| self.face[n][i][x];
        let s = |n: usize, i: usize, x: usize| self.degen[n][i][x];
        for n in 0..=self.dim {
            for x in 0..self.sizes[n] {
                let witness = || format!("cell ({n}, {x})");
                if n >= 2 {
                    for j in 1..=n {
                        for i in 0..j {
                            let lhs = d(n - 1, i, d(n, j, x));
                            let rhs = d(n - 1, j - 1, d(n, i, x));
                            if lhs != rhs {
                                report.push(
                                    "face-face",
                                    witness(),
                                    format!("d_{i} d_{j} = {lhs} but d_{} d_{i} = {rhs}", j - 1),
                                );
                            }
                        }
                    }
                }
                if n + 2 <= self.dim {
                    for j in 0..=n {
                        for i in 0..=j {
                            let lhs = s(n + 1, i, s(n, j, x));
                            let rhs = s(n + 1, j + 1, s(n, i, x));
                            if lhs != rhs {
                                report.push(
                                    "degeneracy-degeneracy",
                                    witness(),
                                    format!("s_{i} s_{j} = {lhs} but s_{} s_{i} = {rhs}", j + 1),
                                );
                            }
                        }
                    }
                }
                if n < self.dim {
                    for j in 0..=n {
                        let y = s(n, j, x);
                        for i in 0..=n + 1 {
                            let lhs = d(n + 1, i, y);
                            let (rhs, rule) = if i == j || i == j + 1 {
                                (x, "x".to_string())
                            } else if i < j {
                                (s(n - 1, j - 1, d(n, i, x)), format!("s_{} d_{i} x", j - 1))
                            } else {
                                (s(n - 1, j, d(n, i - 1, x)), format!("s_{j} d_{} x", i - 1))
                            };
                            if lhs != rhs {
                                report.push(
                                    "face-degeneracy",
                                    witness(),
                                    format!("d_{i} s_{j} x = {lhs} but {rule} = {rhs}"),
                                );
                            }
                        }
                    }
                }
            }
        }
        report
    }

    /// Restriction to levels `0..=dim`.
    pub fn truncate(&self, dim: usize) -> SimplicialSet {
        let dim = dim.min(self.dim);
        let mut degen = self.degen[..=dim].to_vec();
        degen[dim] = Vec::new();
        Self::from_tables(dim, self.sizes[..=dim].to_vec(), self.face[..=dim].to_vec(), degen)
    }
}

/// Degeneracy word (in application order) of a surjection `[s] → [m]` given by
/// its values: split off the first repeat, `ε = s_t ∘ ε'`.
pub(crate) fn surjection_word(values: &[usize]) -> Vec<usize> {
    let mut v = values.to_vec();
    let mut outer = Vec::new();
    while let Some(t) = (0..v.len().saturating_sub(1)).find(|&t| v[t] == v[t + 1]) {
        outer.push(t);
        v.remove(t + 1);
    }
    outer.reverse();
    outer
}

/// A simplicial set whose cells carry labels, built from a face and
/// degeneracy rule on labels.
#[derive(Clone, Debug)]
pub struct LabeledSet<L> {
    pub set: SimplicialSet,
    pub labels: Vec<Vec<L>>,
    pub index: Vec<HashMap<L, usize>>,
}

impl<L: Clone + Eq + Hash> LabeledSet<L> {
    /// `levels[n]` lists the `n`-cells in their canonical order. The rules
    /// receive `(n, label, i)` and must land in `levels[n - 1]` and
    /// `levels[n + 1]`.
    pub fn build(
        levels: Vec<Vec<L>>,
        face: impl Fn(usize, &L, usize) -> L,
        degen: impl Fn(usize, &L, usize) -> L,
    ) -> Self {
        let dim = levels.len() - 1;
        let index: Vec<HashMap<L, usize>> = levels
            .iter()
            .map(|lv| lv.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect())
            .collect();
        let look = |n: usize, l: &L| -> usize {
            *index[n].get(l).expect("labelled builder produced a label outside the level list")
        };
        let face_t = (0..=dim)
            .map(|n| {
                if n == 0 {
                    return Vec::new();
                }
                (0..=n)
                    .map(|i| levels[n].iter().map(|l| look(n - 1, &face(n, l, i))).collect())
                    .collect()
            })
            .collect();
        let degen_t = (0..=dim)
            .map(|n| {
                if n == dim {
                    return Vec::new();
                }
                (0..=n)
                    .map(|i| levels[n].iter().map(|l| look(n + 1, &degen(n, l, i))).collect())
                    .collect()
            })
            .collect();
        let sizes = levels.iter().map(Vec::len).collect();
        LabeledSet {
            set: SimplicialSet::from_tables(dim, sizes, face_t, degen_t),
            labels: levels,
            index,
        }
    }

    pub fn cell(&self, n: usize, label: &L) -> Option<usize> {
        self.index[n].get(label).copied()
    }
}

/// Monotone sequences of length `len` with values in `0..=n`, lexicographic.
pub(crate) fn monotone_sequences(len: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(cur: &mut Vec<usize>, len: usize, lo: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in lo..=n {
            cur.push(v);
            go(cur, len, v, n, out);
            cur.pop();
        }
    }
    go(&mut cur, len, 0, n, &mut out);
    out
}

/// Monotone maps `[a] → [b]` as value lists, lexicographic.
pub fn monotone_maps(a: usize, b: usize) -> Vec<Vec<usize>> {
    monotone_sequences(a + 1, b)
}

pub(crate) fn drop_at<T: Clone>(v: &[T], i: usize) -> Vec<T> {
    let mut w = v.to_vec();
    w.remove(i);
    w
}

pub(crate) fn repeat_at<T: Clone>(v: &[T], i: usize) -> Vec<T> {
    let mut w = v.to_vec();
    w.insert(i, v[i].clone());
    w
}

/// Δⁿ truncated at `dim`, with its cells labelled by monotone maps `[k] → [n]`.
pub fn standard_simplex_labeled(n: usize, dim: usize) -> LabeledSet<Vec<usize>> {
    let levels = (0..=dim).map(|k| monotone_sequences(k + 1, n)).collect();
    LabeledSet::build(levels, |_, l, i| drop_at(l, i), |_, l, i| repeat_at(l, i))
}

/// Δⁿ truncated at `dim`; `k`-cells are monotone maps `[k] → [n]` in
/// lexicographic order.
pub fn standard_simplex(n: usize, dim: usize) -> SimplicialSet {
    standard_simplex_labeled(n, dim).set
}

/// The subcomplex of Δⁿ (truncated at `dim`) of simplices whose vertex set
/// satisfies `keep`; `keep` must be closed under taking subsets.
pub fn simplex_subcomplex(n: usize, dim: usize, keep: impl Fn(&[usize]) -> bool) -> LabeledSet<Vec<usize>> {
    let levels = (0..=dim)
        .map(|k| {
            monotone_sequences(k + 1, n)
                .into_iter()
                .filter(|s| {
                    let mut v = s.clone();
                    v.dedup();
                    keep(&v)
                })
                .collect()
        })
        .collect();
    LabeledSet::build(levels, |_, l, i| drop_at(l, i), |_, l, i| repeat_at(l, i))
}

/// ∂Δⁿ truncated at `dim`.
pub fn simplex_boundary(n: usize, dim: usize) -> LabeledSet<Vec<usize>> {
    simplex_subcomplex(n, dim, |v| v.len() <= n)
}

/// The horn Λⁿ_k truncated at `dim`: every face of Δⁿ except the top one
/// and the one opposite `k`.
pub fn horn(n: usize, k: usize, dim: usize) -> LabeledSet<Vec<usize>> {
    simplex_subcomplex(n, dim, move |v| v.len() < n || (v.len() == n && v.contains(&k)))
}

/// Levelwise product, truncated at the smaller dimension. The pair `(a, b)`
/// has index `a * |Y_n| + b`.
pub fn product(x: &SimplicialSet, y: &SimplicialSet) -> SimplicialSet {
    let dim = x.dim.min(y.dim);
    let sizes: Vec<usize> = (0..=dim).map(|n| x.sizes[n] * y.sizes[n]).collect();
    let pair = |n: usize, a: usize, b: usize| a * y.sizes[n] + b;
    let face = (0..=dim)
        .map(|n| {
            if n == 0 {
                return Vec::new();
            }
            (0..=n)
                .map(|i| {
                    (0..sizes[n])
                        .map(|c| {
                            let (a, b) = (c / y.sizes[n], c % y.sizes[n]);
                            pair(n - 1, x.face[n][i][a], y.face[n][i][b])
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let degen = (0..=dim)
        .map(|n| {
            if n == dim {
                return Vec::new();
            }
            (0..=n)
                .map(|i| {
                    (0..sizes[n])
                        .map(|c| {
                            let (a, b) = (c / y.sizes[n], c % y.sizes[n]);
                            pair(n + 1, x.degen[n][i][a], y.degen[n][i][b])
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    SimplicialSet::from_tables(dim, sizes, face, degen)
}

/// The two projections out of [`product`].
pub fn projections(x: &SimplicialSet, y: &SimplicialSet) -> (SimplicialMap, SimplicialMap) {
    let dim = x.dim.min(y.dim);
    let first = (0..=dim)
        .map(|n| (0..x.sizes[n] * y.sizes[n]).map(|c| c / y.sizes[n]).collect())
        .collect();
    let second = (0..=dim)
        .map(|n| (0..x.sizes[n] * y.sizes[n]).map(|c| c % y.sizes[n]).collect())
        .collect();
    (SimplicialMap::new(first), SimplicialMap::new(second))
}

/// Levelwise disjoint union; cells of `y` follow those of `x`.
pub fn disjoint_union(x: &SimplicialSet, y: &SimplicialSet) -> SimplicialSet {
    let dim = x.dim.min(y.dim);
    let sizes: Vec<usize> = (0..=dim).map(|n| x.sizes[n] + y.sizes[n]).collect();
    let join = |tx: &[usize], ty: &[usize], shift: usize| -> Vec<usize> {
        tx.iter().copied().chain(ty.iter().map(|&c| c + shift)).collect()
    };
    let face = (0..=dim)
        .map(|n| {
            if n == 0 {
                return Vec::new();
            }
            (0..=n).map(|i| join(&x.face[n][i], &y.face[n][i], x.sizes[n - 1])).collect()
        })
        .collect();
    let degen = (0..=dim)
        .map(|n| {
            if n == dim {
                return Vec::new();
            }
            (0..=n).map(|i| join(&x.degen[n][i], &y.degen[n][i], x.sizes[n + 1])).collect()
        })
        .collect();
    SimplicialSet::from_tables(dim, sizes, face, degen)
}

/// A levelwise function between simplicial sets, `levels[n][x]` the image of
/// the `n`-cell `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialMap {
    levels: Vec<Vec<usize>>,
}

impl SimplicialMap {
    pub fn new(levels: Vec<Vec<usize>>) -> Self {
        SimplicialMap { levels }
    }

    pub fn identity(x: &SimplicialSet) -> Self {
        Self::new(x.sizes.iter().map(|&s| (0..s).collect()).collect())
    }

    pub fn dim(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    pub fn levels(&self) -> &[Vec<usize>] {
        &self.levels
    }

    pub fn apply(&self, n: usize, x: usize) -> usize {
        self.levels[n][x]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SimplicialMap) -> SimplicialMap {
        let dim = self.dim().min(other.dim());
        Self::new(
            (0..=dim)
                .map(|n| self.levels[n].iter().map(|&x| other.levels[n][x]).collect())
                .collect(),
        )
    }

    /// Checks shapes, ranges and commutation with every operator in range.
    pub fn validate(&self, source: &SimplicialSet, target: &SimplicialSet) -> ValidationReport {
        let mut report = ValidationReport::new();
        let dim = source.dim.min(target.dim);
        if self.levels.len() != dim + 1 {
            report.push(
                "shape",
                "map",
                format!("{} levels, expected {}", self.levels.len(), dim + 1),
            );
            return report;
        }
        for n in 0..=dim {
            if self.levels[n].len() != source.sizes[n] {
                report.push("shape", format!("level {n}"), "wrong number of entries");
                return report;
            }
            if let Some(x) = self.levels[n].iter().position(|&y| y >= target.sizes[n]) {
                report.push("range", format!("cell ({n}, {x})"), "image out of range");
                return report;
            }
        }
        for n in 0..=dim {
            for x in 0..source.sizes[n] {
                let fx = self.levels[n][x];
                if n > 0 {
                    for i in 0..=n {
                        let a = self.levels[n - 1][source.face[n][i][x]];
                        let b = target.face[n][i][fx];
                        if a != b {
                            report.push(
                                "face-commutation",
                                format!("cell ({n}, {x})"),
                                format!("f d_{i} x = {a} but d_{i} f x = {b}"),
                            );
                        }
                    }
                }
                if n < dim {
                    for i in 0..=n {
                        let a = self.levels[n + 1][source.degen[n][i][x]];
                        let b = target.degen[n][i][fx];
                        if a != b {
                            report.push(
                                "degeneracy-commutation",
                                format!("cell ({n}, {x})"),
                                format!("f s_{i} x = {a} but s_{i} f x = {b}"),
                            );
                        }
                    }
                }
            }
        }
        report
    }

    /// Whether each level is a bijection onto a target of the same size.
    pub fn is_isomorphism(&self, target: &SimplicialSet) -> bool {
        self.levels.iter().enumerate().all(|(n, l)| {
            l.len() == target.sizes[n] && {
                let mut seen = vec![false; l.len()];
                l.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn simplex_sizes() {
        assert_eq!(standard_simplex(1, 3).sizes(), &[2, 3, 4, 5]);
        assert_eq!(standard_simplex(0, 2).sizes(), &[1, 1, 1]);
        assert_eq!(standard_simplex(2, 1).sizes(), &[3, 6]);
        for n in 0..5 {
            let s = standard_simplex(n, 4);
            for k in 0..=4 {
                assert_eq!(s.size(k), binom(n + k + 1, k + 1));
            }
            assert!(s.validate().is_ok());
        }
    }

    #[test]
    fn product_of_intervals() {
        let i = standard_simplex(1, 3);
        let p = product(&i, &i);
        assert_eq!(p.size(1), 9);
        assert_eq!(&p.nondegenerate_counts()[..3], &[4, 5, 2]);
        assert!(p.validate().is_ok());
        let (a, b) = projections(&i, &i);
        assert!(a.validate(&p, &i).is_ok());
        assert!(b.validate(&p, &i).is_ok());
    }

    #[test]
    fn unit_law_for_product() {
        let x = standard_simplex(2, 3);
        let p = product(&SimplicialSet::point(3), &x);
        let (_, second) = projections(&SimplicialSet::point(3), &x);
        assert!(second.is_isomorphism(&x));
        assert!(second.validate(&p, &x).is_ok());
    }

    #[test]
    fn apply_matches_labels() {
        let s = standard_simplex_labeled(3, 3);
        for k in 0..=3 {
            for (x, lab) in s.labels[k].iter().enumerate() {
                for j in 0..=3 {
                    for alpha in monotone_sequences(j + 1, k) {
                        let want: Vec<usize> = alpha.iter().map(|&a| lab[a]).collect();
                        let got = s.set.apply(k, x, &alpha);
                        assert_eq!(s.labels[j][got], want);
                    }
                }
            }
        }
    }

    #[test]
    fn ez_recovers_cell() {
        let s = standard_simplex_labeled(2, 4);
        for k in 0..=4 {
            for x in 0..s.set.size(k) {
                let (m, y, word) = s.set.ez(k, x);
                assert!(s.set.is_nondegenerate(m, y));
                assert_eq!(s.set.apply_degeneracies(m, y, &word), x);
                let mut distinct = s.labels[k][x].clone();
                distinct.dedup();
                assert_eq!(s.labels[m][y], distinct);
            }
        }
    }

    #[test]
    fn planted_face_defect_is_one_violation() {
        let s = standard_simplex_labeled(2, 2);
        let mut face = s.set.face.clone();
        let top = s.cell(2, &vec![0, 1, 2]).unwrap();
        face[2][1][top] = s.cell(1, &vec![0, 1]).unwrap();
        let broken = SimplicialSet::from_parts(2, s.set.sizes.clone(), face, s.set.degen.clone()).unwrap();
        let report = broken.validate();
        assert_eq!(report.len(), 1, "{report}");
        assert_eq!(report.violations[0].witness, format!("cell (2, {top})"));
    }

    #[test]
    fn from_parts_rejects_out_of_range() {
        let s = standard_simplex(1, 1);
        let mut face = s.face.clone();
        face[1][0][0] = 7;
        assert!(SimplicialSet::from_parts(1, s.sizes.clone(), face, s.degen.clone()).is_err());
    }

    #[test]
    fn empty_and_truncation_zero() {
        let e = SimplicialSet::empty(0);
        assert!(e.validate().is_ok());
        assert!(e.is_empty());
        let p = SimplicialSet::point(0);
        assert_eq!(p.sizes(), &[1]);
        assert!(product(&e, &p).is_empty());
    }
}
