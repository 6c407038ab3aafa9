use std::collections::HashMap;

use crate::report::ValidationReport;
use crate::sset::{FinitePoset, LabeledSet, SimplicialSet};
use crate::{Error, Result};

/// A finite category. Morphisms are `0..morphisms()`; `compose(g, f)` is
/// `g ∘ f`, defined when `target(f) == source(g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCategory {
    objects: usize,
    src: Vec<usize>,
    tgt: Vec<usize>,
    ids: Vec<usize>,
    comp: HashMap<(usize, usize), usize>,
}

impl FiniteCategory {
    /// Builds from raw data; `comp(g, f)` is queried for every composable pair.
    pub fn from_parts(
        objects: usize,
        src: Vec<usize>,
        tgt: Vec<usize>,
        ids: Vec<usize>,
        comp: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        if src.len() != tgt.len() || ids.len() != objects {
            return Err(Error::Malformed("category tables have inconsistent lengths".into()));
        }
        let m = src.len();
        if src.iter().chain(&tgt).any(|&o| o >= objects) || ids.iter().any(|&i| i >= m) {
            return Err(Error::Malformed("category data out of range".into()));
        }
        let mut table = HashMap::new();
        for g in 0..m {
            for f in 0..m {
                if tgt[f] == src[g] {
                    let h = comp(g, f);
                    if h >= m {
                        return Err(Error::Malformed(format!("composite of {g} and {f} out of range")));
                    }
                    table.insert((g, f), h);
                }
            }
        }
        let c = FiniteCategory {
            objects,
            src,
            tgt,
            ids,
            comp: table,
        };
        c.validate().into_result("category", c)
    }

    pub(crate) fn from_table(
        objects: usize,
        src: Vec<usize>,
        tgt: Vec<usize>,
        ids: Vec<usize>,
        comp: HashMap<(usize, usize), usize>,
    ) -> Self {
        FiniteCategory {
            objects,
            src,
            tgt,
            ids,
            comp,
        }
    }

    /// A poset as a category; morphisms are the pairs `a ≤ b` in
    /// lexicographic order.
    pub fn poset(p: &FinitePoset) -> Self {
        let mut pairs = Vec::new();
        for a in 0..p.len() {
            for b in 0..p.len() {
                if p.leq(a, b) {
                    pairs.push((a, b));
                }
            }
        }
        let pos: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &ab)| (ab, i)).collect();
        let mut comp = HashMap::new();
        for (g, &(b, c)) in pairs.iter().enumerate() {
            for (f, &(a, b2)) in pairs.iter().enumerate() {
                if b == b2 {
                    comp.insert((g, f), pos[&(a, c)]);
                }
            }
        }
        FiniteCategory {
            objects: p.len(),
            src: pairs.iter().map(|&(a, _)| a).collect(),
            tgt: pairs.iter().map(|&(_, b)| b).collect(),
            ids: (0..p.len()).map(|a| pos[&(a, a)]).collect(),
            comp,
        }
    }

    /// A finite group as a one-object category. Morphism `g` is the group
    /// element `g`; element `0` must be the unit.
    pub fn group(order: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        Self::from_parts(1, vec![0; order], vec![0; order], vec![0], mul)
    }

    /// The cyclic group of order `n`.
    pub fn cyclic(n: usize) -> Self {
        Self::group(n, |a, b| (a + b) % n).expect("cyclic group is a category")
    }

    /// The trivial one-object category.
    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn objects(&self) -> usize {
        self.objects
    }

    pub fn morphisms(&self) -> usize {
        self.src.len()
    }

    pub fn source(&self, f: usize) -> usize {
        self.src[f]
    }

    pub fn target(&self, f: usize) -> usize {
        self.tgt[f]
    }

    pub fn identity(&self, x: usize) -> usize {
        self.ids[x]
    }

    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.comp.get(&(g, f)).copied()
    }

    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.morphisms()).filter(|&f| self.src[f] == x && self.tgt[f] == y).collect()
    }

    /// Whether `f` has a two-sided inverse.
    pub fn is_iso(&self, f: usize) -> bool {
        self.hom(self.tgt[f], self.src[f]).into_iter().any(|g| {
            self.compose(g, f) == Some(self.ids[self.src[f]]) && self.compose(f, g) == Some(self.ids[self.tgt[f]])
        })
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        let m = self.morphisms();
        for x in 0..self.objects {
            let i = self.ids[x];
            if self.src[i] != x || self.tgt[i] != x {
                r.push("identity", format!("object {x}"), "identity has wrong endpoints");
            }
        }
        for g in 0..m {
            for f in 0..m {
                let composable = self.tgt[f] == self.src[g];
                match (composable, self.compose(g, f)) {
                    (true, None) => r.push("composition", format!("pair ({g}, {f})"), "composable but undefined"),
                    (false, Some(_)) => r.push("composition", format!("pair ({g}, {f})"), "defined on a non-composable pair"),
                    (true, Some(h)) => {
                        if self.src[h] != self.src[f] || self.tgt[h] != self.tgt[g] {
                            r.push("composition", format!("pair ({g}, {f})"), "composite has wrong endpoints");
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        if !r.is_ok() {
            return r;
        }
        for f in 0..m {
            if self.compose(self.ids[self.tgt[f]], f) != Some(f) || self.compose(f, self.ids[self.src[f]]) != Some(f) {
                r.push("unit", format!("morphism {f}"), "identity does not act trivially");
            }
        }
        for h in 0..m {
            for g in 0..m {
                if self.tgt[g] != self.src[h] {
                    continue;
                }
                let hg = self.comp[&(h, g)];
                for f in 0..m {
                    if self.tgt[f] != self.src[g] {
                        continue;
                    }
                    if self.comp[&(hg, f)] != self.comp[&(h, self.comp[&(g, f)])] {
                        r.push("associativity", format!("triple ({h}, {g}, {f})"), "(hg)f ≠ h(gf)");
                    }
                }
            }
        }
        r
    }
}

/// Label of a nerve cell: `[x]` for an object at level 0, otherwise the
/// composable morphisms `f_1, …, f_n` with `f_k : X_{k-1} → X_k`.
pub fn nerve_cat_labeled(c: &FiniteCategory, dim: usize) -> LabeledSet<Vec<usize>> {
    let mut outgoing = vec![Vec::new(); c.objects()];
    for f in 0..c.morphisms() {
        outgoing[c.source(f)].push(f);
    }
    let mut levels = vec![(0..c.objects()).map(|x| vec![x]).collect::<Vec<_>>()];
    for n in 1..=dim {
        let prev = &levels[n - 1];
        let mut next = Vec::new();
        if n == 1 {
            next = (0..c.morphisms()).map(|f| vec![f]).collect();
        } else {
            for chain in prev {
                let last = *chain.last().expect("chains of positive length");
                for &g in &outgoing[c.target(last)] {
                    let mut ch = chain.clone();
                    ch.push(g);
                    next.push(ch);
                }
            }
        }
        levels.push(next);
    }
    let face = |n: usize, l: &Vec<usize>, i: usize| -> Vec<usize> {
        if n == 1 {
            return vec![if i == 0 { c.target(l[0]) } else { c.source(l[0]) }];
        }
        let mut out = Vec::with_capacity(n - 1);
        for k in 0..n {
            if (i == 0 && k == 0) || (i == n && k == n - 1) {
                continue;
            }
            if i > 0 && i < n && k == i - 1 {
                out.push(c.compose(l[i], l[i - 1]).expect("chain is composable"));
                continue;
            }
            if i > 0 && i < n && k == i {
                continue;
            }
            out.push(l[k]);
        }
        out
    };
    let degen = |n: usize, l: &Vec<usize>, i: usize| -> Vec<usize> {
        if n == 0 {
            return vec![c.identity(l[0])];
        }
        let obj = if i == 0 { c.source(l[0]) } else { c.target(l[i - 1]) };
        let mut out = l.clone();
        out.insert(i, c.identity(obj));
        out
    };
    LabeledSet::build(levels, face, degen)
}

/// The nerve of `c` truncated at `dim`; `n`-cells are composable chains in
/// lexicographic order of morphism indices.
pub fn nerve_cat(c: &FiniteCategory, dim: usize) -> SimplicialSet {
    nerve_cat_labeled(c, dim).set
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{poset_nerve, standard_simplex};

    #[test]
    fn nerve_sizes() {
        let one = FiniteCategory::poset(&FinitePoset::chain(1));
        assert_eq!(nerve_cat(&one, 3).sizes(), &[2, 3, 4, 5]);
        assert_eq!(nerve_cat(&FiniteCategory::trivial(), 2).sizes(), &[1, 1, 1]);
        let z2 = nerve_cat(&FiniteCategory::cyclic(2), 3);
        assert_eq!(z2.sizes(), &[1, 2, 4, 8]);
        assert!(z2.validate().is_ok());
    }

    #[test]
    fn poset_nerves_agree() {
        for n in 0..4 {
            let p = FinitePoset::chain(n);
            assert_eq!(nerve_cat(&FiniteCategory::poset(&p), 3), poset_nerve(&p, 3));
            assert_eq!(poset_nerve(&p, 3), standard_simplex(n, 3));
        }
    }

    #[test]
    fn isos() {
        let z3 = FiniteCategory::cyclic(3);
        assert!((0..3).all(|f| z3.is_iso(f)));
        let one = FiniteCategory::poset(&FinitePoset::chain(1));
        assert_eq!((0..3).filter(|&f| one.is_iso(f)).count(), 2);
    }

    #[test]
    fn broken_associativity_is_reported() {
        // a "monoid" on {0, 1, 2} with 1·1 = 2, 2·x = 2 except 1·2 = 1
        let r = FiniteCategory::from_parts(1, vec![0; 3], vec![0; 3], vec![0], |g, f| match (g, f) {
            (0, x) | (x, 0) => x,
            (1, 1) => 2,
            (1, 2) => 1,
            _ => 2,
        });
        assert!(r.is_err());
    }
}
