//! Connected components.

use crate::sset::SimplicialSet;

/// Union–find with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }

    /// Classes sorted by least element, each sorted.
    pub fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut slot = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for v in 0..n {
            let r = self.find(v);
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(v);
        }
        out
    }
}

/// The partition of vertices into path components.
pub fn pi0(x: &SimplicialSet) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(x.size(0));
    if x.dim() >= 1 {
        for e in 0..x.size(1) {
            uf.union(x.face(1, 0, e), x.face(1, 1, e));
        }
    }
    uf.classes()
}

/// Component label of every vertex, numbered as in [`pi0`].
pub fn component_labels(x: &SimplicialSet) -> Vec<usize> {
    let mut of = vec![0; x.size(0)];
    for (k, class) in pi0(x).iter().enumerate() {
        for &v in class {
            of[v] = k;
        }
    }
    of
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{nerve_cat, FiniteCategory};
    use crate::sset::{disjoint_union, poset_nerve, standard_simplex, FinitePoset};

    #[test]
    fn spec_cases() {
        let pt = standard_simplex(0, 2);
        assert_eq!(pi0(&disjoint_union(&pt, &pt)).len(), 2);
        assert_eq!(pi0(&nerve_cat(&FiniteCategory::cyclic(2), 2)).len(), 1);
        assert_eq!(pi0(&poset_nerve(&FinitePoset::antichain(3), 2)).len(), 3);
        assert_eq!(pi0(&SimplicialSet::empty(1)).len(), 0);
    }

    #[test]
    fn labels_follow_classes() {
        let x = poset_nerve(&FinitePoset::from_relations(4, &[(0, 2)]).unwrap(), 1);
        assert_eq!(component_labels(&x), vec![0, 1, 0, 2]);
    }
}
