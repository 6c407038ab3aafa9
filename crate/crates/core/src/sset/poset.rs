use super::{drop_at, repeat_at, LabeledSet, SimplicialSet};
use crate::{Error, Result};

/// A partial order on `0..len`, stored as a dense relation matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    len: usize,
    leq: Vec<bool>,
}

impl FinitePoset {
    /// `leq(a, b)` must be reflexive, antisymmetric and transitive.
    pub fn new(len: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let table: Vec<bool> = (0..len * len).map(|k| leq(k / len, k % len)).collect();
        let p = FinitePoset { len, leq: table };
        for a in 0..len {
            if !p.leq(a, a) {
                return Err(Error::Malformed(format!("poset relation not reflexive at {a}")));
            }
            for b in 0..len {
                if a != b && p.leq(a, b) && p.leq(b, a) {
                    return Err(Error::Malformed(format!("poset relation not antisymmetric at {a}, {b}")));
                }
                for c in 0..len {
                    if p.leq(a, b) && p.leq(b, c) && !p.leq(a, c) {
                        return Err(Error::Malformed(format!("poset relation not transitive at {a}, {b}, {c}")));
                    }
                }
            }
        }
        Ok(p)
    }

    /// Reflexive-transitive closure of the given pairs `a ≤ b`.
    pub fn from_relations(len: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if let Some(&(a, b)) = pairs.iter().find(|&&(a, b)| a >= len || b >= len) {
            return Err(Error::Malformed(format!("relation {a} ≤ {b} mentions a missing element")));
        }
        let mut rel = vec![false; len * len];
        for a in 0..len {
            rel[a * len + a] = true;
        }
        for &(a, b) in pairs {
            rel[a * len + b] = true;
        }
        for k in 0..len {
            for a in 0..len {
                if rel[a * len + k] {
                    for b in 0..len {
                        if rel[k * len + b] {
                            rel[a * len + b] = true;
                        }
                    }
                }
            }
        }
        Self::new(len, |a, b| rel[a * len + b])
    }

    /// The chain `0 < 1 < ⋯ < n`.
    pub fn chain(n: usize) -> Self {
        FinitePoset {
            len: n + 1,
            leq: (0..(n + 1) * (n + 1)).map(|k| k / (n + 1) <= k % (n + 1)).collect(),
        }
    }

    pub fn antichain(len: usize) -> Self {
        FinitePoset {
            len,
            leq: (0..len * len).map(|k| k / len == k % len).collect(),
        }
    }

    /// Product order on `[p] × [q]`; `(a, b)` is element `a * (q + 1) + b`.
    pub fn grid(p: usize, q: usize) -> Self {
        let w = q + 1;
        let len = (p + 1) * w;
        FinitePoset {
            len,
            leq: (0..len * len)
                .map(|k| {
                    let (x, y) = (k / len, k % len);
                    x / w <= y / w && x % w <= y % w
                })
                .collect(),
        }
    }

    /// Subsets of `{0..=g}` containing `0` and `g` under inclusion; the
    /// subset with middle elements `m` is element `Σ 2^(t-1)` over `t ∈ m`.
    pub fn cube(g: usize) -> Self {
        assert!(g >= 1);
        let len = 1usize << (g - 1);
        FinitePoset {
            len,
            leq: (0..len * len).map(|k| (k / len) & !(k % len) == 0).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len + b]
    }
}

/// Weakly increasing chains of each length, lexicographic in element order.
fn chains(p: &FinitePoset, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(p: &FinitePoset, cur: &mut Vec<usize>, len: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for e in 0..p.len() {
            if cur.last().map_or(true, |&l| p.leq(l, e)) {
                cur.push(e);
                go(p, cur, len, out);
                cur.pop();
            }
        }
    }
    go(p, &mut cur, len, &mut out);
    out
}

/// The nerve of `p` truncated at `dim`, with cells labelled by chains.
pub fn poset_nerve_labeled(p: &FinitePoset, dim: usize) -> LabeledSet<Vec<usize>> {
    let levels = (0..=dim).map(|k| chains(p, k + 1)).collect();
    LabeledSet::build(levels, |_, l, i| drop_at(l, i), |_, l, i| repeat_at(l, i))
}

/// The nerve of `p` truncated at `dim`: `k`-cells are weakly increasing
/// chains `x_0 ≤ ⋯ ≤ x_k`, lexicographic.
pub fn poset_nerve(p: &FinitePoset, dim: usize) -> SimplicialSet {
    poset_nerve_labeled(p, dim).set
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{product, standard_simplex};

    #[test]
    fn two_chain_is_interval() {
        assert_eq!(poset_nerve(&FinitePoset::chain(1), 3), standard_simplex(1, 3));
    }

    #[test]
    fn square_cube_counts() {
        let n = poset_nerve(&FinitePoset::cube(3), 3);
        assert_eq!(n.nondegenerate_counts(), vec![4, 5, 2, 0]);
        assert!(n.validate().is_ok());
        let i = standard_simplex(1, 3);
        assert_eq!(product(&i, &i).sizes(), n.sizes());
    }

    #[test]
    fn antichain_is_discrete() {
        let n = poset_nerve(&FinitePoset::antichain(3), 3);
        assert_eq!(n.sizes(), &[3, 3, 3, 3]);
        assert_eq!(n.nondegenerate_counts(), vec![3, 0, 0, 0]);
    }

    #[test]
    fn relations_close_transitively() {
        let p = FinitePoset::from_relations(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.leq(0, 2));
        assert!(FinitePoset::from_relations(2, &[(0, 1), (1, 0)]).is_err());
    }
}
