//! The binerve of a simplicial category and the classifying space.

use crate::bisset::{BisimplicialSet, MarkedBisimplicialSet};
use crate::category::{nerve_cat_labeled, RelativeSimplicialCategory, SimplicialCategory};
use crate::sset::{LabeledSet, SimplicialSet};
use crate::{Error, Result};

/// A `(p, q)`-cell of the binerve, read as a functor `[p]_{Δ^q} → C`:
/// objects `X_0, …, X_p` and cells `y_k ∈ hom(X_{k−1}, X_k)_q`
/// (`cells[k − 1]`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chain {
    pub objects: Vec<usize>,
    pub cells: Vec<usize>,
}

/// `N_bi(C)` with row `q` the nerve of `C_q`, together with the decoding
/// of its cells.
#[derive(Clone, Debug)]
pub struct Binerve {
    pub marked: MarkedBisimplicialSet,
    rows: Vec<LabeledSet<Vec<usize>>>,
    offsets: Vec<Vec<usize>>,
    objects: usize,
}

impl Binerve {
    pub fn space(&self) -> &BisimplicialSet {
        self.marked.space()
    }

    pub fn dims(&self) -> (usize, usize) {
        self.space().dims()
    }

    /// Splits a morphism number of `C_q` into `(x, y, cell)`.
    pub fn morphism(&self, q: usize, m: usize) -> (usize, usize, usize) {
        let off = &self.offsets[q];
        let pair = off.partition_point(|&o| o <= m) - 1;
        // empty homs share an offset with the next pair
        let (x, y) = (pair / self.objects, pair % self.objects);
        (x, y, m - off[pair])
    }

    pub fn morphism_number(&self, q: usize, x: usize, y: usize, cell: usize) -> usize {
        self.offsets[q][x * self.objects + y] + cell
    }

    pub fn chain(&self, p: usize, q: usize, c: usize) -> Chain {
        let label = &self.rows[q].labels[p][c];
        if p == 0 {
            return Chain {
                objects: vec![label[0]],
                cells: Vec::new(),
            };
        }
        let mut objects = Vec::with_capacity(p + 1);
        let mut cells = Vec::with_capacity(p);
        for (k, &m) in label.iter().enumerate() {
            let (x, y, cell) = self.morphism(q, m);
            if k == 0 {
                objects.push(x);
            }
            objects.push(y);
            cells.push(cell);
        }
        Chain { objects, cells }
    }

    pub fn find(&self, p: usize, q: usize, chain: &Chain) -> Option<usize> {
        if p == 0 {
            return self.rows[q].cell(0, &chain.objects);
        }
        let label: Vec<usize> = (0..p)
            .map(|k| self.morphism_number(q, chain.objects[k], chain.objects[k + 1], chain.cells[k]))
            .collect();
        self.rows[q].cell(p, &label)
    }
}

/// `N_bi(C, W)⁺` up to bidegree `(P, Q)`, `Q ≤ D`.
pub fn binerve_marked(rel: &RelativeSimplicialCategory, cols: usize, rows: usize) -> Result<Binerve> {
    let sc = rel.cat();
    if rows > sc.dim() {
        return Err(Error::truncation("binerve rows", rows, sc.dim()));
    }
    let n = sc.objects();
    let nerves: Vec<LabeledSet<Vec<usize>>> = (0..=rows)
        .map(|q| Ok(nerve_cat_labeled(&sc.level_category(q)?, cols)))
        .collect::<Result<_>>()?;
    let offsets: Vec<Vec<usize>> = (0..=rows).map(|q| sc.level_offsets(q)).collect();
    let decode = |q: usize, m: usize| -> (usize, usize, usize) {
        let off = &offsets[q];
        let pair = off.partition_point(|&o| o <= m) - 1;
        (pair / n, pair % n, m - off[pair])
    };
    // vertical operators act on every morphism of a chain
    let vertical = |p: usize, q: usize, to: usize, op: &dyn Fn(&SimplicialSet, usize) -> usize| -> Vec<usize> {
        nerves[q].labels[p]
            .iter()
            .map(|label| {
                if p == 0 {
                    return nerves[to].cell(0, label).expect("objects agree in every row");
                }
                let image: Vec<usize> = label
                    .iter()
                    .map(|&m| {
                        let (x, y, c) = decode(q, m);
                        offsets[to][x * n + y] + op(sc.hom(x, y), c)
                    })
                    .collect();
                nerves[to].cell(p, &image).expect("operators send chains to chains")
            })
            .collect()
    };
    let grid = |f: &dyn Fn(usize, usize) -> Vec<Vec<usize>>| -> Vec<Vec<Vec<Vec<usize>>>> {
        (0..=cols).map(|p| (0..=rows).map(|q| f(p, q)).collect()).collect()
    };
    let sizes = (0..=cols).map(|p| (0..=rows).map(|q| nerves[q].set.size(p)).collect()).collect();
    let hface = grid(&|p, q| {
        if p == 0 {
            Vec::new()
        } else {
            (0..=p).map(|i| nerves[q].set.face_table(p, i).to_vec()).collect()
        }
    });
    let hdegen = grid(&|p, q| {
        if p == cols {
            Vec::new()
        } else {
            (0..=p).map(|i| nerves[q].set.degen_table(p, i).to_vec()).collect()
        }
    });
    let vface = grid(&|p, q| {
        if q == 0 {
            Vec::new()
        } else {
            (0..=q).map(|i| vertical(p, q, q - 1, &|h, c| h.face(q, i, c))).collect()
        }
    });
    let vdegen = grid(&|p, q| {
        if q == rows {
            Vec::new()
        } else {
            (0..=q).map(|i| vertical(p, q, q + 1, &|h, c| h.degen(q, i, c))).collect()
        }
    });
    let space = BisimplicialSet::from_parts((cols, rows), sizes, hface, hdegen, vface, vdegen)?;
    let marking = if cols == 0 {
        Vec::new()
    } else {
        (0..=rows)
            .map(|q| {
                (0..nerves[q].set.size(1))
                    .map(|c| {
                        let (x, y, cell) = decode(q, nerves[q].labels[1][c][0]);
                        rel.in_sub(x, y, q, cell)
                    })
                    .collect()
            })
            .collect()
    };
    Ok(Binerve {
        marked: MarkedBisimplicialSet::new(space, marking)?,
        rows: nerves,
        offsets,
        objects: n,
    })
}

/// The binerve with the minimal marking.
pub fn binerve(sc: &SimplicialCategory, cols: usize, rows: usize) -> Result<Binerve> {
    binerve_marked(&RelativeSimplicialCategory::identities(sc.clone()), cols, rows)
}

/// `B(C) = diag N_bi(C)` up to level `L ≤ D`.
pub fn classifying_space(sc: &SimplicialCategory, max_level: usize) -> Result<SimplicialSet> {
    Ok(binerve(sc, max_level, max_level)?.space().diagonal())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{nerve_cat, FiniteCategory};
    use crate::sset::FinitePoset;

    fn bg_z2(d: usize) -> SimplicialCategory {
        SimplicialCategory::bg(&FiniteCategory::cyclic(2), d).unwrap()
    }

    #[test]
    fn bg_z2_rows_and_columns() {
        let sc = bg_z2(3);
        let b = binerve_marked(&RelativeSimplicialCategory::whole(sc.clone()), 3, 3).unwrap();
        assert!(b.marked.validate().is_ok());
        assert_eq!(b.space().row(0), SimplicialSet::point(3));
        assert_eq!(&b.space().column(1), sc.hom(0, 0));
        for q in 0..=3 {
            assert!(b.marked.marking()[q].iter().all(|&m| m));
        }
    }

    #[test]
    fn classifying_space_counts() {
        let sizes = classifying_space(&bg_z2(3), 3).unwrap().sizes().to_vec();
        assert_eq!(sizes, vec![1, 2, 16, 512]);
    }

    #[test]
    fn discrete_rows_agree() {
        let c = FiniteCategory::poset(&FinitePoset::chain(2));
        let sc = SimplicialCategory::discrete(&c, 2);
        let b = binerve(&sc, 3, 2).unwrap();
        for q in 0..=2 {
            assert_eq!(b.space().row(q), nerve_cat(&c, 3));
        }
    }

    #[test]
    fn chains_round_trip() {
        let b = binerve(&bg_z2(2), 3, 2).unwrap();
        for p in 0..=3 {
            for q in 0..=2 {
                for c in 0..b.space().size(p, q) {
                    assert_eq!(b.find(p, q, &b.chain(p, q, c)), Some(c));
                }
            }
        }
    }

    #[test]
    fn rows_beyond_truncation() {
        assert!(matches!(binerve(&bg_z2(1), 2, 2), Err(Error::Truncation { .. })));
    }
}
