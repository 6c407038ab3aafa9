//! Bisimplicial sets and marked bisimplicial sets.
//!
//! `cells[p][q]` has `p` as the column index and `q` as the row index:
//! column `p` is the simplicial set `X_{p,*}` (vertical operators act on `q`)
//! and row `q` is `X_{*,q}` (horizontal operators act on `p`).

use crate::report::ValidationReport;
use crate::sset::{MarkedSimplicialSet, SimplicialSet};
use crate::{Error, Result};

type Tables = Vec<Vec<Vec<Vec<usize>>>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BisimplicialSet {
    cols: usize,
    rows: usize,
    sizes: Vec<Vec<usize>>,
    hface: Tables,
    hdegen: Tables,
    vface: Tables,
    vdegen: Tables,
}

impl BisimplicialSet {
    /// `hface[p][q][i][x]` is `d^h_i` of the `(p, q)`-cell `x`, and so on;
    /// tables for operators out of range are empty.
    pub fn from_parts(
        dims: (usize, usize),
        sizes: Vec<Vec<usize>>,
        hface: Tables,
        hdegen: Tables,
        vface: Tables,
        vdegen: Tables,
    ) -> Result<Self> {
        let (pp, qq) = dims;
        let bad = |m: String| Err(Error::Malformed(m));
        if sizes.len() != pp + 1 || sizes.iter().any(|r| r.len() != qq + 1) {
            return bad("cell grid has the wrong shape".into());
        }
        for (name, t) in [("hface", &hface), ("hdegen", &hdegen), ("vface", &vface), ("vdegen", &vdegen)] {
            if t.len() != pp + 1 || t.iter().any(|r| r.len() != qq + 1) {
                return bad(format!("{name} grid has the wrong shape"));
            }
        }
        for p in 0..=pp {
            for q in 0..=qq {
                let check = |name: &str, t: &Vec<Vec<usize>>, count: usize, target: Option<usize>| -> Result<()> {
                    if t.len() != count {
                        return Err(Error::Malformed(format!("{name} at ({p},{q}) has {} maps, expected {count}", t.len())));
                    }
                    for (i, m) in t.iter().enumerate() {
                        if m.len() != sizes[p][q] {
                            return Err(Error::Malformed(format!("{name}_{i} at ({p},{q}) has the wrong length")));
                        }
                        if let Some(limit) = target {
                            if m.iter().any(|&c| c >= limit) {
                                return Err(Error::Malformed(format!("{name}_{i} at ({p},{q}) out of range")));
                            }
                        }
                    }
                    Ok(())
                };
                check("hface", &hface[p][q], if p == 0 { 0 } else { p + 1 }, (p > 0).then(|| sizes[p - 1][q]))?;
                check("hdegen", &hdegen[p][q], if p == pp { 0 } else { p + 1 }, (p < pp).then(|| sizes[p + 1][q]))?;
                check("vface", &vface[p][q], if q == 0 { 0 } else { q + 1 }, (q > 0).then(|| sizes[p][q - 1]))?;
                check("vdegen", &vdegen[p][q], if q == qq { 0 } else { q + 1 }, (q < qq).then(|| sizes[p][q + 1]))?;
            }
        }
        Ok(BisimplicialSet {
            cols: pp,
            rows: qq,
            sizes,
            hface,
            hdegen,
            vface,
            vdegen,
        })
    }

    /// The bisimplicial set whose rows are all `x` (vertical operators are
    /// identities).
    pub fn constant_rows(x: &SimplicialSet, rows: usize) -> Self {
        let pp = x.dim();
        let id = |p: usize| -> Vec<usize> { (0..x.size(p)).collect() };
        let grid = |f: &dyn Fn(usize, usize) -> Vec<Vec<usize>>| -> Tables {
            (0..=pp).map(|p| (0..=rows).map(|q| f(p, q)).collect()).collect()
        };
        BisimplicialSet {
            cols: pp,
            rows,
            sizes: (0..=pp).map(|p| vec![x.size(p); rows + 1]).collect(),
            hface: grid(&|p, _| if p == 0 { Vec::new() } else { (0..=p).map(|i| x.face_table(p, i).to_vec()).collect() }),
            hdegen: grid(&|p, _| if p == pp { Vec::new() } else { (0..=p).map(|i| x.degen_table(p, i).to_vec()).collect() }),
            vface: grid(&|p, q| vec![id(p); if q == 0 { 0 } else { q + 1 }]),
            vdegen: grid(&|p, q| vec![id(p); if q == rows { 0 } else { q + 1 }]),
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.cols, self.rows)
    }

    pub fn size(&self, p: usize, q: usize) -> usize {
        self.sizes[p][q]
    }

    pub fn sizes(&self) -> &Vec<Vec<usize>> {
        &self.sizes
    }

    pub fn hface(&self, p: usize, q: usize, i: usize, x: usize) -> usize {
        self.hface[p][q][i][x]
    }

    pub fn hdegen(&self, p: usize, q: usize, i: usize, x: usize) -> usize {
        self.hdegen[p][q][i][x]
    }

    pub fn vface(&self, p: usize, q: usize, i: usize, x: usize) -> usize {
        self.vface[p][q][i][x]
    }

    pub fn vdegen(&self, p: usize, q: usize, i: usize, x: usize) -> usize {
        self.vdegen[p][q][i][x]
    }

    #[cfg(test)]
    pub(crate) fn tables(&self) -> [&Tables; 4] {
        [&self.hface, &self.hdegen, &self.vface, &self.vdegen]
    }

    /// Row `q`, the simplicial set `X_{*,q}` (horizontal operators).
    pub fn row(&self, q: usize) -> SimplicialSet {
        SimplicialSet::from_tables(
            self.cols,
            (0..=self.cols).map(|p| self.sizes[p][q]).collect(),
            (0..=self.cols).map(|p| self.hface[p][q].clone()).collect(),
            (0..=self.cols).map(|p| self.hdegen[p][q].clone()).collect(),
        )
    }

    /// Column `p`, the simplicial set `X_{p,*}` (vertical operators).
    pub fn column(&self, p: usize) -> SimplicialSet {
        SimplicialSet::from_tables(
            self.rows,
            self.sizes[p].clone(),
            self.vface[p].clone(),
            self.vdegen[p].clone(),
        )
    }

    /// Swaps the two directions.
    pub fn transpose(&self) -> BisimplicialSet {
        let t = |g: &Tables| -> Tables { (0..=self.rows).map(|q| (0..=self.cols).map(|p| g[p][q].clone()).collect()).collect() };
        BisimplicialSet {
            cols: self.rows,
            rows: self.cols,
            sizes: (0..=self.rows).map(|q| (0..=self.cols).map(|p| self.sizes[p][q]).collect()).collect(),
            hface: t(&self.vface),
            hdegen: t(&self.vdegen),
            vface: t(&self.hface),
            vdegen: t(&self.hdegen),
        }
    }

    /// The diagonal, truncated at `min(P, Q)`: `d_i = d^v_i d^h_i`,
    /// `s_i = s^v_i s^h_i`.
    pub fn diagonal(&self) -> SimplicialSet {
        let dim = self.cols.min(self.rows);
        let face = (0..=dim)
            .map(|k| {
                if k == 0 {
                    return Vec::new();
                }
                (0..=k)
                    .map(|i| (0..self.sizes[k][k]).map(|x| self.vface[k - 1][k][i][self.hface[k][k][i][x]]).collect())
                    .collect()
            })
            .collect();
        let degen = (0..=dim)
            .map(|k| {
                if k == dim {
                    return Vec::new();
                }
                (0..=k)
                    .map(|i| (0..self.sizes[k][k]).map(|x| self.vdegen[k + 1][k][i][self.hdegen[k][k][i][x]]).collect())
                    .collect()
            })
            .collect();
        SimplicialSet::from_tables(dim, (0..=dim).map(|k| self.sizes[k][k]).collect(), face, degen)
    }

    /// Simplicial identities in both directions and all commutation squares.
    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        for q in 0..=self.rows {
            for v in self.row(q).validate().violations {
                let w = v.witness.replace("cell (", "cell (h: ");
                for d in v.details {
                    r.push(&format!("horizontal {}", v.kind), format!("row {q} {w}"), d);
                }
            }
        }
        for p in 0..=self.cols {
            for v in self.column(p).validate().violations {
                for d in v.details {
                    r.push(&format!("vertical {}", v.kind), format!("column {p} {}", v.witness), d);
                }
            }
        }
        for p in 0..=self.cols {
            for q in 0..=self.rows {
                for x in 0..self.sizes[p][q] {
                    let at = || format!("cell ({p}, {q}, {x})");
                    let hops_i = |down: bool| if down { if p == 0 { 0 } else { p + 1 } } else if p == self.cols { 0 } else { p + 1 };
                    let vops_j = |down: bool| if down { if q == 0 { 0 } else { q + 1 } } else if q == self.rows { 0 } else { q + 1 };
                    for h_face in [true, false] {
                        for v_face in [true, false] {
                            for i in 0..hops_i(h_face) {
                                for j in 0..vops_j(v_face) {
                                    let (p2, q2) = (if h_face { p - 1 } else { p + 1 }, if v_face { q - 1 } else { q + 1 });
                                    let h = |pp: usize, qq: usize, y: usize| {
                                        if h_face { self.hface[pp][qq][i][y] } else { self.hdegen[pp][qq][i][y] }
                                    };
                                    let v = |pp: usize, qq: usize, y: usize| {
                                        if v_face { self.vface[pp][qq][j][y] } else { self.vdegen[pp][qq][j][y] }
                                    };
                                    let hv = h(p, q2, v(p, q, x));
                                    let vh = v(p2, q, h(p, q, x));
                                    if hv != vh {
                                        let hn = if h_face { format!("d^h_{i}") } else { format!("s^h_{i}") };
                                        let vn = if v_face { format!("d^v_{j}") } else { format!("s^v_{j}") };
                                        r.push("commutation", at(), format!("{hn} {vn} = {hv} but {vn} {hn} = {vh}"));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        r
    }
}

/// A bisimplicial set with a marking `S ⊂ X_{1,*}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedBisimplicialSet {
    space: BisimplicialSet,
    marked: Vec<Vec<bool>>,
}

impl MarkedBisimplicialSet {
    /// `marked[q][x]` flags the `(1, q)`-cell `x`; empty when `P = 0`.
    pub fn new(space: BisimplicialSet, marked: Vec<Vec<bool>>) -> Result<Self> {
        let (pp, qq) = space.dims();
        let ok = if pp == 0 {
            marked.is_empty()
        } else {
            marked.len() == qq + 1 && marked.iter().enumerate().all(|(q, m)| m.len() == space.size(1, q))
        };
        if !ok {
            return Err(Error::Malformed("marking has the wrong shape".into()));
        }
        Ok(MarkedBisimplicialSet { space, marked })
    }

    /// Marks exactly the horizontally degenerate column-1 cells.
    pub fn minimal(space: BisimplicialSet) -> Self {
        let (pp, qq) = space.dims();
        let mut marked = Vec::new();
        if pp >= 1 {
            for q in 0..=qq {
                let mut m = vec![false; space.size(1, q)];
                for y in 0..space.size(0, q) {
                    m[space.hdegen(0, q, 0, y)] = true;
                }
                marked.push(m);
            }
        }
        MarkedBisimplicialSet { space, marked }
    }

    pub fn space(&self) -> &BisimplicialSet {
        &self.space
    }

    pub fn is_marked(&self, q: usize, x: usize) -> bool {
        self.marked[q][x]
    }

    pub fn marking(&self) -> &Vec<Vec<bool>> {
        &self.marked
    }

    /// Identities of the underlying bisimplicial set plus closure of the
    /// marking under vertical operators and containment of `s^h_0 X_{0,*}`.
    pub fn validate(&self) -> ValidationReport {
        let mut r = self.space.validate();
        let (pp, qq) = self.space.dims();
        if pp == 0 {
            return r;
        }
        for q in 0..=qq {
            for y in 0..self.space.size(0, q) {
                let x = self.space.hdegen(0, q, 0, y);
                if !self.marked[q][x] {
                    r.push("marking", format!("cell (1, {q}, {x})"), format!("s^h_0 of ({}, {q}, {y}) is unmarked", 0));
                }
            }
            for x in 0..self.space.size(1, q) {
                if !self.marked[q][x] {
                    continue;
                }
                if q > 0 {
                    for j in 0..=q {
                        let y = self.space.vface(1, q, j, x);
                        if !self.marked[q - 1][y] {
                            r.push("marking", format!("cell (1, {q}, {x})"), format!("d^v_{j} leaves the marking"));
                        }
                    }
                }
                if q < qq {
                    for j in 0..=q {
                        let y = self.space.vdegen(1, q, j, x);
                        if !self.marked[q + 1][y] {
                            r.push("marking", format!("cell (1, {q}, {x})"), format!("s^v_{j} leaves the marking"));
                        }
                    }
                }
            }
        }
        r
    }

    /// `diag⁺(X, S) = (diag X, S_1)`: the marked edges are the marked cells
    /// among `X_{1,1}`.
    pub fn diag_plus(&self) -> MarkedSimplicialSet {
        let d = self.space.diagonal();
        if d.dim() == 0 {
            return MarkedSimplicialSet::minimal(d);
        }
        let flags = self.marked[1].clone();
        MarkedSimplicialSet::from_flags(d, flags).expect("marking of X_{1,1} has one flag per diagonal edge")
    }

    pub fn transpose_space(&self) -> BisimplicialSet {
        self.space.transpose()
    }
}

/// Checks that `cells[p][q][x]` defines a map of marked bisimplicial sets:
/// shapes, ranges, commutation with every operator, marked to marked.
pub fn validate_map(source: &MarkedBisimplicialSet, target: &MarkedBisimplicialSet, cells: &[Vec<Vec<usize>>]) -> ValidationReport {
    let mut r = ValidationReport::new();
    let (src, tgt) = (&source.space, &target.space);
    let (pp, qq) = src.dims();
    let (tp, tq) = tgt.dims();
    if tp < pp || tq < qq || cells.len() != pp + 1 || cells.iter().any(|c| c.len() != qq + 1) {
        r.push("shape", "map", "bidegrees do not match");
        return r;
    }
    for p in 0..=pp {
        for q in 0..=qq {
            if cells[p][q].len() != src.size(p, q) || cells[p][q].iter().any(|&y| y >= tgt.size(p, q)) {
                r.push("shape", format!("bidegree ({p}, {q})"), "wrong length or image out of range");
                return r;
            }
        }
    }
    let f = |p: usize, q: usize, x: usize| cells[p][q][x];
    for p in 0..=pp {
        for q in 0..=qq {
            for x in 0..src.size(p, q) {
                let at = || format!("cell ({p}, {q}, {x})");
                let y = f(p, q, x);
                if p > 0 {
                    for i in 0..=p {
                        if f(p - 1, q, src.hface(p, q, i, x)) != tgt.hface(p, q, i, y) {
                            r.push("horizontal face", at(), format!("d^h_{i}"));
                        }
                    }
                }
                if p < pp {
                    for i in 0..=p {
                        if f(p + 1, q, src.hdegen(p, q, i, x)) != tgt.hdegen(p, q, i, y) {
                            r.push("horizontal degeneracy", at(), format!("s^h_{i}"));
                        }
                    }
                }
                if q > 0 {
                    for i in 0..=q {
                        if f(p, q - 1, src.vface(p, q, i, x)) != tgt.vface(p, q, i, y) {
                            r.push("vertical face", at(), format!("d^v_{i}"));
                        }
                    }
                }
                if q < qq {
                    for i in 0..=q {
                        if f(p, q + 1, src.vdegen(p, q, i, x)) != tgt.vdegen(p, q, i, y) {
                            r.push("vertical degeneracy", at(), format!("s^v_{i}"));
                        }
                    }
                }
                if p == 1 && source.is_marked(q, x) && !target.is_marked(q, y) {
                    r.push("marking", at(), "marked cell sent to an unmarked cell");
                }
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::standard_simplex;

    #[test]
    fn constant_rows_diagonal() {
        let x = standard_simplex(2, 3);
        let b = BisimplicialSet::constant_rows(&x, 3);
        assert!(b.validate().is_ok());
        assert_eq!(b.diagonal(), x);
        assert_eq!(b.transpose().diagonal(), x);
        assert_eq!(b.row(2), x);
    }

    #[test]
    fn planted_square_is_one_violation() {
        let x = standard_simplex(1, 2);
        let b = BisimplicialSet::constant_rows(&x, 1);
        let [hf, hd, vf, vd] = b.tables();
        let mut vf = vf.clone();
        // d^v_0 on the (1, 1) cell 1 now lands on cell 0 of (1, 0)
        vf[1][1][0][1] = 0;
        vf[1][1][1][1] = 0;
        let broken = BisimplicialSet::from_parts(b.dims(), b.sizes().clone(), hf.clone(), hd.clone(), vf, vd.clone()).unwrap();
        let r = broken.validate();
        assert!(!r.is_ok());
        assert!(r.kinds().iter().all(|k| k.starts_with("commutation") || k.starts_with("vertical")));
    }

    #[test]
    fn minimal_marking_diag_plus() {
        let x = standard_simplex(1, 2);
        let m = MarkedBisimplicialSet::minimal(BisimplicialSet::constant_rows(&x, 2));
        assert!(m.validate().is_ok());
        let d = m.diag_plus();
        assert!(d.validate().is_ok());
        let marked: Vec<usize> = d.marked_edges().collect();
        let degenerate: Vec<usize> = (0..d.space().size(1)).filter(|&e| !d.space().is_nondegenerate(1, e)).collect();
        assert_eq!(marked, degenerate);
    }
}
