//! Exact integer and mod-2 linear algebra.
//!
//! Integer work runs in `i64` with checked arithmetic and restarts in
//! [`BigInt`] on overflow.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sparse integer matrix, row-major.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: vec![Vec::new(); rows],
        }
    }

    /// Adds `v` at `(r, c)`.
    pub fn add(&mut self, r: usize, c: usize, v: i64) {
        let row = &mut self.entries[r];
        match row.iter_mut().find(|(k, _)| *k == c) {
            Some(e) => e.1 += v,
            None => row.push((c, v)),
        }
        row.retain(|&(_, x)| x != 0);
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r].iter().find(|(k, _)| *k == c).map_or(0, |e| e.1)
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = SparseMatrix::zeros(self.rows, other.cols);
        for (r, row) in self.entries.iter().enumerate() {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for &(k, a) in row {
                for &(c, b) in &other.entries[k] {
                    *acc.entry(c).or_insert(0) += a * b;
                }
            }
            out.entries[r] = acc.into_iter().filter(|&(_, v)| v != 0).collect();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.cols, self.rows);
        for (r, row) in self.entries.iter().enumerate() {
            for &(c, v) in row {
                out.entries[c].push((r, v));
            }
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut d = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (r, row) in self.entries.iter().enumerate() {
            for &(c, v) in row {
                d[r][c] = BigInt::from(v);
            }
        }
        d
    }
}

/// Integer arithmetic used by the elimination.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn vanishes(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn abs_le(&self, other: &Self) -> bool;
    /// `a − q·b` with `q` the floor quotient `a / b`; `None` on overflow.
    fn reduce(a: &Self, b: &Self) -> Option<(Self, Self)>;
    fn sub_mul(a: &Self, q: &Self, b: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn vanishes(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn abs_le(&self, other: &Self) -> bool {
        self.unsigned_abs() <= other.unsigned_abs()
    }
    fn reduce(a: &Self, b: &Self) -> Option<(Self, Self)> {
        let q = a.checked_div_euclid(*b)?;
        Some((q, a.checked_rem_euclid(*b)?))
    }
    fn sub_mul(a: &Self, q: &Self, b: &Self) -> Option<Self> {
        a.checked_sub(q.checked_mul(*b)?)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn abs_le(&self, other: &Self) -> bool {
        self.abs() <= other.abs()
    }
    fn reduce(a: &Self, b: &Self) -> Option<(Self, Self)> {
        let (q, r) = a.div_mod_floor(b);
        Some((q, r))
    }
    fn sub_mul(a: &Self, q: &Self, b: &Self) -> Option<Self> {
        Some(a - q * b)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

struct Work<T> {
    rows: Vec<BTreeMap<usize, T>>,
    /// rows holding a nonzero in each column
    cols: Vec<std::collections::BTreeSet<usize>>,
    alive_rows: Vec<bool>,
}

impl<T: Scalar> Work<T> {
    fn new(m: &SparseMatrix) -> Self {
        let mut cols = vec![std::collections::BTreeSet::new(); m.cols];
        let rows = m
            .entries
            .iter()
            .enumerate()
            .map(|(r, row)| {
                row.iter()
                    .filter(|&&(_, v)| v != 0)
                    .map(|&(c, v)| {
                        cols[c].insert(r);
                        (c, T::from_i64(v))
                    })
                    .collect()
            })
            .collect();
        Work {
            rows,
            cols,
            alive_rows: vec![true; m.rows],
        }
    }

    fn set(&mut self, r: usize, c: usize, v: T) {
        if v.vanishes() {
            self.rows[r].remove(&c);
            self.cols[c].remove(&r);
        } else {
            self.rows[r].insert(c, v);
            self.cols[c].insert(r);
        }
    }

    /// `row[r] -= q · row[p]`.
    fn row_op(&mut self, r: usize, p: usize, q: &T) -> Option<()> {
        let prow: Vec<(usize, T)> = self.rows[p].iter().map(|(c, v)| (*c, v.clone())).collect();
        for (c, v) in prow {
            let cur = self.rows[r].get(&c).cloned().unwrap_or_else(|| T::from_i64(0));
            let new = T::sub_mul(&cur, q, &v)?;
            self.set(r, c, new);
        }
        Some(())
    }

    /// `col[c] -= q · col[p]`, which only touches rows holding `p`.
    fn col_op(&mut self, c: usize, p: usize, q: &T) -> Option<()> {
        let holders: Vec<usize> = self.cols[p].iter().copied().collect();
        for r in holders {
            let v = self.rows[r][&p].clone();
            let cur = self.rows[r].get(&c).cloned().unwrap_or_else(|| T::from_i64(0));
            let new = T::sub_mul(&cur, q, &v)?;
            self.set(r, c, new);
        }
        Some(())
    }

    fn pick_pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        let mut best_small: Option<(usize, usize)> = None;
        for (r, row) in self.rows.iter().enumerate() {
            if !self.alive_rows[r] || row.is_empty() {
                continue;
            }
            for (&c, v) in row {
                if v.is_unit() {
                    let cost = (row.len() - 1) * (self.cols[c].len() - 1);
                    if best.map_or(true, |b| cost < b.2) {
                        best = Some((r, c, cost));
                        if cost == 0 {
                            return Some((r, c));
                        }
                    }
                } else if best.is_none() && best_small.map_or(true, |(br, bc)| v.abs_le(&self.rows[br][&bc]) && v != &self.rows[br][&bc]) {
                    best_small = Some((r, c));
                }
            }
        }
        best.map(|(r, c, _)| (r, c)).or(best_small)
    }

    /// Nonzero diagonal entries of a diagonal form.
    fn diagonalize(mut self) -> Option<Vec<T>> {
        let mut diag = Vec::new();
        while let Some((mut pr, mut pc)) = self.pick_pivot() {
            loop {
                let pivot = self.rows[pr][&pc].clone();
                let mut smaller: Option<(usize, usize)> = None;
                let others: Vec<usize> = self.cols[pc].iter().copied().filter(|&r| r != pr).collect();
                for r in others {
                    let (q, rem) = T::reduce(&self.rows[r][&pc], &pivot)?;
                    self.row_op(r, pr, &q)?;
                    if !rem.vanishes() {
                        smaller = Some((r, pc));
                    }
                }
                if smaller.is_none() && !pivot.is_unit() {
                    let others: Vec<usize> = self.rows[pr].keys().copied().filter(|&c| c != pc).collect();
                    for c in others {
                        let (q, rem) = T::reduce(&self.rows[pr][&c], &pivot)?;
                        self.col_op(c, pc, &q)?;
                        if !rem.vanishes() {
                            smaller = Some((pr, c));
                        }
                    }
                }
                match smaller {
                    Some((r, c)) => {
                        pr = r;
                        pc = c;
                    }
                    None => break,
                }
            }
            diag.push(self.rows[pr][&pc].clone());
            // with the column cleared, the rest of the pivot row no longer
            // matters (a unit pivot clears it by column operations)
            let row: Vec<usize> = self.rows[pr].keys().copied().collect();
            for c in row {
                self.cols[c].remove(&pr);
            }
            self.rows[pr].clear();
            self.alive_rows[pr] = false;
        }
        Some(diag)
    }
}

/// Invariant factors `d_1 | d_2 | …` of the nonzero part of the Smith form.
pub fn invariant_factors(m: &SparseMatrix) -> Vec<BigInt> {
    // a very wide or very tall matrix is first cut down to a lattice basis
    if m.cols > 2 * m.rows && m.rows <= LATTICE_LIMIT {
        if let Some(b) = column_lattice(m) {
            return smith_diagonal(&b);
        }
    } else if m.rows > 2 * m.cols && m.cols <= LATTICE_LIMIT {
        if let Some(b) = column_lattice(&m.transpose()) {
            return smith_diagonal(&b);
        }
    }
    smith_diagonal(m)
}

const LATTICE_LIMIT: usize = 4096;

/// An echelon basis of the column lattice, built one column at a time with
/// unimodular gcd steps. `None` on `i64` overflow.
fn column_lattice(m: &SparseMatrix) -> Option<SparseMatrix> {
    let n = m.rows;
    let mut columns: Vec<Vec<(usize, i64)>> = vec![Vec::new(); m.cols];
    for (r, row) in m.entries.iter().enumerate() {
        for &(c, v) in row {
            columns[c].push((r, v));
        }
    }
    let mut basis: Vec<Option<Vec<i64>>> = vec![None; n];
    let mut v = vec![0i64; n];
    for col in columns {
        if col.is_empty() {
            continue;
        }
        v.iter_mut().for_each(|x| *x = 0);
        let mut p = n;
        for &(r, x) in &col {
            v[r] = x;
            p = p.min(r);
        }
        while p < n {
            if v[p] == 0 {
                p += 1;
                continue;
            }
            let Some(b) = basis[p].as_mut() else {
                basis[p] = Some(v.clone());
                break;
            };
            let (a, c) = (b[p], v[p]);
            if c % a == 0 {
                let q = c / a;
                for k in p..n {
                    v[k] = v[k].checked_sub(q.checked_mul(b[k])?)?;
                }
            } else {
                let e = a.extended_gcd(&c);
                let (ag, cg) = (a / e.gcd, c / e.gcd);
                for k in p..n {
                    let (bk, vk) = (b[k], v[k]);
                    b[k] = e.x.checked_mul(bk)?.checked_add(e.y.checked_mul(vk)?)?;
                    v[k] = ag.checked_mul(vk)?.checked_sub(cg.checked_mul(bk)?)?;
                }
            }
            p += 1;
        }
    }
    let kept: Vec<Vec<i64>> = basis.into_iter().flatten().collect();
    let mut out = SparseMatrix::zeros(n, kept.len());
    for (c, col) in kept.iter().enumerate() {
        for (r, &x) in col.iter().enumerate() {
            if x != 0 {
                out.entries[r].push((c, x));
            }
        }
    }
    Some(out)
}

fn smith_diagonal(m: &SparseMatrix) -> Vec<BigInt> {
    let diag: Vec<BigInt> = match Work::<i64>::new(m).diagonalize() {
        Some(d) => d.iter().map(|v| v.to_big().abs()).collect(),
        None => Work::<BigInt>::new(m).diagonalize().expect("big integers do not overflow").iter().map(|v| v.abs()).collect(),
    };
    normalize(diag)
}

/// Turns a diagonal into divisibility order by gcd/lcm exchanges.
pub fn normalize(mut d: Vec<BigInt>) -> Vec<BigInt> {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

pub fn rank(m: &SparseMatrix) -> usize {
    invariant_factors(m).len()
}

/// Bit vectors over `𝔽₂`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor(&mut self, other: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Highest set bit.
    pub fn lead(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(k, &w)| k * 64 + 63 - w.leading_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }
}

/// Columns of a sparse matrix reduced mod 2.
pub fn f2_columns(m: &SparseMatrix) -> Vec<BitVec> {
    let mut cols = vec![BitVec::zeros(m.rows); m.cols];
    for (r, row) in m.entries.iter().enumerate() {
        for &(c, v) in row {
            if v.rem_euclid(2) == 1 {
                cols[c].flip(r);
            }
        }
    }
    cols
}

/// Column reduction mod 2: `(rank, kernel basis)`; kernel vectors are
/// combinations of the input columns.
pub fn f2_reduce(cols: &[BitVec]) -> (usize, Vec<BitVec>) {
    let n = cols.len();
    let mut pivots: std::collections::HashMap<usize, (BitVec, BitVec)> = std::collections::HashMap::new();
    let mut kernel = Vec::new();
    for (k, c) in cols.iter().enumerate() {
        let mut v = c.clone();
        let mut comb = BitVec::zeros(n);
        comb.flip(k);
        while let Some(l) = v.lead() {
            match pivots.get(&l) {
                Some((pv, pc)) => {
                    v.xor(pv);
                    comb.xor(pc);
                }
                None => break,
            }
        }
        match v.lead() {
            Some(l) => {
                pivots.insert(l, (v, comb));
            }
            None => kernel.push(comb),
        }
    }
    (pivots.len(), kernel)
}

pub fn f2_rank(cols: &[BitVec]) -> usize {
    let mut pivots: std::collections::HashMap<usize, BitVec> = std::collections::HashMap::new();
    for c in cols {
        let mut v = c.clone();
        while let Some(l) = v.lead() {
            match pivots.get(&l) {
                Some(p) => v.xor(p),
                None => {
                    pivots.insert(l, v);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// `Σ_k coeffs[k] · cols[k]` mod 2.
pub fn f2_combine(cols: &[BitVec], coeffs: &BitVec, len: usize) -> BitVec {
    let mut out = BitVec::zeros(len);
    for k in coeffs.ones() {
        out.xor(&cols[k]);
    }
    out
}

/// Dense Smith form `U A V = D` with unimodular `U`, `V`.
#[derive(Clone, Debug)]
pub struct DenseSmith {
    pub diag: Vec<BigInt>,
    pub u: Vec<Vec<BigInt>>,
    pub v: Vec<Vec<BigInt>>,
    pub rows: usize,
    pub cols: usize,
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

impl DenseSmith {
    /// Diagonalizes `a` (`rows × cols`), tracking both transforms. The
    /// diagonal is not put in divisibility order.
    pub fn new(a: &[Vec<BigInt>], rows: usize, cols: usize) -> Self {
        let mut m: Vec<Vec<BigInt>> = a.to_vec();
        let mut u = identity(rows);
        let mut v = identity(cols);
        let mut diag = Vec::new();
        let mut t = 0;
        while t < rows.min(cols) {
            // smallest nonzero entry in the remaining block
            let mut best: Option<(usize, usize)> = None;
            for (r, row) in m.iter().enumerate().skip(t) {
                for (c, x) in row.iter().enumerate().skip(t) {
                    if !x.is_zero() && best.map_or(true, |(br, bc)| x.abs() < m[br][bc].abs()) {
                        best = Some((r, c));
                    }
                }
            }
            let Some((br, bc)) = best else { break };
            m.swap(t, br);
            u.swap(t, br);
            for row in m.iter_mut() {
                row.swap(t, bc);
            }
            for row in v.iter_mut() {
                row.swap(t, bc);
            }
            let mut clean = true;
            for r in t + 1..rows {
                if m[r][t].is_zero() {
                    continue;
                }
                let q = m[r][t].div_floor(&m[t][t]);
                for c in t..cols {
                    let x = &m[t][c] * &q;
                    m[r][c] -= x;
                }
                for c in 0..rows {
                    let x = &u[t][c] * &q;
                    u[r][c] -= x;
                }
                clean &= m[r][t].is_zero();
            }
            for c in t + 1..cols {
                if m[t][c].is_zero() {
                    continue;
                }
                let q = m[t][c].div_floor(&m[t][t]);
                for r in t..rows {
                    let x = &m[r][t] * &q;
                    m[r][c] -= x;
                }
                for r in 0..cols {
                    let x = &v[r][t] * &q;
                    v[r][c] -= x;
                }
                clean &= m[t][c].is_zero();
            }
            if clean {
                diag.push(m[t][t].clone());
                t += 1;
            }
        }
        DenseSmith { diag, u, v, rows, cols }
    }

    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    /// Columns of `V` spanning the kernel of `A` over `ℤ`.
    pub fn kernel(&self) -> Vec<Vec<BigInt>> {
        (self.rank()..self.cols).map(|c| (0..self.cols).map(|r| self.v[r][c].clone()).collect()).collect()
    }

    /// Whether `A x = b` has an integer solution.
    pub fn solvable(&self, b: &[BigInt]) -> bool {
        let ub: Vec<BigInt> = (0..self.rows).map(|r| (0..self.rows).map(|k| &self.u[r][k] * &b[k]).sum()).collect();
        ub.iter().enumerate().all(|(r, x)| {
            if r < self.rank() {
                x.is_multiple_of(&self.diag[r])
            } else {
                x.is_zero()
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sparse(rows: &[&[i64]]) -> SparseMatrix {
        let mut m = SparseMatrix::zeros(rows.len(), rows[0].len());
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    m.add(r, c, v);
                }
            }
        }
        m
    }

    #[test]
    fn torsion_appears() {
        let m = sparse(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let f: Vec<i64> = invariant_factors(&m).iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(f, vec![2, 6, 12]);
    }

    #[test]
    fn overflow_falls_back() {
        let big = 1i64 << 40;
        let m = sparse(&[&[big, 0], &[0, big + 1]]);
        let f = invariant_factors(&m);
        assert_eq!(f[1], BigInt::from(big) * BigInt::from(big + 1));
    }

    #[test]
    fn f2_kernel() {
        let m = sparse(&[&[1, 1, 0], &[0, 1, 1]]);
        let (r, k) = f2_reduce(&f2_columns(&m));
        assert_eq!(r, 2);
        assert_eq!(k.len(), 1);
        assert!(k[0].get(0) && k[0].get(1) && k[0].get(2));
    }

    #[test]
    fn dense_solves() {
        let a = sparse(&[&[2, 0], &[0, 3]]).to_dense();
        let s = DenseSmith::new(&a, 2, 2);
        assert!(s.solvable(&[BigInt::from(4), BigInt::from(9)]));
        assert!(!s.solvable(&[BigInt::from(1), BigInt::from(0)]));
        let k = DenseSmith::new(&sparse(&[&[1, -1]]).to_dense(), 1, 2).kernel();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0][0], k[0][1]);
    }
}
