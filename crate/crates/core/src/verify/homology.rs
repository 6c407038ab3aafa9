//! Homology of normalized chains, and homology of induced chain maps.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Serialize, Serializer};

use super::smith::{f2_columns, f2_combine, f2_rank, f2_reduce, invariant_factors, BitVec, DenseSmith, SparseMatrix};
use crate::report::Verdict;
use crate::sset::{SimplicialMap, SimplicialSet};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coefficients {
    Integers,
    F2,
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Coefficients::Integers => "z",
            Coefficients::F2 => "f2",
        })
    }
}

impl FromStr for Coefficients {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "z" | "Z" | "int" | "integers" => Ok(Coefficients::Integers),
            "f2" | "F2" => Ok(Coefficients::F2),
            _ => Err(Error::Malformed(format!("unknown coefficients `{s}` (expected z or f2)"))),
        }
    }
}

impl Serialize for Coefficients {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn big_strings<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

/// One homology group: `ℤ^rank ⊕ ⨁ ℤ/t` or `𝔽₂^rank`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub degree: usize,
    pub rank: usize,
    #[serde(serialize_with = "big_strings")]
    pub torsion: Vec<BigInt>,
    #[serde(skip)]
    pub coefficients: Coefficients,
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.rank > 0 {
            let ring = match self.coefficients {
                Coefficients::Integers => "Z",
                Coefficients::F2 => "F2",
            };
            parts.push(if self.rank == 1 { ring.to_string() } else { format!("{ring}^{}", self.rank) });
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "H{} = {}", self.degree, parts.join(" + "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub coefficients: Coefficients,
    /// Highest degree whose homology is unaffected by truncation.
    pub bound: isize,
    pub degrees: Vec<HomologyGroup>,
}

impl HomologyReport {
    /// Field dimensions or free ranks, by degree.
    pub fn ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(|g| g.rank).collect()
    }
}

pub fn validity_bound(x: &SimplicialSet) -> isize {
    x.dim() as isize - 1
}

/// Positions of the nondegenerate cells of each level among themselves.
pub struct NormalizedChains<'a> {
    x: &'a SimplicialSet,
    basis: Vec<Vec<usize>>,
    position: Vec<Vec<Option<usize>>>,
}

impl<'a> NormalizedChains<'a> {
    pub fn new(x: &'a SimplicialSet) -> Self {
        let basis: Vec<Vec<usize>> = (0..=x.dim()).map(|n| x.nondegenerate(n).collect()).collect();
        let position = basis
            .iter()
            .enumerate()
            .map(|(n, b)| {
                let mut p = vec![None; x.size(n)];
                for (k, &c) in b.iter().enumerate() {
                    p[c] = Some(k);
                }
                p
            })
            .collect();
        NormalizedChains { x, basis, position }
    }

    pub fn rank(&self, n: usize) -> usize {
        self.basis.get(n).map_or(0, Vec::len)
    }

    pub fn basis(&self, n: usize) -> &[usize] {
        &self.basis[n]
    }

    pub fn position(&self, n: usize, cell: usize) -> Option<usize> {
        self.position[n][cell]
    }

    /// `∂_n : C_n → C_{n−1}`, rows indexed by `C_{n−1}`.
    pub fn boundary(&self, n: usize) -> SparseMatrix {
        if n == 0 || n > self.x.dim() {
            return SparseMatrix::zeros(self.rank(n.saturating_sub(1)), self.rank(n));
        }
        let mut m = SparseMatrix::zeros(self.rank(n - 1), self.rank(n));
        let mut column: Vec<(usize, i64)> = Vec::with_capacity(n + 1);
        for (k, &c) in self.basis[n].iter().enumerate() {
            column.clear();
            for i in 0..=n {
                if let Some(r) = self.position[n - 1][self.x.face(n, i, c)] {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    match column.iter_mut().find(|e| e.0 == r) {
                        Some(e) => e.1 += sign,
                        None => column.push((r, sign)),
                    }
                }
            }
            // columns arrive in order, so each row stays sorted
            for &(r, v) in &column {
                if v != 0 {
                    m.entries[r].push((k, v));
                }
            }
        }
        m
    }
}

fn check_degree(max_deg: usize, bound: isize) -> Result<()> {
    if max_deg as isize > bound {
        return Err(Error::DegreeOutOfRange { degree: max_deg, bound });
    }
    Ok(())
}

/// Homology in degrees `0..=max_deg`, with `max_deg ≤ D − 1`.
pub fn homology(x: &SimplicialSet, coeff: Coefficients, max_deg: usize) -> Result<HomologyReport> {
    let bound = validity_bound(x);
    check_degree(max_deg, bound)?;
    let chains = NormalizedChains::new(x);
    let boundaries: Vec<SparseMatrix> = (0..=max_deg + 1).map(|n| chains.boundary(n)).collect();
    let mut degrees = Vec::new();
    match coeff {
        Coefficients::F2 => {
            let ranks: Vec<usize> = boundaries.iter().map(|b| f2_rank(&f2_columns(b))).collect();
            for n in 0..=max_deg {
                let r = chains.rank(n) - ranks[n] - ranks[n + 1];
                degrees.push(HomologyGroup {
                    degree: n,
                    rank: r,
                    torsion: Vec::new(),
                    coefficients: coeff,
                });
            }
        }
        Coefficients::Integers => {
            let factors: Vec<Vec<BigInt>> = boundaries.iter().map(invariant_factors).collect();
            for n in 0..=max_deg {
                let r = chains.rank(n) - factors[n].len() - factors[n + 1].len();
                let torsion = factors[n + 1].iter().filter(|t| !t.is_one()).cloned().collect();
                degrees.push(HomologyGroup {
                    degree: n,
                    rank: r,
                    torsion,
                    coefficients: coeff,
                });
            }
        }
    }
    Ok(HomologyReport {
        coefficients: coeff,
        bound,
        degrees,
    })
}

/// The induced map on one degree.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeMap {
    pub degree: usize,
    pub source: HomologyGroup,
    pub target: HomologyGroup,
    /// Rank of the induced map (over `𝔽₂`), or of its image modulo torsion.
    pub induced_rank: usize,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainMapReport {
    pub coefficients: Coefficients,
    pub bound: isize,
    /// Whether the chain matrices commute with the boundaries.
    pub commutes: bool,
    pub degrees: Vec<DegreeMap>,
    /// Chain map matrices `C_n(X) → C_n(Y)`, rows indexed by `C_n(Y)`.
    #[serde(skip)]
    pub matrices: Vec<SparseMatrix>,
}

impl ChainMapReport {
    pub fn is_isomorphism(&self) -> bool {
        self.commutes && self.degrees.iter().all(|d| d.verdict.passed())
    }
}

/// The matrix of `f_n` on normalized chains; degenerate images go to zero.
pub fn chain_matrix(f: &SimplicialMap, source: &NormalizedChains, target: &NormalizedChains, n: usize) -> SparseMatrix {
    let mut m = SparseMatrix::zeros(target.rank(n), source.rank(n));
    for (k, &c) in source.basis(n).iter().enumerate() {
        if let Some(r) = target.position(n, f.apply(n, c)) {
            m.add(r, k, 1);
        }
    }
    m
}

/// Checks that `f` induces isomorphisms on homology in degrees
/// `0..=max_deg`.
pub fn induced_chain_iso(
    f: &SimplicialMap,
    source: &SimplicialSet,
    target: &SimplicialSet,
    coeff: Coefficients,
    max_deg: usize,
) -> Result<ChainMapReport> {
    let bound = validity_bound(source).min(validity_bound(target));
    check_degree(max_deg, bound)?;
    if f.dim() < max_deg + 1 {
        return Err(Error::truncation("induced_chain_iso", max_deg + 1, f.dim()));
    }
    let (cx, cy) = (NormalizedChains::new(source), NormalizedChains::new(target));
    let top = max_deg + 1;
    let matrices: Vec<SparseMatrix> = (0..=top).map(|n| chain_matrix(f, &cx, &cy, n)).collect();
    let dx: Vec<SparseMatrix> = (0..=top + 1).map(|n| cx.boundary(n)).collect();
    let dy: Vec<SparseMatrix> = (0..=top + 1).map(|n| cy.boundary(n)).collect();
    let commutes = (1..=top).all(|n| dy[n].mul(&matrices[n]) == matrices[n - 1].mul(&dx[n]));
    let hx = homology(source, coeff, max_deg)?;
    let hy = homology(target, coeff, max_deg)?;
    let mut degrees = Vec::new();
    for n in 0..=max_deg {
        let (sx, sy) = (hx.degrees[n].clone(), hy.degrees[n].clone());
        let (induced_rank, iso) = match coeff {
            Coefficients::F2 => f2_degree(&matrices[n], &dx[n], &dy[n + 1], sx.rank, sy.rank),
            Coefficients::Integers => {
                let same = sx.rank == sy.rank && sx.torsion == sy.torsion;
                let (rank, onto) = z_degree(&matrices[n], &dx[n], &dy[n], &dy[n + 1]);
                (rank, same && onto)
            }
        };
        degrees.push(DegreeMap {
            degree: n,
            source: sx,
            target: sy,
            induced_rank,
            verdict: Verdict::from_bool(commutes && iso),
        });
    }
    Ok(ChainMapReport {
        coefficients: coeff,
        bound,
        commutes,
        degrees,
        matrices,
    })
}

/// `rank([F·Z_X | B_Y]) − rank(B_Y)` and whether it matches both dimensions.
fn f2_degree(fm: &SparseMatrix, dx: &SparseMatrix, dy_up: &SparseMatrix, hx: usize, hy: usize) -> (usize, bool) {
    let (_, cycles) = f2_reduce(&f2_columns(dx));
    let fcols = f2_columns(fm);
    let mut cols: Vec<BitVec> = cycles.iter().map(|z| f2_combine(&fcols, z, fm.rows)).collect();
    let bcols = f2_columns(dy_up);
    let rb = f2_rank(&bcols);
    cols.extend(bcols);
    let r = f2_rank(&cols) - rb;
    (r, r == hx && r == hy)
}

/// Over `ℤ`: rank of the image of `F·Z_X` modulo `B_Y`, and whether
/// `F·Z_X + B_Y` contains `Z_Y`. With equal invariants, surjectivity of an
/// endomorphism-like map between isomorphic finitely generated groups
/// forces injectivity.
fn z_degree(fm: &SparseMatrix, dx: &SparseMatrix, dy: &SparseMatrix, dy_up: &SparseMatrix) -> (usize, bool) {
    let zx = DenseSmith::new(&dx.to_dense(), dx.rows, dx.cols).kernel();
    let zy = DenseSmith::new(&dy.to_dense(), dy.rows, dy.cols).kernel();
    let f = fm.to_dense();
    let rows = fm.rows;
    let mut cols: Vec<Vec<BigInt>> = zx
        .iter()
        .map(|z| (0..rows).map(|r| (0..fm.cols).map(|c| &f[r][c] * &z[c]).sum()).collect())
        .collect();
    let b = dy_up.to_dense();
    let bcols: Vec<Vec<BigInt>> = (0..dy_up.cols).map(|c| (0..rows).map(|r| b[r][c].clone()).collect()).collect();
    let image_cols = cols.len();
    cols.extend(bcols);
    let to_matrix = |cols: &[Vec<BigInt>]| -> Vec<Vec<BigInt>> {
        (0..rows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
    };
    let span = DenseSmith::new(&to_matrix(&cols), rows, cols.len());
    let boundary_rank = DenseSmith::new(&to_matrix(&cols[image_cols..]), rows, cols.len() - image_cols).rank();
    let onto = zy.iter().all(|z| span.solvable(z));
    (span.rank() - boundary_rank, onto)
}

/// `∂∂ = 0` on the normalized chains of `x` up to its dimension.
pub fn boundary_squares_vanish(x: &SimplicialSet) -> bool {
    let c = NormalizedChains::new(x);
    (2..=x.dim()).all(|n| c.boundary(n - 1).mul(&c.boundary(n)).is_zero())
}
