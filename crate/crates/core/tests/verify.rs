use nervekit::examples::{example, FIBRANT, LIBRARY};
use nervekit::nerves::{classifying_space, hc_nerve};
use nervekit::sset::{poset_nerve, simplex_boundary, standard_simplex, FinitePoset, SimplicialSet};
use nervekit::verify::homology::boundary_squares_vanish;
use nervekit::verify::smith::{f2_columns, f2_rank, invariant_factors, SparseMatrix};
use nervekit::verify::{homology, horn_check_all, pi0, Coefficients};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;

fn det(m: &[Vec<BigInt>]) -> BigInt {
    if m.is_empty() {
        return BigInt::from(1);
    }
    let mut total = BigInt::zero();
    for (c, v) in m[0].iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..].iter().map(|row| row.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, x)| x.clone()).collect()).collect();
        let term = v * det(&minor);
        if c % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n).filter(|s| s.count_ones() as usize == k).map(|s| (0..n).filter(|&i| s >> i & 1 == 1).collect()).collect()
}

/// Invariant factors from determinantal divisors: `s_k = d_k / d_(k-1)`,
/// `d_k` the gcd of the `k × k` minors.
fn oracle(m: &[Vec<i64>]) -> Vec<BigInt> {
    let (r, c) = (m.len(), m.first().map_or(0, Vec::len));
    let mut out = Vec::new();
    let mut prev = BigInt::from(1);
    for k in 1..=r.min(c) {
        let mut d = BigInt::zero();
        for rows in subsets(r, k) {
            for cols in subsets(c, k) {
                let minor: Vec<Vec<BigInt>> = rows.iter().map(|&i| cols.iter().map(|&j| BigInt::from(m[i][j])).collect()).collect();
                d = d.gcd(&det(&minor));
            }
        }
        if d.is_zero() {
            break;
        }
        out.push(&d / &prev);
        prev = d;
    }
    out
}

fn sparse(m: &[Vec<i64>]) -> SparseMatrix {
    let mut s = SparseMatrix::zeros(m.len(), m.first().map_or(0, Vec::len));
    for (i, row) in m.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            s.add(i, j, v);
        }
    }
    s
}

fn matrix(entries: impl Strategy<Value = i64> + Clone) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 1usize..=4).prop_flat_map(move |(r, c)| prop::collection::vec(prop::collection::vec(entries.clone(), c), r))
}

proptest! {
    #[test]
    fn smith_matches_determinantal_divisors(m in matrix(-6i64..=6)) {
        prop_assert_eq!(invariant_factors(&sparse(&m)), oracle(&m));
    }

    /// Entries near the `i64` limit push the elimination onto big integers.
    #[test]
    fn smith_survives_overflow(m in matrix(prop_oneof![-3i64..=3, Just(i64::MAX / 3), Just(-(i64::MAX / 5))])) {
        prop_assert_eq!(invariant_factors(&sparse(&m)), oracle(&m));
    }

    /// Over `𝔽₂` the rank counts the odd invariant factors.
    #[test]
    fn f2_rank_counts_odd_factors(m in matrix(-6i64..=6)) {
        let odd = oracle(&m).iter().filter(|d| d.is_odd()).count();
        prop_assert_eq!(f2_rank(&f2_columns(&sparse(&m))), odd);
    }

    #[test]
    fn random_poset_nerves(n in 1usize..=4, bits in any::<u8>()) {
        let dim = 5;
        let x = poset_nerve(&random_poset(n, bits), dim);
        prop_assert!(boundary_squares_vanish(&x));
        let z = homology(&x, Coefficients::Integers, dim - 1).unwrap();
        let f2 = homology(&x, Coefficients::F2, dim - 1).unwrap();
        // every nondegenerate chain has length ≤ 4, so the truncation sees all of it
        let counts = x.nondegenerate_counts();
        let chi: i64 = counts.iter().enumerate().map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) }).sum();
        let betti: i64 = z.degrees.iter().map(|g| if g.degree % 2 == 0 { g.rank as i64 } else { -(g.rank as i64) }).sum();
        prop_assert_eq!(chi, betti);
        prop_assert_eq!(z.degrees[0].rank, pi0(&x).len());
        universal_coefficients(&z, &f2);
    }
}

fn random_poset(n: usize, bits: u8) -> FinitePoset {
    let mut leq = vec![vec![false; n]; n];
    let mut k = 0;
    for (a, row) in leq.iter_mut().enumerate() {
        row[a] = true;
        for b in a + 1..n {
            row[b] = bits >> (k % 8) & 1 == 1;
            k += 1;
        }
    }
    for m in 0..n {
        for a in 0..n {
            for b in 0..n {
                if leq[a][m] && leq[m][b] {
                    leq[a][b] = true;
                }
            }
        }
    }
    FinitePoset::new(n, |a, b| leq[a][b]).unwrap()
}

/// `dim H_n(X; 𝔽₂) = rank H_n + #even torsion in H_n + #even torsion in H_(n-1)`.
fn universal_coefficients(z: &nervekit::verify::HomologyReport, f2: &nervekit::verify::HomologyReport) {
    let even = |k: usize| z.degrees[k].torsion.iter().filter(|t| t.is_even()).count();
    for n in 0..z.degrees.len() {
        let expected = z.degrees[n].rank + even(n) + if n > 0 { even(n - 1) } else { 0 };
        assert_eq!(f2.degrees[n].rank, expected, "degree {n}");
    }
}

fn library_spaces() -> Vec<(String, SimplicialSet)> {
    let mut out = Vec::new();
    for name in LIBRARY {
        let rel = example(name, 3).unwrap();
        out.push((format!("B({name})"), classifying_space(rel.cat(), 3).unwrap()));
        out.push((format!("N_hc({name})"), hc_nerve(rel.cat(), 3).unwrap().set));
    }
    out
}

#[test]
fn boundaries_square_to_zero() {
    for (name, x) in library_spaces() {
        assert!(boundary_squares_vanish(&x), "{name}");
    }
}

#[test]
fn coefficient_routes_agree() {
    for (name, x) in library_spaces() {
        let z = homology(&x, Coefficients::Integers, 2).unwrap();
        let f2 = homology(&x, Coefficients::F2, 2).unwrap();
        assert_eq!(z.degrees.len(), 3, "{name}");
        universal_coefficients(&z, &f2);
    }
}

#[test]
fn spheres_and_simplices() {
    for n in 1..=4 {
        let x = simplex_boundary(n, n + 1).set;
        let z = homology(&x, Coefficients::Integers, n).unwrap();
        let ranks: Vec<usize> = z.degrees.iter().map(|g| g.rank).collect();
        let mut expected = vec![0; n + 1];
        expected[0] += 1;
        expected[n - 1] += 1;
        assert_eq!(ranks, expected, "∂Δ{n}");
        let d = standard_simplex(n, n + 1);
        let ranks: Vec<usize> = homology(&d, Coefficients::Integers, n).unwrap().degrees.iter().map(|g| g.rank).collect();
        assert_eq!(ranks.iter().sum::<usize>(), 1);
    }
}

#[test]
fn homology_past_the_bound_is_refused() {
    let x = standard_simplex(1, 2);
    assert!(homology(&x, Coefficients::F2, 2).is_err());
}

#[test]
fn fibrant_examples_fill_horns() {
    for name in FIBRANT {
        let rel = example(name, 3).unwrap();
        let sc = rel.cat();
        for x in 0..sc.objects() {
            for y in 0..sc.objects() {
                if sc.hom(x, y).size(0) > 0 {
                    assert!(horn_check_all(sc.hom(x, y), 3, false).unwrap().passed(), "{name}({x}, {y})");
                }
            }
        }
    }
}

#[test]
fn interval_is_not_kan() {
    let report = horn_check_all(&standard_simplex(1, 3), 2, false).unwrap();
    assert!(!report.passed());
    assert!(horn_check_all(&standard_simplex(1, 3), 3, true).unwrap().passed());
}
