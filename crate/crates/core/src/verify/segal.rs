//! Column formula and strict Segal maps of binerves.

use std::collections::HashMap;

use crate::bisset::BisimplicialSet;
use crate::category::RelativeSimplicialCategory;
use crate::nerves::{binerve_marked, Binerve, Chain};
use crate::report::CheckReport;
use crate::sset::{disjoint_union, product, SimplicialMap, SimplicialSet};
use crate::Result;

/// Object tuples `X_0, …, X_p` in lexicographic order.
fn object_tuples(objects: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..=p {
        out = out
            .into_iter()
            .flat_map(|t: Vec<usize>| {
                (0..objects).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

/// `∐ C(X_{p−1}, X_p) × ⋯ × C(X_0, X_1)` over object tuples, truncated at
/// `rows`, with the offset of each tuple's block at each level.
fn column_model(rel: &RelativeSimplicialCategory, p: usize, rows: usize) -> (SimplicialSet, Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let sc = rel.cat();
    let tuples = object_tuples(sc.objects(), p);
    let mut total = SimplicialSet::empty(rows);
    let mut offsets = Vec::with_capacity(tuples.len());
    for t in &tuples {
        let block = if p == 0 {
            SimplicialSet::point(rows)
        } else {
            let mut acc = sc.hom(t[0], t[1]).truncate(rows);
            for k in 2..=p {
                acc = product(&sc.hom(t[k - 1], t[k]).truncate(rows), &acc);
            }
            acc
        };
        offsets.push(total.sizes().to_vec());
        total = disjoint_union(&total, &block);
    }
    (total, tuples, offsets)
}

/// Position of a chain in [`column_model`].
fn model_index(rel: &RelativeSimplicialCategory, chain: &Chain, q: usize, tuples: &[Vec<usize>], offsets: &[Vec<usize>]) -> usize {
    let sc = rel.cat();
    let t = tuples.iter().position(|t| *t == chain.objects).expect("every object tuple is listed");
    let x = &chain.objects;
    let mut idx = 0;
    let mut size = 1;
    for k in 1..=chain.cells.len() {
        // factor k sits in front of the factors below it
        idx += chain.cells[k - 1] * size;
        size *= sc.hom(x[k - 1], x[k]).size(q);
    }
    offsets[t][q] + idx
}

/// Column `p` of the binerve against the disjoint union of products of
/// homs, cell by cell and operator by operator.
pub fn column_check(rel: &RelativeSimplicialCategory, b: &Binerve, p: usize) -> CheckReport {
    let (_, rows) = b.dims();
    let column = b.space().column(p);
    let (model, tuples, offsets) = column_model(rel, p, rows);
    let mut report = CheckReport::new(format!("column {p}")).bound("p", p).bound("q", rows);
    if column.sizes() != model.sizes() {
        report.fail(format!("column {p} has sizes {:?}, the product formula gives {:?}", column.sizes(), model.sizes()));
        return report;
    }
    let levels: Vec<Vec<usize>> = (0..=rows)
        .map(|q| (0..column.size(q)).map(|c| model_index(rel, &b.chain(p, q, c), q, &tuples, &offsets)).collect())
        .collect();
    for (q, level) in levels.iter().enumerate() {
        let mut seen = vec![None; model.size(q)];
        for (c, &m) in level.iter().enumerate() {
            if let Some(prev) = seen[m] {
                report.fail(format!("cells {prev} and {c} of column {p}, level {q}, have the same factors"));
            }
            seen[m] = Some(c);
        }
    }
    let v = SimplicialMap::new(levels).validate(&column, &model);
    report.merge(&CheckReport::from_validation("operators", &v));
    report
}

/// The strict Segal map `X_n → X_{n−1} ×_{X_0} X_1`,
/// `c ↦ (d^h_n c, (d^h_0)^{n−1} c)`, is a bijection in every row.
pub fn segal_check_on(x: &BisimplicialSet, n_max: usize) -> CheckReport {
    let (cols, rows) = x.dims();
    let mut report = CheckReport::new("segal").bound("n_max", n_max).bound("q", rows);
    let last_vertex = |p: usize, q: usize, mut c: usize| -> usize {
        for k in (1..=p).rev() {
            c = x.hface(k, q, 0, c);
        }
        c
    };
    for n in 2..=n_max.min(cols) {
        for q in 0..=rows {
            let mut hits: HashMap<(usize, usize), usize> = HashMap::new();
            for c in 0..x.size(n, q) {
                let a = x.hface(n, q, n, c);
                let mut b = c;
                for k in (2..=n).rev() {
                    b = x.hface(k, q, 0, b);
                }
                if last_vertex(n - 1, q, a) != x.hface(1, q, 1, b) {
                    report.fail(format!("n = {n}, q = {q}: cell {c} maps to ({a}, {b}), which do not share a vertex"));
                }
                if let Some(prev) = hits.insert((a, b), c) {
                    report.fail(format!("n = {n}, q = {q}: cells {prev} and {c} both map to ({a}, {b})"));
                }
            }
            let mut by_source: HashMap<usize, usize> = HashMap::new();
            for b in 0..x.size(1, q) {
                *by_source.entry(x.hface(1, q, 1, b)).or_insert(0) += 1;
            }
            let pairs: usize = (0..x.size(n - 1, q))
                .map(|a| by_source.get(&last_vertex(n - 1, q, a)).copied().unwrap_or(0))
                .sum();
            if pairs != hits.len() {
                // name a missed pair
                let missed = (0..x.size(n - 1, q))
                    .flat_map(|a| (0..x.size(1, q)).map(move |b| (a, b)))
                    .find(|&(a, b)| last_vertex(n - 1, q, a) == x.hface(1, q, 1, b) && !hits.contains_key(&(a, b)));
                match missed {
                    Some((a, b)) => report.fail(format!("n = {n}, q = {q}: the pair ({a}, {b}) is not hit")),
                    None => report.fail(format!("n = {n}, q = {q}: {} cells for {pairs} pairs", x.size(n, q))),
                }
            }
        }
    }
    report
}

/// Column bijections for `p ≤ n_max` and Segal bijections for
/// `2 ≤ n ≤ n_max`, on the binerve up to row `Q`.
pub fn segal_column_check(rel: &RelativeSimplicialCategory, n_max: usize, rows: usize) -> Result<CheckReport> {
    let b = binerve_marked(rel, n_max, rows)?;
    let mut report = CheckReport::new("segal column").bound("n_max", n_max).bound("q", rows);
    for p in 0..=n_max {
        report.merge(&column_check(rel, &b, p));
    }
    report.merge(&segal_check_on(b.space(), n_max));
    report.detail("sizes", serde_json::to_value(b.space().sizes()).expect("sizes serialize"));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{FiniteCategory, SimplicialCategory};
    use crate::sset::FinitePoset;

    #[test]
    fn bg_z2() {
        let sc = SimplicialCategory::bg(&FiniteCategory::cyclic(2), 3).unwrap();
        let r = segal_column_check(&RelativeSimplicialCategory::whole(sc), 3, 3).unwrap();
        assert!(r.passed(), "{:?}", r.witnesses);
    }

    #[test]
    fn discrete_chain() {
        let c = FiniteCategory::poset(&FinitePoset::chain(2));
        let sc = SimplicialCategory::discrete(&c, 2);
        let r = segal_column_check(&RelativeSimplicialCategory::identities(sc), 4, 2).unwrap();
        assert!(r.passed(), "{:?}", r.witnesses);
    }

    #[test]
    fn corrupted_face_is_caught() {
        let sc = SimplicialCategory::bg(&FiniteCategory::cyclic(2), 2).unwrap();
        let b = binerve_marked(&RelativeSimplicialCategory::whole(sc), 2, 2).unwrap();
        let x = b.space();
        let (cols, rows) = x.dims();
        let table = |f: &dyn Fn(usize, usize, usize, usize) -> usize, count: &dyn Fn(usize, usize) -> usize| {
            (0..=cols)
                .map(|p| {
                    (0..=rows)
                        .map(|q| (0..count(p, q)).map(|i| (0..x.size(p, q)).map(|c| f(p, q, i, c)).collect()).collect())
                        .collect()
                })
                .collect::<Vec<Vec<Vec<Vec<usize>>>>>()
        };
        let mut hface = table(&|p, q, i, c| x.hface(p, q, i, c), &|p, _| if p == 0 { 0 } else { p + 1 });
        // send two level-1 cells of row 1 to the same last edge
        hface[2][1][0][1] = hface[2][1][0][0];
        let bad = BisimplicialSet::from_parts(
            (cols, rows),
            x.sizes().clone(),
            hface,
            table(&|p, q, i, c| x.hdegen(p, q, i, c), &|p, _| if p == cols { 0 } else { p + 1 }),
            table(&|p, q, i, c| x.vface(p, q, i, c), &|_, q| if q == 0 { 0 } else { q + 1 }),
            table(&|p, q, i, c| x.vdegen(p, q, i, c), &|_, q| if q == rows { 0 } else { q + 1 }),
        )
        .unwrap();
        let r = segal_check_on(&bad, 2);
        assert!(!r.passed());
        assert!(r.witnesses.iter().any(|w| w.contains("q = 1")), "{:?}", r.witnesses);
    }
}
