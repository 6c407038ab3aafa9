//! Fibers of the binerve's first column over pairs of objects.

use crate::category::RelativeSimplicialCategory;
use crate::nerves::{binerve_marked, Chain};
use crate::report::CheckReport;
use crate::Result;

/// For every pair `(X, Y)`, the cells of column 1 with `d^h_1 = X` and
/// `d^h_0 = Y` correspond bijectively to `C(X, Y)`, compatibly with the
/// vertical operators.
pub fn fiber_check(rel: &RelativeSimplicialCategory) -> Result<CheckReport> {
    let sc = rel.cat();
    let rows = sc.dim();
    let b = binerve_marked(rel, 1, rows)?;
    let x = b.space();
    let names = sc.names();
    let mut report = CheckReport::new("fiber").bound("q", rows);
    let mut sizes = serde_json::Map::new();
    for a in 0..sc.objects() {
        for z in 0..sc.objects() {
            let hom = sc.hom(a, z);
            let pair = format!("({}, {})", names[a], names[z]);
            // fiber cells per level, as their hom cells
            let mut fiber: Vec<Vec<Option<usize>>> = Vec::with_capacity(rows + 1);
            for q in 0..=rows {
                let v0 = b.find(0, q, &Chain { objects: vec![a], cells: vec![] });
                let v1 = b.find(0, q, &Chain { objects: vec![z], cells: vec![] });
                let mut level = vec![None; x.size(1, q)];
                let mut hit = vec![false; hom.size(q)];
                for c in 0..x.size(1, q) {
                    if Some(x.hface(1, q, 1, c)) != v0 || Some(x.hface(1, q, 0, c)) != v1 {
                        continue;
                    }
                    let chain = b.chain(1, q, c);
                    if chain.objects != [a, z] {
                        report.fail(format!("{pair}, level {q}: cell {c} has endpoints {:?}", chain.objects));
                        continue;
                    }
                    let y = chain.cells[0];
                    if hit[y] {
                        report.fail(format!("{pair}, level {q}: hom cell {y} appears twice"));
                    }
                    hit[y] = true;
                    level[c] = Some(y);
                }
                if let Some(y) = hit.iter().position(|h| !h) {
                    report.fail(format!("{pair}, level {q}: hom cell {y} is missing from the fiber"));
                }
                fiber.push(level);
            }
            for q in 0..=rows {
                for (c, y) in fiber[q].iter().enumerate() {
                    let Some(y) = *y else { continue };
                    if q > 0 {
                        for i in 0..=q {
                            if fiber[q - 1][x.vface(1, q, i, c)] != Some(hom.face(q, i, y)) {
                                report.fail(format!("{pair}, level {q}: d_{i} of cell {c} disagrees with the hom"));
                            }
                        }
                    }
                    if q < rows {
                        for i in 0..=q {
                            if fiber[q + 1][x.vdegen(1, q, i, c)] != Some(hom.degen(q, i, y)) {
                                report.fail(format!("{pair}, level {q}: s_{i} of cell {c} disagrees with the hom"));
                            }
                        }
                    }
                }
            }
            sizes.insert(pair, serde_json::to_value(fiber.iter().map(|l| l.iter().flatten().count()).collect::<Vec<_>>()).expect("sizes"));
        }
    }
    report.detail("fiber_sizes", serde_json::Value::Object(sizes));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{nerve_cat, FiniteCategory, SimplicialCategory};
    use crate::sset::{standard_simplex, FinitePoset};

    #[test]
    fn bg_z2_fiber_is_the_group_nerve() {
        let sc = SimplicialCategory::bg(&FiniteCategory::cyclic(2), 3).unwrap();
        let x = &sc.names()[0];
        let r = fiber_check(&RelativeSimplicialCategory::whole(sc.clone())).unwrap();
        assert!(r.passed(), "{:?}", r.witnesses);
        let n = nerve_cat(&FiniteCategory::cyclic(2), 3);
        let sizes: Vec<usize> = serde_json::from_value(r.details["fiber_sizes"][format!("({x}, {x})")].clone()).unwrap();
        assert_eq!(sizes, n.sizes());
    }

    #[test]
    fn discrete_interval() {
        let c = FiniteCategory::poset(&FinitePoset::chain(1));
        let sc = SimplicialCategory::discrete(&c, 2);
        let r = fiber_check(&RelativeSimplicialCategory::identities(sc.clone())).unwrap();
        assert!(r.passed());
        let f = r.details["fiber_sizes"].as_object().unwrap();
        let n = sc.names();
        assert_eq!(f[&format!("({}, {})", n[0], n[1])], serde_json::json!([1, 1, 1]));
        assert_eq!(f[&format!("({}, {})", n[1], n[0])], serde_json::json!([0, 0, 0]));
    }

    #[test]
    fn interval_hom() {
        let sc = crate::category::interval_power_cat(1, &standard_simplex(1, 2));
        let r = fiber_check(&RelativeSimplicialCategory::identities(sc)).unwrap();
        assert!(r.passed(), "{:?}", r.witnesses);
    }
}
