//! Cross-checks between the two constructions of coherent simplices.

use crate::category::SimplicialCategory;
use crate::nerves::{binerve, comparison_map, comparison_simplex, theta_value, HcSimplex};
use crate::report::CheckReport;
use crate::sset::SimplicialMap;
use crate::{Error, Result};

/// (a) On the diagonal chain of `Δᵏ × Δᵏ`, `θ` agrees with precomposition by
/// `f_k` on every `(k, k)`-cell, `k ≤ L`.
/// (b) On the row-constant chain at `i`, `θ` of a `(p, q)`-cell is the
/// constant simplex on the `i`th vertices of its morphisms.
pub fn consistency_check(sc: &SimplicialCategory, max_level: usize) -> Result<CheckReport> {
    let b = binerve(sc, max_level, max_level)?;
    let mut report = CheckReport::new("consistency").bound("L", max_level);
    let mut diagonal_cells = 0;
    for k in 0..=max_level {
        let tau: Vec<(usize, usize)> = (0..=k).map(|t| (t, t)).collect();
        for c in 0..b.space().size(k, k) {
            let chain = b.chain(k, k, c);
            let lhs = theta_value(sc, &chain, k, k, &tau)?;
            if lhs != comparison_simplex(sc, &chain, k) {
                report.fail(format!("diagonal route differs on cell {c} of bidegree ({k}, {k})"));
            }
            diagonal_cells += 1;
        }
    }
    let mut restriction_cells = 0;
    for p in 0..=max_level {
        for q in 0..=max_level {
            for c in 0..b.space().size(p, q) {
                let chain = b.chain(p, q, c);
                for i in 0..=q {
                    let tau: Vec<(usize, usize)> = (0..=p).map(|t| (t, i)).collect();
                    let vertices: Vec<usize> = (0..p)
                        .map(|k| sc.hom(chain.objects[k], chain.objects[k + 1]).apply(q, chain.cells[k], &[i]))
                        .collect();
                    let expect = HcSimplex::constant(sc, &chain.objects, &vertices);
                    if theta_value(sc, &chain, p, q, &tau)? != expect {
                        report.fail(format!("vertex {i} restriction differs on cell {c} of bidegree ({p}, {q})"));
                    }
                    restriction_cells += 1;
                }
            }
        }
    }
    report.detail("diagonal_cells", diagonal_cells);
    report.detail("restriction_checks", restriction_cells);
    Ok(report)
}

/// For a discrete simplicial category: `B(C) ≅ N(C_0)` and
/// `N_hc(C) ≅ N(C_0)` by explicit bijections, and the comparison map is the
/// composite of one with the inverse of the other.
pub fn discrete_collapse_check(sc: &SimplicialCategory, max_level: usize) -> Result<CheckReport> {
    if !sc.is_discrete() {
        return Err(Error::Malformed("discrete_collapse_check needs a discrete simplicial category".into()));
    }
    let cm = comparison_map(sc, max_level)?;
    let c0 = sc.level_category(0)?;
    let nerve = crate::category::nerve_cat_labeled(&c0, max_level);
    let offsets = sc.level_offsets(0);
    let n = sc.objects();
    let vertex_of = |x: usize, y: usize, l: usize, cell: usize| sc.hom(x, y).apply(l, cell, &[0]);
    let label = |objects: &[usize], morphism: &dyn Fn(usize) -> usize| -> Vec<usize> {
        if objects.len() == 1 {
            vec![objects[0]]
        } else {
            (0..objects.len() - 1).map(|k| offsets[objects[k] * n + objects[k + 1]] + morphism(k)).collect()
        }
    };
    let mut report = CheckReport::new("discrete collapse").bound("L", max_level);
    let mut from_bar = Vec::new();
    let mut from_hc = Vec::new();
    for k in 0..=max_level {
        let bar_level: Vec<usize> = (0..cm.source.size(k))
            .map(|c| {
                let ch = cm.binerve.chain(k, k, c);
                let l = label(&ch.objects, &|t| vertex_of(ch.objects[t], ch.objects[t + 1], k, ch.cells[t]));
                nerve.cell(k, &l).expect("chains of level-0 morphisms are nerve cells")
            })
            .collect();
        let hc_level: Vec<usize> = cm
            .target
            .cells(k)
            .iter()
            .map(|s| {
                let l = label(s.objects(), &|t| s.component(t, t + 1)[0] as usize);
                nerve.cell(k, &l).expect("edges of a coherent simplex compose in C_0")
            })
            .collect();
        from_bar.push(bar_level);
        from_hc.push(hc_level);
    }
    let (fb, fh) = (SimplicialMap::new(from_bar), SimplicialMap::new(from_hc));
    for (name, f, src) in [("B(C) → N(C_0)", &fb, &cm.source), ("N_hc(C) → N(C_0)", &fh, &cm.target.set)] {
        let v = f.validate(src, &nerve.set);
        report.merge(&CheckReport::from_validation(name, &v));
        if !f.is_isomorphism(&nerve.set) {
            report.fail(format!("{name} is not a bijection"));
        }
    }
    if cm.map.then(&fh) != fb {
        report.fail("the comparison map does not match the two identifications");
    }
    if !cm.map.is_isomorphism(&cm.target.set) {
        report.fail("the comparison map is not an isomorphism");
    }
    report.detail("sizes", serde_json::to_value(nerve.set.sizes()).expect("sizes"));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::FiniteCategory;
    use crate::sset::FinitePoset;

    #[test]
    fn bg_z2_routes_agree() {
        let sc = SimplicialCategory::bg(&FiniteCategory::cyclic(2), 2).unwrap();
        let r = consistency_check(&sc, 2).unwrap();
        assert!(r.passed(), "{:?}", r.witnesses);
        assert_eq!(r.details["diagonal_cells"], 16 + 2 + 1);
    }

    #[test]
    fn discrete_routes_agree() {
        let c = FiniteCategory::poset(&FinitePoset::chain(2));
        let sc = SimplicialCategory::discrete(&c, 3);
        assert!(consistency_check(&sc, 3).unwrap().passed());
        let r = discrete_collapse_check(&sc, 3).unwrap();
        assert!(r.passed(), "{:?}", r.witnesses);
    }

    #[test]
    fn collapse_needs_discrete() {
        let sc = SimplicialCategory::bg(&FiniteCategory::cyclic(2), 2).unwrap();
        assert!(discrete_collapse_check(&sc, 2).is_err());
    }
}
