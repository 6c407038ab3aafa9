//! Horn filling.

use std::collections::HashMap;

use crate::category::SimplicialCategory;
use crate::report::CheckReport;
use crate::sset::{horn, MapSearch, SimplicialSet};
use crate::{Error, Result};

fn vertices_of(x: &SimplicialSet, n: usize, c: usize) -> Vec<usize> {
    (0..=n).map(|t| x.apply(n, c, &[t])).collect()
}

fn describe(x: &SimplicialSet, n: usize, c: usize) -> String {
    let v: Vec<String> = vertices_of(x, n, c).iter().map(usize::to_string).collect();
    format!("cell {c} of level {n} on vertices ({})", v.join(", "))
}

fn set_name(face: &[usize]) -> String {
    let v: Vec<String> = face.iter().map(usize::to_string).collect();
    format!("{{{}}}", v.join(","))
}

/// Enumerates every map `Λⁿ_k → X` and reports those with no extension to
/// `Δⁿ`.
pub fn horn_check(x: &SimplicialSet, n: usize, k: usize) -> Result<CheckReport> {
    if n == 0 || k > n {
        return Err(Error::Malformed(format!("horn Λ^{n}_{k} does not exist")));
    }
    if n > x.dim() {
        return Err(Error::truncation("horn_check filler", n, x.dim()));
    }
    let h = horn(n, k, n - 1);
    let search = MapSearch::new(&h.set, x);
    let cells = search.cells().to_vec();
    // the faces d_i, i ≠ k, of the missing simplex
    let faces: Vec<(usize, Vec<usize>)> = (0..=n)
        .filter(|&i| i != k)
        .map(|i| (i, (0..=n).filter(|&t| t != i).collect()))
        .collect();
    let slots: Vec<usize> = faces
        .iter()
        .map(|(_, label)| {
            let c = h.cell(n - 1, label).expect("faces of the horn are in the horn");
            cells.iter().position(|&p| p == (n - 1, c)).expect("horn faces are nondegenerate")
        })
        .collect();
    let mut fillers: HashMap<Vec<usize>, usize> = HashMap::new();
    for c in 0..x.size(n) {
        let key = faces.iter().map(|&(i, _)| x.face(n, i, c)).collect();
        *fillers.entry(key).or_insert(0) += 1;
    }
    let mut report = CheckReport::new("horn").bound("n", n).bound("k", k).bound("max_dim", x.dim());
    let maps = search.images();
    let mut filled = 0;
    for images in &maps {
        let key: Vec<usize> = slots.iter().map(|&s| images[s]).collect();
        if fillers.contains_key(&key) {
            filled += 1;
            continue;
        }
        let parts: Vec<String> = faces
            .iter()
            .zip(&key)
            .map(|((_, label), &c)| format!("{} ↦ {}", set_name(label), describe(x, n - 1, c)))
            .collect();
        report.fail(format!("Λ^{n}_{k} with {} has no filler", parts.join("; ")));
    }
    report.detail("maps", maps.len());
    report.detail("filled", filled);
    Ok(report)
}

/// All horns `Λⁿ_k`, `1 ≤ n ≤ n_max`; `inner` restricts to `0 < k < n`.
pub fn horn_check_all(x: &SimplicialSet, n_max: usize, inner: bool) -> Result<CheckReport> {
    let mut report = CheckReport::new("horns").bound("n_max", n_max).bound("max_dim", x.dim());
    for n in 1..=n_max {
        for k in 0..=n {
            if inner && (k == 0 || k == n) {
                continue;
            }
            report.merge(&horn_check(x, n, k)?);
        }
    }
    Ok(report)
}

/// Horn checks on every hom of a simplicial category.
pub fn horn_check_homs(sc: &SimplicialCategory, n_max: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("horns on homs").bound("n_max", n_max).bound("max_dim", sc.dim());
    for a in 0..sc.objects() {
        for b in 0..sc.objects() {
            let mut r = horn_check_all(sc.hom(a, b), n_max, false)?;
            r.check = format!("hom({}, {})", sc.names()[a], sc.names()[b]);
            report.merge(&r);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{nerve_cat, FiniteCategory};
    use crate::sset::{standard_simplex, FinitePoset};

    #[test]
    fn groupoid_nerve_is_kan() {
        let n = nerve_cat(&FiniteCategory::cyclic(2), 3);
        assert!(horn_check_all(&n, 3, false).unwrap().passed());
    }

    #[test]
    fn interval_fails_outer_horn() {
        let n = nerve_cat(&FiniteCategory::poset(&FinitePoset::chain(1)), 2);
        let r = horn_check(&n, 2, 0).unwrap();
        assert!(!r.passed());
        assert_eq!(r.witnesses.len(), 1);
        assert!(r.witnesses[0].contains("{0,1} ↦ cell 1 of level 1 on vertices (0, 1)"), "{}", r.witnesses[0]);
        assert!(r.witnesses[0].contains("{0,2} ↦ cell 0 of level 1 on vertices (0, 0)"), "{}", r.witnesses[0]);
    }

    #[test]
    fn simplices_fill_inner_horns() {
        let d = standard_simplex(2, 4);
        assert!(horn_check_all(&d, 4, true).unwrap().passed());
        assert!(!horn_check(&d, 2, 2).unwrap().passed());
    }

    #[test]
    fn truncation() {
        let n = nerve_cat(&FiniteCategory::cyclic(2), 2);
        assert!(matches!(horn_check(&n, 3, 1), Err(Error::Truncation { .. })));
    }
}
