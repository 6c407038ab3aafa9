//! Exhaustive search for natural families `C[Δⁿ] → B[Δⁿ]`.
//!
//! A simplicial functor `g : C[Δⁿ] → B[Δⁿ]` is determined by its object map
//! and its values on vertices, and the vertex `S = {i_0 < ⋯ < i_m}` of
//! `C[Δⁿ](i_0, i_m)` is the composite of the vertices `{i_{t−1}, i_t}`. So
//! `g` is determined by one tuple per pair `i < j`; the remaining values are
//! concatenations, and `g` is a functor exactly when the result is monotone
//! on every hom.

use serde::Serialize;

use crate::category::{bar_vertex, frak_c_vertex, subset_of, CubeFunctor};
use crate::sset::monotone_maps;

/// Tuples in `[m]^width`, lexicographic.
fn tuples(width: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..width {
        out = out
            .into_iter()
            .flat_map(|t: Vec<usize>| {
                (0..=m).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

/// Builds the functor from an object map and the values on the vertices
/// `{i, j}`, indexed by pair.
fn assemble(n: usize, objects: &[usize], atoms: &[Vec<usize>]) -> CubeFunctor {
    let objs = n + 1;
    let values = (0..objs * objs)
        .map(|p| {
            let (i, j) = (p / objs, p % objs);
            if i >= j {
                return Vec::new();
            }
            (0..1usize << (j - i - 1))
                .map(|mask| {
                    let s = subset_of(i, j, mask);
                    // top steps first
                    (1..s.len()).rev().flat_map(|t| atoms[s[t - 1] * objs + s[t]].iter().copied()).collect()
                })
                .collect()
        })
        .collect();
    CubeFunctor {
        n,
        p: n,
        m: n,
        objects: objects.to_vec(),
        values,
    }
}

/// All simplicial functors `C[Δⁿ] → B[Δⁿ]`.
pub fn functors(n: usize) -> Vec<CubeFunctor> {
    let objs = n + 1;
    let mut out = Vec::new();
    for objects in monotone_maps(n, n) {
        let pairs: Vec<(usize, usize)> = (0..objs).flat_map(|i| (i + 1..objs).map(move |j| (i, j))).collect();
        let choices: Vec<Vec<Vec<usize>>> = pairs.iter().map(|&(i, j)| tuples(objects[j] - objects[i], n)).collect();
        let mut pick = vec![0; pairs.len()];
        loop {
            let mut atoms = vec![Vec::new(); objs * objs];
            for (k, &(i, j)) in pairs.iter().enumerate() {
                atoms[i * objs + j] = choices[k][pick[k]].clone();
            }
            let g = assemble(n, &objects, &atoms);
            if g.validate().is_ok() {
                out.push(g);
            }
            // odometer over the atom choices
            let mut k = pairs.len();
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                pick[k] += 1;
                if pick[k] < choices[k].len() {
                    break;
                }
                pick[k] = 0;
            }
            if pick.iter().all(|&c| c == 0) {
                break;
            }
        }
    }
    out
}

/// First failure of `g_b ∘ C[f] = B[f] ∘ g_a`, if any.
pub fn naturality_failure(f: &[usize], ga: &CubeFunctor, gb: &CubeFunctor) -> Option<String> {
    let a = ga.n;
    for i in 0..=a {
        if gb.objects[f[i]] != f[ga.objects[i]] {
            return Some(format!("f = {f:?}: objects differ at {i}"));
        }
    }
    for i in 0..=a {
        for j in i + 1..=a {
            for mask in 0..1usize << (j - i - 1) {
                let (fi, fj, fmask) = frak_c_vertex(f, i, j, mask);
                let left = gb.value_or_identity(fi, fj, fmask);
                let right = bar_vertex(f, ga.objects[j], ga.value(i, j, mask));
                if left != right {
                    return Some(format!(
                        "f = {f:?}: vertex {:?} goes to {left:?} one way and {right:?} the other",
                        subset_of(i, j, mask)
                    ));
                }
            }
        }
    }
    None
}

/// Whether `g_n` extends the family `g_0, …, g_{n−1}` naturally for every
/// monotone map between `[a]` and `[b]` with `max(a, b) = n`.
fn extends(family: &[CubeFunctor], g: &CubeFunctor) -> Option<String> {
    let n = g.n;
    let at = |k: usize| if k == n { g } else { &family[k] };
    for a in 0..=n {
        for b in 0..=n {
            if a.max(b) != n {
                continue;
            }
            for f in monotone_maps(a, b) {
                if let Some(w) = naturality_failure(&f, at(a), at(b)) {
                    return Some(w);
                }
            }
        }
    }
    None
}

#[derive(Clone, Debug, Serialize)]
pub struct Elimination {
    /// The degree with no natural extension.
    pub degree: usize,
    pub family: Vec<CubeFunctor>,
    /// Why the nearest candidate fails.
    pub witness: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct UniquenessReport {
    /// "uniqueness at truncation N": naturality is only imposed up to `N`.
    pub label: String,
    pub max_degree: usize,
    /// Surviving family count after each degree.
    pub survivors: Vec<usize>,
    pub families: Vec<Vec<CubeFunctor>>,
    pub eliminated: Vec<Elimination>,
    /// Whether the single surviving family is `f_0, …, f_N`.
    pub unique_and_comparison: bool,
}

/// All natural families `{g_n}_{n ≤ N}`.
pub fn uniqueness_search(max_degree: usize) -> UniquenessReport {
    let mut families: Vec<Vec<CubeFunctor>> = functors(0).into_iter().map(|g| vec![g]).collect();
    let mut survivors = vec![families.len()];
    let mut eliminated = Vec::new();
    for n in 1..=max_degree {
        let candidates = functors(n);
        let mut next = Vec::new();
        for fam in families {
            let mut first_failure = None;
            let mut found = false;
            for g in &candidates {
                match extends(&fam, g) {
                    None => {
                        let mut ext = fam.clone();
                        ext.push(g.clone());
                        next.push(ext);
                        found = true;
                    }
                    Some(w) if first_failure.is_none() && g.objects.iter().enumerate().all(|(i, &o)| o == i) => {
                        first_failure = Some(format!("{:?}: {w}", g.values));
                    }
                    Some(_) => {}
                }
            }
            if !found {
                eliminated.push(Elimination {
                    degree: n,
                    family: fam,
                    witness: first_failure.unwrap_or_else(|| "no candidate".into()),
                });
            }
        }
        families = next;
        survivors.push(families.len());
    }
    let unique_and_comparison =
        families.len() == 1 && families[0].iter().enumerate().all(|(n, g)| *g == CubeFunctor::comparison(n));
    UniquenessReport {
        label: format!("uniqueness at truncation {max_degree}"),
        max_degree,
        survivors,
        families,
        eliminated,
        unique_and_comparison,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{comparison_functor, tuple_leq};

    /// All functors by raw enumeration: every monotone map on every hom,
    /// then composition.
    fn raw_functors(n: usize) -> Vec<CubeFunctor> {
        let objs = n + 1;
        let mut out = Vec::new();
        for objects in monotone_maps(n, n) {
            let pairs: Vec<(usize, usize)> = (0..objs).flat_map(|i| (i + 1..objs).map(move |j| (i, j))).collect();
            // each hom: all monotone maps from the cube to tuples
            let per_hom: Vec<Vec<Vec<Vec<usize>>>> = pairs
                .iter()
                .map(|&(i, j)| {
                    let verts = 1usize << (j - i - 1);
                    let ts = tuples(objects[j] - objects[i], n);
                    let mut maps: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
                    for _ in 0..verts {
                        maps = maps
                            .into_iter()
                            .flat_map(|m| {
                                ts.iter().map(move |t| {
                                    let mut m = m.clone();
                                    m.push(t.clone());
                                    m
                                })
                            })
                            .collect();
                    }
                    maps.into_iter()
                        .filter(|m| (0..verts).all(|a| (0..verts).all(|b| a & !b != 0 || tuple_leq(&m[a], &m[b]))))
                        .collect()
                })
                .collect();
            let mut pick = vec![0; pairs.len()];
            'outer: loop {
                let mut values = vec![Vec::new(); objs * objs];
                for (k, &(i, j)) in pairs.iter().enumerate() {
                    values[i * objs + j] = per_hom[k][pick[k]].clone();
                }
                let g = CubeFunctor {
                    n,
                    p: n,
                    m: n,
                    objects: objects.clone(),
                    values,
                };
                if g.validate().is_ok() {
                    out.push(g);
                }
                for k in (0..pairs.len()).rev() {
                    pick[k] += 1;
                    if pick[k] < per_hom[k].len() {
                        continue 'outer;
                    }
                    pick[k] = 0;
                }
                break;
            }
        }
        out
    }

    #[test]
    fn generators_match_raw_enumeration() {
        for n in 0..=2 {
            let mut a = functors(n);
            let mut b = raw_functors(n);
            a.sort_by(|x, y| format!("{x:?}").cmp(&format!("{y:?}")));
            b.sort_by(|x, y| format!("{x:?}").cmp(&format!("{y:?}")));
            assert_eq!(a, b, "degree {n}");
        }
    }

    #[test]
    fn two_candidates_at_degree_one() {
        let r = uniqueness_search(1);
        assert_eq!(r.families.len(), 2);
        let tops: Vec<Vec<usize>> = r.families.iter().map(|f| f[1].value(0, 1, 0).to_vec()).collect();
        assert!(tops.contains(&vec![0]) && tops.contains(&vec![1]));
    }

    #[test]
    fn unique_at_degree_two() {
        let r = uniqueness_search(2);
        assert_eq!(r.survivors, vec![1, 2, 1]);
        assert_eq!(r.label, "uniqueness at truncation 2");
        assert!(r.unique_and_comparison);
        assert_eq!(r.eliminated.len(), 1);
        assert_eq!(r.eliminated[0].degree, 2);
        assert_eq!(r.eliminated[0].family[1].value(0, 1, 0), &[1]);
        for (n, g) in r.families[0].iter().enumerate() {
            assert_eq!(g.to_simplicial(3).unwrap(), comparison_functor(n, 3).2);
        }
    }
}
