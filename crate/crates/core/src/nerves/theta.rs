//! `θ : N_bi⁺(C, W) → Cls⁺(N_hc C, mor W_0)`.
//!
//! A `(p, q)`-cell `σ` of the binerve is a functor `σ' : [p]_{Δ^q} → C`. Its
//! image sends a chain `τ` of `[p] × [q]` to the coherent simplex
//! `σ' ∘ χ ∘ C[τ]`. The `(i, j)` component of that simplex only depends on
//! `τ` restricted to `[i, j]`, so images are built along chains: every
//! component below the top one is copied from a shorter chain.

use std::collections::HashMap;

use rayon::prelude::*;

use super::binerve::{binerve_marked, Binerve, Chain};
use super::cls::{cls_diagram, codegeneracy, coface, map_chain, Grid};
use super::coherent::{hc_nerve, HcSimplex};
use super::comparison::{bar_component, bar_simplex};
use crate::bisset::validate_map;
use crate::category::{ChiComposite, RelativeSimplicialCategory, SimplicialCategory};
use crate::report::{CheckReport, ValidationReport};
use crate::{Error, Result};

/// `θ(σ)(τ)` for any chain `τ` (repeats allowed), computed directly.
pub fn theta_value(sc: &SimplicialCategory, chain: &Chain, p: usize, q: usize, tau: &[(usize, usize)]) -> Result<HcSimplex> {
    let chi = ChiComposite::new(p, q, tau.to_vec())?;
    let a: Vec<usize> = tau.iter().map(|&(x, _)| x).collect();
    Ok(bar_simplex(sc, chain, q, &a, |i, j, m| chi.hom_vertex(i, j, m)))
}

/// `θ(σ)` on every chain of `grid`, in grid order.
pub fn theta_images(sc: &SimplicialCategory, chain: &Chain, grid: &Grid) -> Vec<HcSimplex> {
    let mut out: Vec<HcSimplex> = Vec::with_capacity(grid.len());
    for tau in grid.chains() {
        let r = tau.len() - 1;
        let a: Vec<usize> = tau.iter().map(|&(x, _)| x).collect();
        if r == 0 {
            out.push(HcSimplex::vertex(chain.objects[a[0]]));
            continue;
        }
        let chi = ChiComposite::new(grid.p, grid.q, tau.clone()).expect("grid chains are monotone");
        let components = super::coherent::pairs(r)
            .into_iter()
            .map(|(i, j)| {
                if j - i < r {
                    let sub = grid.position(&tau[i..=j]).expect("subchains of strict chains are strict");
                    out[sub].components().last().expect("positive level").clone()
                } else {
                    bar_component(sc, chain, grid.q, &a, 0, r, &|i, j, m| chi.hom_vertex(i, j, m))
                }
            })
            .collect();
        out.push(HcSimplex::from_parts(a.iter().map(|&k| chain.objects[k]).collect(), components));
    }
    out
}

struct Tables {
    grid: Grid,
    /// `faces[i][k']`: position in this grid of `(δ_i × id) τ'`, resp.
    /// `(id × δ_i) τ'`, for `τ'` a maximal chain of the face grid
    hfaces: Vec<Vec<usize>>,
    vfaces: Vec<Vec<usize>>,
    /// `hcollapse[j][k]`: for `τ` maximal here, `(σ_j × id) τ` collapsed in
    /// the grid of `(p − 1, q)`
    hcollapse: Vec<Vec<(usize, Vec<usize>)>>,
    vcollapse: Vec<Vec<(usize, Vec<usize>)>>,
    /// `inner[k]`: for a chain of level `r ≥ 2` and `0 < t < r`, the
    /// position of its `t`th face
    inner: Vec<Vec<usize>>,
}

fn tables(grids: &HashMap<(usize, usize), Grid>, p: usize, q: usize) -> Tables {
    let grid = Grid::new(p, q);
    let id = |n: usize| -> Vec<usize> { (0..=n).collect() };
    let maximal = |g: &Grid| g.level(g.top()).map(|k| g.chain(k).clone()).collect::<Vec<_>>();
    let hfaces = if p == 0 {
        Vec::new()
    } else {
        let lower = maximal(&grids[&(p - 1, q)]);
        (0..=p)
            .map(|i| lower.iter().map(|t| grid.position(&map_chain(t, &coface(p, i), &id(q))).expect("strict")).collect())
            .collect()
    };
    let vfaces = if q == 0 {
        Vec::new()
    } else {
        let lower = maximal(&grids[&(p, q - 1)]);
        (0..=q)
            .map(|i| lower.iter().map(|t| grid.position(&map_chain(t, &id(p), &coface(q, i))).expect("strict")).collect())
            .collect()
    };
    let top = maximal(&grid);
    let hcollapse = if p == 0 {
        Vec::new()
    } else {
        let g = &grids[&(p - 1, q)];
        (0..p)
            .map(|j| top.iter().map(|t| g.collapse(&map_chain(t, &codegeneracy(p - 1, j), &id(q)))).collect())
            .collect()
    };
    let vcollapse = if q == 0 {
        Vec::new()
    } else {
        let g = &grids[&(p, q - 1)];
        (0..q)
            .map(|j| top.iter().map(|t| g.collapse(&map_chain(t, &id(p), &codegeneracy(q - 1, j)))).collect())
            .collect()
    };
    let inner = grid
        .chains()
        .iter()
        .map(|t| {
            let r = t.len() - 1;
            (1..r.max(1))
                .map(|k| {
                    let mut f = t.clone();
                    f.remove(k);
                    grid.position(&f).expect("strict")
                })
                .collect()
        })
        .collect();
    Tables {
        grid,
        hfaces,
        vfaces,
        hcollapse,
        vcollapse,
        inner,
    }
}

fn degenerate(sc: &SimplicialCategory, s: &HcSimplex, word: &[usize]) -> HcSimplex {
    word.iter().fold(s.clone(), |acc, &k| acc.degeneracy(sc, k))
}

/// Checks `θ` up to bidegree `(P, Q)`, `P + Q ≤ D`: every image is a valid
/// map `Δᵖ × Δ^q → N_hc(C)` with the slice condition, marked cells go to
/// marked cells, and `θ` commutes with all horizontal and vertical faces
/// and degeneracies.
pub fn verify_theta(rel: &RelativeSimplicialCategory, cols: usize, rows: usize) -> Result<CheckReport> {
    let sc = rel.cat();
    if cols + rows > sc.dim() {
        return Err(Error::truncation("theta", cols + rows, sc.dim()));
    }
    let b = binerve_marked(rel, cols, rows)?;
    let space = b.space();
    let mut order: Vec<(usize, usize)> = (0..=cols).flat_map(|p| (0..=rows).map(move |q| (p, q))).collect();
    order.sort_by_key(|&(p, q)| (p + q, p));
    let mut grids: HashMap<(usize, usize), Grid> = HashMap::new();
    let mut stored: HashMap<(usize, usize), Vec<Vec<HcSimplex>>> = HashMap::new();
    let mut report = ValidationReport::new();
    let mut checked = serde_json::Map::new();
    for &(p, q) in &order {
        let t = tables(&grids, p, q);
        let keep = p < cols || q < rows;
        // σ ↦ [(j, ρ)] with s^h_j ρ = σ, and likewise vertically
        let mut hpre: Vec<Vec<(usize, usize)>> = vec![Vec::new(); space.size(p, q)];
        if p > 0 {
            for j in 0..p {
                for rho in 0..space.size(p - 1, q) {
                    hpre[space.hdegen(p - 1, q, j, rho)].push((j, rho));
                }
            }
        }
        let mut vpre: Vec<Vec<(usize, usize)>> = vec![Vec::new(); space.size(p, q)];
        if q > 0 {
            for j in 0..q {
                for rho in 0..space.size(p, q - 1) {
                    vpre[space.vdegen(p, q - 1, j, rho)].push((j, rho));
                }
            }
        }
        let hlower = p.checked_sub(1).and_then(|pl| stored.get(&(pl, q)));
        let vlower = q.checked_sub(1).and_then(|ql| stored.get(&(p, ql)));
        let results: Vec<(Vec<HcSimplex>, ValidationReport)> = (0..space.size(p, q))
            .into_par_iter()
            .map(|s| {
                let chain = b.chain(p, q, s);
                let images = theta_images(sc, &chain, &t.grid);
                let r = check_cell(rel, &b, &t, p, q, s, &images, hlower, vlower, &hpre[s], &vpre[s]);
                (if keep { images } else { Vec::new() }, r)
            })
            .collect();
        let mut level = Vec::with_capacity(results.len());
        for (images, r) in results {
            report.absorb(&format!("bidegree ({p}, {q})"), r);
            level.push(images);
        }
        checked.insert(format!("{p},{q}"), space.size(p, q).into());
        if keep {
            stored.insert((p, q), level);
        }
        grids.insert((p, q), t.grid);
    }
    let mut out = CheckReport::from_validation("theta", &report).bound("cols", cols).bound("rows", rows);
    out.detail("cells", serde_json::Value::Object(checked));
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn check_cell(
    rel: &RelativeSimplicialCategory,
    b: &Binerve,
    t: &Tables,
    p: usize,
    q: usize,
    s: usize,
    images: &[HcSimplex],
    hlower: Option<&Vec<Vec<HcSimplex>>>,
    vlower: Option<&Vec<Vec<HcSimplex>>>,
    hpre: &[(usize, usize)],
    vpre: &[(usize, usize)],
) -> ValidationReport {
    let sc = rel.cat();
    let space = b.space();
    let grid = &t.grid;
    let mut r = ValidationReport::new();
    let at = |k: usize| format!("cell ({p}, {q}, {s}) at chain {:?}", grid.chain(k));
    for k in grid.level(grid.top()) {
        let v = images[k].validate(sc);
        if !v.is_ok() {
            r.absorb(&at(k), v);
        }
    }
    for (k, tau) in grid.chains().iter().enumerate() {
        let lv = tau.len() - 1;
        for (idx, &f) in t.inner[k].iter().enumerate() {
            let i = idx + 1;
            let delta = coface(lv, i);
            for a in 0..i {
                for bb in i..lv {
                    if images[k].precompose_component(sc, &delta, a, bb).as_ref() != images[f].component(a, bb) {
                        r.push("face", at(k), format!("d_{i} differs on component ({a},{bb})"));
                    }
                }
            }
        }
    }
    let edge_in_w = |k: usize| {
        let e = &images[k];
        rel.in_sub(e.objects()[0], e.objects()[1], 0, e.component(0, 1)[0] as usize)
    };
    for k in grid.level(1) {
        let tau = grid.chain(k);
        if tau[0].0 == tau[1].0 && !edge_in_w(k) {
            r.push("slice", at(k), "slice edge outside mor W_0");
        }
    }
    if p == 1 && b.marked.is_marked(q, s) {
        for k in grid.level(1) {
            if !edge_in_w(k) {
                r.push("marking", at(k), "marked cell has an edge outside mor W_0");
            }
        }
    }
    let top: Vec<usize> = grid.level(grid.top()).collect();
    if let Some(lower) = hlower {
        for i in 0..=p {
            let f = space.hface(p, q, i, s);
            for (k2, &k) in t.hfaces[i].iter().enumerate() {
                let want = &lower[f][lower[f].len() - t.hfaces[i].len() + k2];
                if &images[k] != want {
                    r.push("horizontal face", at(k), format!("d^h_{i}"));
                }
            }
        }
        for &(j, rho) in hpre {
            for (k2, (pos, word)) in t.hcollapse[j].iter().enumerate() {
                if images[top[k2]] != degenerate(sc, &lower[rho][*pos], word) {
                    r.push("horizontal degeneracy", at(top[k2]), format!("s^h_{j} of cell {rho}"));
                }
            }
        }
    }
    if let Some(lower) = vlower {
        for i in 0..=q {
            let f = space.vface(p, q, i, s);
            for (k2, &k) in t.vfaces[i].iter().enumerate() {
                let want = &lower[f][lower[f].len() - t.vfaces[i].len() + k2];
                if &images[k] != want {
                    r.push("vertical face", at(k), format!("d^v_{i}"));
                }
            }
        }
        for &(j, rho) in vpre {
            for (k2, (pos, word)) in t.vcollapse[j].iter().enumerate() {
                if images[top[k2]] != degenerate(sc, &lower[rho][*pos], word) {
                    r.push("vertical degeneracy", at(top[k2]), format!("s^v_{j} of cell {rho}"));
                }
            }
        }
    }
    r
}

/// Builds `Cls⁺(N_hc C, mor W_0)` and `θ` as an explicit map of marked
/// bisimplicial sets, then checks it. Only feasible for small inputs.
pub fn theta_into_cls(rel: &RelativeSimplicialCategory, cols: usize, rows: usize) -> Result<CheckReport> {
    let sc = rel.cat();
    if cols + rows > sc.dim() {
        return Err(Error::truncation("theta", cols + rows, sc.dim()));
    }
    let b = binerve_marked(rel, cols, rows)?;
    let nerve = hc_nerve(sc, cols + rows)?;
    let cls = cls_diagram(&nerve.marked(rel), cols, rows)?;
    let mut report = ValidationReport::new();
    let mut cells = Vec::new();
    for p in 0..=cols {
        let mut col = Vec::new();
        for q in 0..=rows {
            let grid = cls.grid(p, q);
            let mut level = Vec::new();
            for s in 0..b.space().size(p, q) {
                let images: Option<Vec<usize>> = theta_images(sc, &b.chain(p, q, s), grid).iter().map(|x| nerve.find(x)).collect();
                match images.and_then(|im| cls.find(p, q, &im)) {
                    Some(c) => level.push(c),
                    None => {
                        report.push("image", format!("cell ({p}, {q}, {s})"), "not a cell of the classification diagram");
                        level.push(0);
                    }
                }
            }
            col.push(level);
        }
        cells.push(col);
    }
    if report.is_ok() {
        report = validate_map(&b.marked, &cls.marked, &cells);
    }
    Ok(CheckReport::from_validation("theta into Cls", &report).bound("cols", cols).bound("rows", rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::FiniteCategory;
    use crate::sset::FinitePoset;

    fn bg_z2(d: usize) -> RelativeSimplicialCategory {
        RelativeSimplicialCategory::whole(SimplicialCategory::bg(&FiniteCategory::cyclic(2), d).unwrap())
    }

    #[test]
    fn memo_matches_direct() {
        let rel = bg_z2(4);
        let b = binerve_marked(&rel, 2, 2).unwrap();
        let grid = Grid::new(2, 2);
        for s in 0..b.space().size(2, 2) {
            let chain = b.chain(2, 2, s);
            let images = theta_images(rel.cat(), &chain, &grid);
            for (k, tau) in grid.chains().iter().enumerate() {
                assert_eq!(images[k], theta_value(rel.cat(), &chain, 2, 2, tau).unwrap());
            }
        }
    }

    #[test]
    fn small_bidegrees_pass() {
        assert!(verify_theta(&bg_z2(4), 2, 2).unwrap().passed());
        let c = FiniteCategory::poset(&FinitePoset::chain(1));
        let rel = RelativeSimplicialCategory::identities(SimplicialCategory::discrete(&c, 4));
        assert!(verify_theta(&rel, 2, 2).unwrap().passed());
    }

    #[test]
    fn explicit_map_into_cls() {
        let r = theta_into_cls(&bg_z2(2), 1, 1).unwrap();
        assert!(r.passed(), "{r:?}");
        let c = FiniteCategory::poset(&FinitePoset::chain(1));
        let rel = RelativeSimplicialCategory::identities(SimplicialCategory::discrete(&c, 3));
        assert!(theta_into_cls(&rel, 2, 1).unwrap().passed());
    }
}
