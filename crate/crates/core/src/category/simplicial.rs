use std::collections::HashMap;

use super::finite::{nerve_cat_labeled, FiniteCategory};
use crate::report::ValidationReport;
use crate::sset::{poset_nerve_labeled, product, FinitePoset, SimplicialMap, SimplicialSet};
use crate::verify::pi0::UnionFind;
use crate::{Error, Result};

/// A simplicial category with finitely many objects and homs truncated at a
/// common dimension.
///
/// Composition at level `l` for objects `x, y, z` is a table indexed by
/// `a * |hom(x,y)_l| + b` for `a ∈ hom(y,z)_l`, `b ∈ hom(x,y)_l`, giving
/// `a ∘ b ∈ hom(x,z)_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialCategory {
    names: Vec<String>,
    dim: usize,
    homs: Vec<SimplicialSet>,
    comp: Vec<Vec<Vec<u32>>>,
    ids: Vec<usize>,
    id_cells: Vec<Vec<usize>>,
}

impl SimplicialCategory {
    /// Checks shapes and ranges; the category axioms are left to
    /// [`SimplicialCategory::validate`].
    pub fn from_parts(
        names: Vec<String>,
        dim: usize,
        homs: Vec<SimplicialSet>,
        comp: Vec<Vec<Vec<u32>>>,
        ids: Vec<usize>,
    ) -> Result<Self> {
        let n = names.len();
        let bad = |m: String| Err(Error::Malformed(m));
        if homs.len() != n * n || comp.len() != n * n * n || ids.len() != n {
            return bad("simplicial category tables have inconsistent lengths".into());
        }
        if let Some((k, h)) = homs.iter().enumerate().find(|(_, h)| h.dim() != dim) {
            return bad(format!("hom({},{}) has dimension {}, expected {dim}", k / n, k % n, h.dim()));
        }
        for x in 0..n {
            if ids[x] >= homs[x * n + x].size(0) {
                return bad(format!("identity of object {x} is not a vertex"));
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let t = &comp[(x * n + y) * n + z];
                    if t.len() != dim + 1 {
                        return bad(format!("composition ({x},{y},{z}) has {} levels", t.len()));
                    }
                    for l in 0..=dim {
                        let want = homs[y * n + z].size(l) * homs[x * n + y].size(l);
                        if t[l].len() != want {
                            return bad(format!("composition ({x},{y},{z}) level {l} has {} entries, expected {want}", t[l].len()));
                        }
                        let limit = homs[x * n + z].size(l);
                        if t[l].iter().any(|&c| c as usize >= limit) {
                            return bad(format!("composition ({x},{y},{z}) level {l} out of range"));
                        }
                    }
                }
            }
        }
        let id_cells = (0..n)
            .map(|x| {
                let h = &homs[x * n + x];
                let mut v = vec![ids[x]];
                for l in 0..dim {
                    v.push(h.degen(l, 0, v[l]));
                }
                v
            })
            .collect();
        Ok(SimplicialCategory {
            names,
            dim,
            homs,
            comp,
            ids,
            id_cells,
        })
    }

    /// Builds composition tables from a rule on cells.
    pub fn from_rule(
        names: Vec<String>,
        dim: usize,
        homs: Vec<SimplicialSet>,
        ids: Vec<usize>,
        rule: impl Fn(usize, usize, usize, usize, usize, usize) -> usize,
    ) -> Result<Self> {
        let n = names.len();
        if homs.len() != n * n {
            return Err(Error::Malformed("wrong number of homs".into()));
        }
        let mut comp = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let levels = (0..=dim)
                        .map(|l| {
                            let (sa, sb) = (homs[y * n + z].size(l), homs[x * n + y].size(l));
                            let mut t = Vec::with_capacity(sa * sb);
                            for a in 0..sa {
                                for b in 0..sb {
                                    t.push(rule(x, y, z, l, a, b) as u32);
                                }
                            }
                            t
                        })
                        .collect();
                    comp.push(levels);
                }
            }
        }
        Self::from_parts(names, dim, homs, comp, ids)
    }

    /// The discrete simplicial category on `c`: `hom(x, y)` is the set of
    /// morphisms `x → y` in `c`, constant in every level.
    pub fn discrete(c: &FiniteCategory, dim: usize) -> Self {
        let n = c.objects();
        let homs_list: Vec<Vec<usize>> = (0..n * n).map(|k| c.hom(k / n, k % n)).collect();
        let local: Vec<HashMap<usize, usize>> = homs_list
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, &f)| (f, i)).collect())
            .collect();
        let homs = homs_list.iter().map(|l| SimplicialSet::discrete(l.len(), dim)).collect();
        let ids = (0..n).map(|x| local[x * n + x][&c.identity(x)]).collect();
        Self::from_rule(numbered(n), dim, homs, ids, |x, y, z, _, a, b| {
            let g = homs_list[y * n + z][a];
            let f = homs_list[x * n + y][b];
            local[x * n + z][&c.compose(g, f).expect("composable")]
        })
        .expect("discrete category data is well formed")
    }

    /// The one-object simplicial category whose hom is the nerve of an
    /// abelian group with pointwise multiplication.
    pub fn bg(group: &FiniteCategory, dim: usize) -> Result<Self> {
        if group.objects() != 1 {
            return Err(Error::Malformed("bg needs a one-object category".into()));
        }
        let m = group.morphisms();
        for g in 0..m {
            if !group.is_iso(g) {
                return Err(Error::Malformed("bg needs a group".into()));
            }
            for h in 0..m {
                if group.compose(g, h) != group.compose(h, g) {
                    return Err(Error::Malformed("pointwise multiplication needs an abelian group".into()));
                }
            }
        }
        let nerve = nerve_cat_labeled(group, dim);
        let hom = nerve.set.clone();
        let rule = |_: usize, _: usize, _: usize, l: usize, a: usize, b: usize| {
            if l == 0 {
                return 0;
            }
            let (la, lb) = (&nerve.labels[l][a], &nerve.labels[l][b]);
            let prod: Vec<usize> = la.iter().zip(lb).map(|(&g, &h)| group.compose(g, h).expect("group")).collect();
            nerve.index[l][&prod]
        };
        Self::from_rule(vec!["x".into()], dim, vec![hom], vec![0], rule)
    }

    pub fn objects(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn hom(&self, x: usize, y: usize) -> &SimplicialSet {
        &self.homs[x * self.objects() + y]
    }

    pub fn identity(&self, x: usize) -> usize {
        self.ids[x]
    }

    /// The identity of `x` degenerated up to level `l`.
    pub fn identity_at(&self, x: usize, l: usize) -> usize {
        self.id_cells[x][l]
    }

    /// `a ∘ b` at level `l` for `a ∈ hom(y,z)_l`, `b ∈ hom(x,y)_l`.
    pub fn compose(&self, x: usize, y: usize, z: usize, l: usize, a: usize, b: usize) -> usize {
        let n = self.objects();
        let stride = self.homs[x * n + y].size(l);
        self.comp[(x * n + y) * n + z][l][a * stride + b] as usize
    }

    pub fn comp_tables(&self) -> &Vec<Vec<Vec<u32>>> {
        &self.comp
    }

    /// Restriction of every hom to levels `0..=dim`.
    pub fn truncate(&self, dim: usize) -> Self {
        let dim = dim.min(self.dim);
        SimplicialCategory::from_parts(
            self.names.clone(),
            dim,
            self.homs.iter().map(|h| h.truncate(dim)).collect(),
            self.comp.iter().map(|t| t[..=dim].to_vec()).collect(),
            self.ids.clone(),
        )
        .expect("truncation of valid data")
    }

    /// Whether every hom is constant: all operators are bijections.
    pub fn is_discrete(&self) -> bool {
        self.homs.iter().all(|h| h.sizes().iter().all(|&s| s == h.size(0)) && h.nondegenerate_counts().iter().skip(1).all(|&c| c == 0))
    }

    /// The category `C_l`: morphisms `x → y` are the cells of
    /// `hom(x,y)_l`, numbered by object pair (lexicographic) then cell.
    pub fn level_category(&self, l: usize) -> Result<FiniteCategory> {
        if l > self.dim {
            return Err(Error::truncation("level_category", l, self.dim));
        }
        let n = self.objects();
        let offsets = self.level_offsets(l);
        let total = offsets[n * n];
        let mut src = Vec::with_capacity(total);
        let mut tgt = Vec::with_capacity(total);
        for x in 0..n {
            for y in 0..n {
                for _ in 0..self.hom(x, y).size(l) {
                    src.push(x);
                    tgt.push(y);
                }
            }
        }
        let ids = (0..n).map(|x| offsets[x * n + x] + self.id_cells[x][l]).collect();
        let mut comp = HashMap::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for a in 0..self.hom(y, z).size(l) {
                        for b in 0..self.hom(x, y).size(l) {
                            let c = self.compose(x, y, z, l, a, b);
                            comp.insert((offsets[y * n + z] + a, offsets[x * n + y] + b), offsets[x * n + z] + c);
                        }
                    }
                }
            }
        }
        Ok(FiniteCategory::from_table(n, src, tgt, ids, comp))
    }

    /// `offsets[x * n + y]` is the number of the first morphism `x → y` in
    /// [`SimplicialCategory::level_category`]; the last entry is the total.
    pub fn level_offsets(&self, l: usize) -> Vec<usize> {
        let mut v = Vec::with_capacity(self.homs.len() + 1);
        let mut acc = 0;
        for h in &self.homs {
            v.push(acc);
            acc += h.size(l);
        }
        v.push(acc);
        v
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        let n = self.objects();
        for x in 0..n {
            for y in 0..n {
                r.absorb(&format!("hom({x},{y})"), self.hom(x, y).validate());
            }
        }
        if !r.is_ok() {
            return r;
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    self.check_comp_simplicial(x, y, z, &mut r);
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let h = self.hom(x, y);
                for l in 0..=self.dim {
                    for a in 0..h.size(l) {
                        if self.compose(x, y, y, l, self.id_cells[y][l], a) != a
                            || self.compose(x, x, y, l, a, self.id_cells[x][l]) != a
                        {
                            r.push("unit", format!("hom({x},{y}) cell ({l}, {a})"), "identity does not act trivially");
                        }
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for w in 0..n {
                        for l in 0..=self.dim {
                            for c in 0..self.hom(z, w).size(l) {
                                for b in 0..self.hom(y, z).size(l) {
                                    let cb = self.compose(y, z, w, l, c, b);
                                    for a in 0..self.hom(x, y).size(l) {
                                        let left = self.compose(x, y, w, l, cb, a);
                                        let right = self.compose(x, z, w, l, c, self.compose(x, y, z, l, b, a));
                                        if left != right {
                                            r.push(
                                                "associativity",
                                                format!("objects ({x},{y},{z},{w}) level {l}"),
                                                format!("cells ({c}, {b}, {a})"),
                                            );
                                        }
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

    fn check_comp_simplicial(&self, x: usize, y: usize, z: usize, r: &mut ValidationReport) {
        let (hyz, hxy, hxz) = (self.hom(y, z), self.hom(x, y), self.hom(x, z));
        for l in 0..=self.dim {
            for a in 0..hyz.size(l) {
                for b in 0..hxy.size(l) {
                    let c = self.compose(x, y, z, l, a, b);
                    if l > 0 {
                        for i in 0..=l {
                            let lhs = hxz.face(l, i, c);
                            let rhs = self.compose(x, y, z, l - 1, hyz.face(l, i, a), hxy.face(l, i, b));
                            if lhs != rhs {
                                r.push(
                                    "composition-face",
                                    format!("objects ({x},{y},{z}) level {l} cells ({a}, {b})"),
                                    format!("d_{i}"),
                                );
                            }
                        }
                    }
                    if l < self.dim {
                        for i in 0..=l {
                            let lhs = hxz.degen(l, i, c);
                            let rhs = self.compose(x, y, z, l + 1, hyz.degen(l, i, a), hxy.degen(l, i, b));
                            if lhs != rhs {
                                r.push(
                                    "composition-degeneracy",
                                    format!("objects ({x},{y},{z}) level {l} cells ({a}, {b})"),
                                    format!("s_{i}"),
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

pub(crate) fn numbered(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// `K^m` with the first factor most significant; `K^0` is the point.
pub(crate) fn power(k: &SimplicialSet, m: usize) -> SimplicialSet {
    if m == 0 {
        return SimplicialSet::point(k.dim());
    }
    product(k, &power(k, m - 1))
}

/// `[n]_K`: objects `0..=n`, `hom(i, j) = K^(j−i)` for `i ≤ j` and empty
/// otherwise, composition by concatenation.
///
/// A cell of `hom(i, j)` is a tuple whose position `t` belongs to the step
/// `j − t → j − t + 1`, i.e. steps are listed from the top down; the
/// composite of `g ∈ hom(j, k)` and `f ∈ hom(i, j)` is `g` followed by `f`.
pub fn interval_power_cat(n: usize, k: &SimplicialSet) -> SimplicialCategory {
    let objs = n + 1;
    let dim = k.dim();
    let homs: Vec<SimplicialSet> = (0..objs * objs)
        .map(|p| {
            let (i, j) = (p / objs, p % objs);
            if i <= j {
                power(k, j - i)
            } else {
                SimplicialSet::empty(dim)
            }
        })
        .collect();
    SimplicialCategory::from_rule(numbered(objs), dim, homs, vec![0; objs], |i, j, _, l, a, b| {
        a * k.size(l).pow((j - i) as u32) + b
    })
    .expect("concatenation data is well formed")
}

/// `C[Δⁿ]`: `hom(i, j)` is the nerve of the poset of subsets of `{i..=j}`
/// containing `i` and `j`, composition by union.
///
/// A subset is encoded by its middle elements relative to `i`: the element
/// `i + t` (`0 < t < j − i`) is bit `t − 1`. Vertices are ordered by this
/// mask.
pub fn frak_c(n: usize, dim: usize) -> SimplicialCategory {
    let objs = n + 1;
    let nerves: Vec<Option<crate::sset::LabeledSet<Vec<usize>>>> = (0..objs * objs)
        .map(|p| {
            let (i, j) = (p / objs, p % objs);
            (i < j).then(|| poset_nerve_labeled(&FinitePoset::cube(j - i), dim))
        })
        .collect();
    let homs: Vec<SimplicialSet> = (0..objs * objs)
        .map(|p| {
            let (i, j) = (p / objs, p % objs);
            match (&nerves[p], i == j) {
                (Some(l), _) => l.set.clone(),
                (None, true) => SimplicialSet::point(dim),
                (None, false) => SimplicialSet::empty(dim),
            }
        })
        .collect();
    SimplicialCategory::from_rule(numbered(objs), dim, homs, vec![0; objs], |i, j, k, l, a, b| {
        if i == j {
            return a;
        }
        if j == k {
            return b;
        }
        let upper = &nerves[j * objs + k].as_ref().expect("j < k").labels[l][a];
        let lower = &nerves[i * objs + j].as_ref().expect("i < j").labels[l][b];
        let union: Vec<usize> = upper
            .iter()
            .zip(lower)
            .map(|(&t, &s)| s | (1 << (j - i - 1)) | (t << (j - i)))
            .collect();
        nerves[i * objs + k].as_ref().expect("i < k").index[l][&union]
    })
    .expect("union data is well formed")
}

/// `B[Δⁿ] = [n]_{Δⁿ}` truncated at `dim`.
pub fn frak_b(n: usize, dim: usize) -> SimplicialCategory {
    interval_power_cat(n, &crate::sset::standard_simplex(n, dim))
}

/// A simplicial category with a designated simplicial subcategory `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeSimplicialCategory {
    cat: SimplicialCategory,
    sub: Vec<Vec<Vec<bool>>>,
}

impl RelativeSimplicialCategory {
    /// `sub[x * n + y][l][c]` flags the cells of `W(x, y)`.
    pub fn from_flags(cat: SimplicialCategory, sub: Vec<Vec<Vec<bool>>>) -> Result<Self> {
        let n = cat.objects();
        if sub.len() != n * n {
            return Err(Error::Malformed("sub has the wrong number of homs".into()));
        }
        for (p, s) in sub.iter().enumerate() {
            let h = &cat.homs[p];
            if s.len() != h.dim() + 1 || s.iter().enumerate().any(|(l, f)| f.len() != h.size(l)) {
                return Err(Error::Malformed(format!("sub({},{}) has the wrong shape", p / n, p % n)));
            }
        }
        Ok(RelativeSimplicialCategory { cat, sub })
    }

    /// `W = C`.
    pub fn whole(cat: SimplicialCategory) -> Self {
        let sub = cat.homs.iter().map(|h| h.sizes().iter().map(|&s| vec![true; s]).collect()).collect();
        RelativeSimplicialCategory { cat, sub }
    }

    /// `W` = the components of the given vertices, closed up to all cells
    /// whose vertices lie in them.
    pub fn from_vertices(cat: SimplicialCategory, chosen: impl Fn(usize, usize, usize) -> bool) -> Self {
        let n = cat.objects();
        let sub = (0..n * n)
            .map(|p| {
                let h = &cat.homs[p];
                let classes = crate::verify::pi0::pi0(h);
                let mut keep = vec![false; h.size(0)];
                for class in &classes {
                    if class.iter().any(|&v| chosen(p / n, p % n, v)) {
                        for &v in class {
                            keep[v] = true;
                        }
                    }
                }
                (0..=h.dim())
                    .map(|l| (0..h.size(l)).map(|c| keep[first_vertex(h, l, c)]).collect())
                    .collect()
            })
            .collect();
        RelativeSimplicialCategory { cat, sub }
    }

    /// `W` = the identity cells only (degenerated identities).
    pub fn identities(cat: SimplicialCategory) -> Self {
        let n = cat.objects();
        let sub = (0..n * n)
            .map(|p| {
                let (x, y) = (p / n, p % n);
                let h = &cat.homs[p];
                (0..=h.dim())
                    .map(|l| (0..h.size(l)).map(|c| x == y && c == cat.id_cells[x][l]).collect())
                    .collect()
            })
            .collect();
        RelativeSimplicialCategory { cat, sub }
    }

    /// `W` = the components of vertices that become invertible in `π₀C`.
    pub fn homotopy_isos(cat: SimplicialCategory) -> Self {
        let n = cat.objects();
        let comps: Vec<Vec<usize>> = (0..n * n)
            .map(|p| {
                let classes = crate::verify::pi0::pi0(&cat.homs[p]);
                let mut of = vec![0; cat.homs[p].size(0)];
                for (k, c) in classes.iter().enumerate() {
                    for &v in c {
                        of[v] = k;
                    }
                }
                of
            })
            .collect();
        let invertible = |x: usize, y: usize, v: usize| {
            (0..cat.hom(y, x).size(0)).any(|w| {
                let wv = cat.compose(x, y, x, 0, w, v);
                let vw = cat.compose(y, x, y, 0, v, w);
                comps[x * n + x][wv] == comps[x * n + x][cat.ids[x]] && comps[y * n + y][vw] == comps[y * n + y][cat.ids[y]]
            })
        };
        let chosen: Vec<Vec<bool>> = (0..n * n)
            .map(|p| (0..cat.homs[p].size(0)).map(|v| invertible(p / n, p % n, v)).collect())
            .collect();
        Self::from_vertices(cat, move |x, y, v| chosen[x * n + y][v])
    }

    pub fn cat(&self) -> &SimplicialCategory {
        &self.cat
    }

    pub fn in_sub(&self, x: usize, y: usize, l: usize, c: usize) -> bool {
        self.sub[x * self.cat.objects() + y][l][c]
    }

    /// The wide subcategory restricted to level `l`, as a set of morphisms
    /// of [`SimplicialCategory::level_category`].
    pub fn level_sub(&self, l: usize) -> Vec<bool> {
        let n = self.cat.objects();
        (0..n * n).flat_map(|p| self.sub[p][l].iter().copied()).collect()
    }

    pub fn truncate(&self, dim: usize) -> Self {
        let cat = self.cat.truncate(dim);
        let sub = self.sub.iter().map(|s| s[..=cat.dim()].to_vec()).collect();
        RelativeSimplicialCategory { cat, sub }
    }

    /// Checks the category, that `W` is a simplicial subcategory containing
    /// every identity, and that each `W(x, y)` is a union of components.
    pub fn validate(&self) -> ValidationReport {
        let mut r = self.cat.validate();
        if !r.is_ok() {
            return r;
        }
        let n = self.cat.objects();
        let dim = self.cat.dim;
        for x in 0..n {
            for y in 0..n {
                let h = self.cat.hom(x, y);
                let s = &self.sub[x * n + y];
                let at = |l: usize, c: usize| format!("hom({x},{y}) cell ({l}, {c})");
                for l in 0..=dim {
                    for c in 0..h.size(l) {
                        if !s[l][c] {
                            continue;
                        }
                        if l > 0 && (0..=l).any(|i| !s[l - 1][h.face(l, i, c)]) {
                            r.push("subset-closure", at(l, c), "a face leaves W");
                        }
                        if l < dim && (0..=l).any(|i| !s[l + 1][h.degen(l, i, c)]) {
                            r.push("subset-closure", at(l, c), "a degeneracy leaves W");
                        }
                    }
                }
                if x == y {
                    for l in 0..=dim {
                        if !s[l][self.cat.id_cells[x][l]] {
                            r.push("identity", format!("object {x}"), format!("identity missing from W at level {l}"));
                        }
                    }
                }
                // union of components: membership is decided by the vertices
                let mut uf = UnionFind::new(h.size(0));
                if dim >= 1 {
                    for e in 0..h.size(1) {
                        uf.union(h.face(1, 0, e), h.face(1, 1, e));
                    }
                }
                for v in 0..h.size(0) {
                    if s[0][v] != s[0][uf.find(v)] {
                        r.push("wideness", format!("hom({x},{y}) vertex {v}"), "W splits a connected component");
                    }
                }
                for l in 1..=dim {
                    for c in 0..h.size(l) {
                        if s[0][first_vertex(h, l, c)] && !s[l][c] {
                            r.push("wideness", at(l, c), "cell of a component of W is missing from W");
                        }
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for l in 0..=dim {
                        for a in 0..self.cat.hom(y, z).size(l) {
                            if !self.sub[y * n + z][l][a] {
                                continue;
                            }
                            for b in 0..self.cat.hom(x, y).size(l) {
                                if self.sub[x * n + y][l][b] && !self.sub[x * n + z][l][self.cat.compose(x, y, z, l, a, b)] {
                                    r.push(
                                        "composition-closure",
                                        format!("objects ({x},{y},{z}) level {l}"),
                                        format!("cells ({a}, {b}) compose outside W"),
                                    );
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

/// Vertex 0 of an `l`-cell.
pub(crate) fn first_vertex(h: &SimplicialSet, l: usize, c: usize) -> usize {
    let mut c = c;
    for k in (1..=l).rev() {
        c = h.face(k, k, c);
    }
    c
}

/// A simplicial functor given by its object map and one simplicial map per
/// ordered pair of source objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialFunctor {
    pub objects: Vec<usize>,
    pub homs: Vec<SimplicialMap>,
}

impl SimplicialFunctor {
    pub fn on_hom(&self, source_objects: usize, x: usize, y: usize) -> &SimplicialMap {
        &self.homs[x * source_objects + y]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SimplicialFunctor) -> SimplicialFunctor {
        let n = self.objects.len();
        let m = other.objects.len();
        SimplicialFunctor {
            objects: self.objects.iter().map(|&o| other.objects[o]).collect(),
            homs: (0..n * n)
                .map(|p| {
                    let (x, y) = (p / n, p % n);
                    self.homs[p].then(&other.homs[self.objects[x] * m + self.objects[y]])
                })
                .collect(),
        }
    }

    pub fn validate(&self, source: &SimplicialCategory, target: &SimplicialCategory) -> ValidationReport {
        let mut r = ValidationReport::new();
        let n = source.objects();
        let m = target.objects();
        if self.objects.len() != n || self.homs.len() != n * n || self.objects.iter().any(|&o| o >= m) {
            r.push("shape", "functor", "object map or hom maps have the wrong shape");
            return r;
        }
        let dim = source.dim().min(target.dim());
        for x in 0..n {
            for y in 0..n {
                let map = &self.homs[x * n + y];
                let (fx, fy) = (self.objects[x], self.objects[y]);
                let sub = map.validate(source.hom(x, y), target.hom(fx, fy));
                if !sub.is_ok() {
                    r.absorb(&format!("hom({x},{y})"), sub);
                    return r;
                }
            }
        }
        for x in 0..n {
            let fx = self.objects[x];
            if self.homs[x * n + x].apply(0, source.identity(x)) != target.identity(fx) {
                r.push("identity", format!("object {x}"), "identity not preserved");
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (fx, fy, fz) = (self.objects[x], self.objects[y], self.objects[z]);
                    for l in 0..=dim {
                        for a in 0..source.hom(y, z).size(l) {
                            for b in 0..source.hom(x, y).size(l) {
                                let c = source.compose(x, y, z, l, a, b);
                                let lhs = self.homs[x * n + z].apply(l, c);
                                let rhs = target.compose(
                                    fx,
                                    fy,
                                    fz,
                                    l,
                                    self.homs[y * n + z].apply(l, a),
                                    self.homs[x * n + y].apply(l, b),
                                );
                                if lhs != rhs {
                                    r.push(
                                        "composition",
                                        format!("objects ({x},{y},{z}) level {l}"),
                                        format!("cells ({a}, {b})"),
                                    );
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::standard_simplex;

    #[test]
    fn bg_z2_levels() {
        let c = SimplicialCategory::bg(&FiniteCategory::cyclic(2), 2).unwrap();
        assert_eq!(c.hom(0, 0).sizes(), &[1, 2, 4]);
        assert!(c.validate().is_ok());
        let c0 = c.level_category(0).unwrap();
        assert_eq!(c0.morphisms(), 1);
        let c1 = c.level_category(1).unwrap();
        assert_eq!(c1.morphisms(), 2);
        assert_eq!(c1.compose(1, 1), Some(0));
    }

    #[test]
    fn nonabelian_bg_is_rejected() {
        // S3 as permutations of {0,1,2}, element 0 the identity
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        let s3 = FiniteCategory::group(6, |g, h| {
            let (a, b) = (perms[g], perms[h]);
            idx([a[b[0]], a[b[1]], a[b[2]]])
        })
        .unwrap();
        assert!(SimplicialCategory::bg(&s3, 2).is_err());
    }

    #[test]
    fn frak_c_small() {
        let c1 = frak_c(1, 2);
        assert_eq!(c1.hom(0, 1).sizes(), &[1, 1, 1]);
        let c2 = frak_c(2, 2);
        assert_eq!(c2.hom(0, 2).nondegenerate_counts(), vec![2, 1, 0]);
        let c3 = frak_c(3, 3);
        assert_eq!(c3.hom(0, 3).nondegenerate_counts(), vec![4, 5, 2, 0]);
        for n in 0..=3 {
            assert!(frak_c(n, 2).validate().is_ok(), "C[Δ^{n}]");
        }
    }

    #[test]
    fn frak_c_homs_are_cubes() {
        // a chain of masks is a tuple of chains in Δ¹, one per middle element
        let dim = 3;
        let interval = crate::sset::standard_simplex_labeled(1, dim);
        for g in 1..=4 {
            let chains = poset_nerve_labeled(&FinitePoset::cube(g), dim);
            let target = power(&interval.set, g - 1);
            let levels = (0..=dim)
                .map(|l| {
                    chains.labels[l]
                        .iter()
                        .map(|chain| {
                            (0..g - 1).fold(0, |acc, t| {
                                let bits: Vec<usize> = chain.iter().map(|&m| m >> t & 1).collect();
                                acc * interval.set.size(l) + interval.cell(l, &bits).unwrap()
                            })
                        })
                        .collect()
                })
                .collect();
            let f = SimplicialMap::new(levels);
            assert_eq!(&chains.set, frak_c(g, dim).hom(0, g));
            assert!(f.validate(&chains.set, &target).is_ok());
            assert!(f.is_isomorphism(&target), "P_(0,{g})");
        }
    }

    #[test]
    fn interval_powers() {
        let b1 = interval_power_cat(1, &standard_simplex(1, 2));
        assert_eq!(b1.hom(0, 1), &standard_simplex(1, 2));
        let b2 = interval_power_cat(2, &standard_simplex(1, 2));
        assert_eq!(b2.hom(0, 2).size(1), 9);
        for i in 0..=2 {
            assert_eq!(b2.hom(i, i).sizes(), &[1, 1, 1]);
        }
        assert!(b2.validate().is_ok());
        assert!(frak_b(2, 2).validate().is_ok());
    }

    #[test]
    fn discrete_levels_are_the_category() {
        let p = FiniteCategory::poset(&FinitePoset::chain(2));
        let c = SimplicialCategory::discrete(&p, 2);
        assert!(c.validate().is_ok());
        for l in 0..=2 {
            let cl = c.level_category(l).unwrap();
            assert_eq!(crate::category::nerve_cat(&cl, 3), crate::category::nerve_cat(&p, 3));
        }
    }

    #[test]
    fn relative_markings() {
        let bg = SimplicialCategory::bg(&FiniteCategory::cyclic(2), 2).unwrap();
        assert!(RelativeSimplicialCategory::whole(bg.clone()).validate().is_ok());
        let ids = RelativeSimplicialCategory::identities(bg);
        let r = ids.validate();
        assert!(r.kinds().contains(&"wideness"), "{r}");
        let d = SimplicialCategory::discrete(&FiniteCategory::poset(&FinitePoset::chain(2)), 2);
        assert!(RelativeSimplicialCategory::identities(d.clone()).validate().is_ok());
        assert!(RelativeSimplicialCategory::homotopy_isos(d).validate().is_ok());
    }
}
