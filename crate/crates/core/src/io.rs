//! JSON files.
//!
//! Files are written compactly with fields in a fixed order and a trailing
//! newline, so saving a loaded canonical file reproduces it byte for byte.
//! Loading checks shapes (an error here exits with 2) and then every
//! invariant (a violation exits with 1, naming the witness).

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bisset::{BisimplicialSet, MarkedBisimplicialSet};
use crate::category::{RelativeSimplicialCategory, SimplicialCategory};
use crate::sset::{MarkedSimplicialSet, SimplicialSet};
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SSetFile {
    pub dim: usize,
    pub cells: Vec<usize>,
    pub face: Vec<Vec<Vec<usize>>>,
    pub degen: Vec<Vec<Vec<usize>>>,
    /// Marked edges, for a marked simplicial set.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub marked: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryFile {
    pub objects: Vec<String>,
    pub dim: usize,
    /// `"i,j"` to the hom simplicial set.
    pub hom: BTreeMap<String, SSetFile>,
    /// `"i,j,k"` to one table per level, indexed `a * |hom(i,j)_l| + b` for
    /// `a ∈ hom(j,k)_l`, `b ∈ hom(i,j)_l`.
    pub comp: BTreeMap<String, Vec<Vec<u32>>>,
    /// Object name to the vertex of its identity.
    pub id: BTreeMap<String, usize>,
    /// `"i,j"` to the `(level, index)` cells of the subcategory.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sub: Option<BTreeMap<String, Vec<(usize, usize)>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BissetFile {
    pub dims: (usize, usize),
    pub cells: Vec<Vec<usize>>,
    pub hface: Vec<Vec<Vec<Vec<usize>>>>,
    pub hdegen: Vec<Vec<Vec<Vec<usize>>>>,
    pub vface: Vec<Vec<Vec<Vec<usize>>>>,
    pub vdegen: Vec<Vec<Vec<Vec<usize>>>>,
    /// `[1, q, index]` for each marked `(1, q)`-cell.
    #[serde(default)]
    pub marked: Vec<(usize, usize, usize)>,
}

/// Anything the tools read or write.
#[derive(Clone, Debug)]
pub enum Document {
    SSet(SimplicialSet),
    Marked(MarkedSimplicialSet),
    Category(SimplicialCategory),
    Relative(RelativeSimplicialCategory),
    Bisset(MarkedBisimplicialSet),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::SSet(_) => "simplicial set",
            Document::Marked(_) => "marked simplicial set",
            Document::Category(_) => "simplicial category",
            Document::Relative(_) => "relative simplicial category",
            Document::Bisset(_) => "marked bisimplicial set",
        }
    }

    /// Level or bidegree sizes.
    pub fn sizes(&self) -> Value {
        match self {
            Document::SSet(x) => serde_json::json!(x.sizes()),
            Document::Marked(m) => serde_json::json!(m.space().sizes()),
            Document::Category(c) => category_sizes(c),
            Document::Relative(r) => category_sizes(r.cat()),
            Document::Bisset(b) => serde_json::json!(b.space().sizes()),
        }
    }

    pub fn validate(&self) -> crate::ValidationReport {
        match self {
            Document::SSet(x) => x.validate(),
            Document::Marked(m) => m.validate(),
            Document::Category(c) => c.validate(),
            Document::Relative(r) => r.validate(),
            Document::Bisset(b) => b.validate(),
        }
    }
}

fn category_sizes(c: &SimplicialCategory) -> Value {
    let n = c.objects();
    let mut m = serde_json::Map::new();
    for x in 0..n {
        for y in 0..n {
            m.insert(format!("{x},{y}"), serde_json::json!(c.hom(x, y).sizes()));
        }
    }
    Value::Object(m)
}

pub fn sset_file(x: &SimplicialSet) -> SSetFile {
    SSetFile {
        dim: x.dim(),
        cells: x.sizes().to_vec(),
        face: x.face_tables().clone(),
        degen: x.degen_tables().clone(),
        marked: None,
    }
}

fn sset_from(f: SSetFile) -> Result<SimplicialSet> {
    SimplicialSet::from_parts(f.dim, f.cells, f.face, f.degen)
}

pub fn marked_file(m: &MarkedSimplicialSet) -> SSetFile {
    SSetFile {
        marked: Some(m.marked_edges().collect()),
        ..sset_file(m.space())
    }
}

fn parse_key<const K: usize>(key: &str, n: usize) -> Result<[usize; K]> {
    let parts: Vec<usize> = key
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Malformed(format!("bad key `{key}`")))?;
    if parts.len() != K || parts.iter().any(|&p| p >= n) {
        return Err(Error::Malformed(format!("bad key `{key}` for {n} objects")));
    }
    let mut out = [0; K];
    out.copy_from_slice(&parts);
    Ok(out)
}

pub fn category_file(c: &SimplicialCategory, sub: Option<&RelativeSimplicialCategory>) -> CategoryFile {
    let n = c.objects();
    let mut hom = BTreeMap::new();
    let mut comp = BTreeMap::new();
    for x in 0..n {
        for y in 0..n {
            hom.insert(format!("{x},{y}"), sset_file(c.hom(x, y)));
            for z in 0..n {
                comp.insert(format!("{x},{y},{z}"), c.comp_tables()[(x * n + y) * n + z].clone());
            }
        }
    }
    let id = (0..n).map(|x| (c.names()[x].clone(), c.identity(x))).collect();
    let sub = sub.map(|r| {
        let mut m = BTreeMap::new();
        for x in 0..n {
            for y in 0..n {
                let h = c.hom(x, y);
                let cells = (0..=h.dim())
                    .flat_map(|l| (0..h.size(l)).filter(move |&k| r.in_sub(x, y, l, k)).map(move |k| (l, k)))
                    .collect();
                m.insert(format!("{x},{y}"), cells);
            }
        }
        m
    });
    CategoryFile {
        objects: c.names().to_vec(),
        dim: c.dim(),
        hom,
        comp,
        id,
        sub,
    }
}

fn category_from(f: CategoryFile) -> Result<Document> {
    let n = f.objects.len();
    let mut homs: Vec<Option<SimplicialSet>> = vec![None; n * n];
    for (key, h) in f.hom {
        let [x, y] = parse_key::<2>(&key, n)?;
        homs[x * n + y] = Some(sset_from(h).map_err(|e| Error::Malformed(format!("hom {key}: {e}")))?);
    }
    let homs: Vec<SimplicialSet> = homs
        .into_iter()
        .enumerate()
        .map(|(p, h)| h.ok_or_else(|| Error::Malformed(format!("hom {},{} is missing", p / n, p % n))))
        .collect::<Result<_>>()?;
    let mut comp: Vec<Option<Vec<Vec<u32>>>> = vec![None; n * n * n];
    for (key, t) in f.comp {
        let [x, y, z] = parse_key::<3>(&key, n)?;
        comp[(x * n + y) * n + z] = Some(t);
    }
    let comp: Vec<Vec<Vec<u32>>> = comp
        .into_iter()
        .enumerate()
        .map(|(p, t)| t.ok_or_else(|| Error::Malformed(format!("composition {},{},{} is missing", p / (n * n), p / n % n, p % n))))
        .collect::<Result<_>>()?;
    let ids: Vec<usize> = f
        .objects
        .iter()
        .map(|o| f.id.get(o).copied().ok_or_else(|| Error::Malformed(format!("no identity for object `{o}`"))))
        .collect::<Result<_>>()?;
    if f.id.len() != n {
        return Err(Error::Malformed("identities name unknown objects".into()));
    }
    let cat = SimplicialCategory::from_parts(f.objects, f.dim, homs, comp, ids)?;
    let Some(sub) = f.sub else {
        return Ok(Document::Category(cat));
    };
    let mut flags: Vec<Vec<Vec<bool>>> = (0..n * n)
        .map(|p| {
            let h = cat.hom(p / n, p % n);
            (0..=h.dim()).map(|l| vec![false; h.size(l)]).collect()
        })
        .collect();
    for (key, cells) in sub {
        let [x, y] = parse_key::<2>(&key, n)?;
        for (l, c) in cells {
            let slot = flags[x * n + y]
                .get_mut(l)
                .and_then(|lv| lv.get_mut(c))
                .ok_or_else(|| Error::Malformed(format!("sub {key}: cell ({l}, {c}) does not exist")))?;
            *slot = true;
        }
    }
    Ok(Document::Relative(RelativeSimplicialCategory::from_flags(cat, flags)?))
}

pub fn bisset_file(m: &MarkedBisimplicialSet) -> BissetFile {
    let x = m.space();
    let (cols, rows) = x.dims();
    let table = |count: &dyn Fn(usize, usize) -> usize, f: &dyn Fn(usize, usize, usize, usize) -> usize| {
        (0..=cols)
            .map(|p| {
                (0..=rows)
                    .map(|q| (0..count(p, q)).map(|i| (0..x.size(p, q)).map(|c| f(p, q, i, c)).collect()).collect())
                    .collect()
            })
            .collect()
    };
    let marked = m
        .marking()
        .iter()
        .enumerate()
        .flat_map(|(q, row)| row.iter().enumerate().filter(|(_, &b)| b).map(move |(c, _)| (1, q, c)))
        .collect();
    BissetFile {
        dims: (cols, rows),
        cells: x.sizes().clone(),
        hface: table(&|p, _| if p == 0 { 0 } else { p + 1 }, &|p, q, i, c| x.hface(p, q, i, c)),
        hdegen: table(&|p, _| if p == cols { 0 } else { p + 1 }, &|p, q, i, c| x.hdegen(p, q, i, c)),
        vface: table(&|_, q| if q == 0 { 0 } else { q + 1 }, &|p, q, i, c| x.vface(p, q, i, c)),
        vdegen: table(&|_, q| if q == rows { 0 } else { q + 1 }, &|p, q, i, c| x.vdegen(p, q, i, c)),
        marked,
    }
}

fn bisset_from(f: BissetFile) -> Result<MarkedBisimplicialSet> {
    let space = BisimplicialSet::from_parts(f.dims, f.cells, f.hface, f.hdegen, f.vface, f.vdegen)?;
    let (cols, rows) = space.dims();
    let mut marking: Vec<Vec<bool>> = if cols == 0 {
        Vec::new()
    } else {
        (0..=rows).map(|q| vec![false; space.size(1, q)]).collect()
    };
    for (p, q, c) in f.marked {
        let slot = (p == 1)
            .then(|| marking.get_mut(q).and_then(|r| r.get_mut(c)))
            .flatten()
            .ok_or_else(|| Error::Malformed(format!("marked cell [{p}, {q}, {c}] is not a (1, q)-cell")))?;
        *slot = true;
    }
    MarkedBisimplicialSet::new(space, marking)
}

/// Canonical text of a document.
pub fn to_string(doc: &Document) -> String {
    let v = match doc {
        Document::SSet(x) => serde_json::to_string(&sset_file(x)),
        Document::Marked(m) => serde_json::to_string(&marked_file(m)),
        Document::Category(c) => serde_json::to_string(&category_file(c, None)),
        Document::Relative(r) => serde_json::to_string(&category_file(r.cat(), Some(r))),
        Document::Bisset(b) => serde_json::to_string(&bisset_file(b)),
    };
    let mut s = v.expect("documents serialize");
    s.push('\n');
    s
}

/// Parses a document, checking shapes but not invariants.
pub fn parse(text: &str) -> Result<Document> {
    let v: Value = serde_json::from_str(text)?;
    let obj = v.as_object().ok_or_else(|| Error::Malformed("expected a JSON object".into()))?;
    if obj.contains_key("objects") {
        category_from(serde_json::from_value(v)?)
    } else if obj.contains_key("dims") {
        Ok(Document::Bisset(bisset_from(serde_json::from_value(v)?)?))
    } else if obj.contains_key("dim") {
        let f: SSetFile = serde_json::from_value(v)?;
        let marked = f.marked.clone();
        let x = sset_from(SSetFile { marked: None, ..f })?;
        match marked {
            None => Ok(Document::SSet(x)),
            Some(edges) => {
                let count = if x.dim() >= 1 { x.size(1) } else { 0 };
                let mut flags = vec![false; count];
                for e in edges {
                    *flags.get_mut(e).ok_or_else(|| Error::Malformed(format!("marked edge {e} does not exist")))? = true;
                }
                Ok(Document::Marked(MarkedSimplicialSet::from_flags(x, flags)?))
            }
        }
    } else {
        Err(Error::Malformed("unrecognized document: expected `dim`, `objects` or `dims`".into()))
    }
}

/// Parses and validates.
pub fn from_str(text: &str) -> Result<Document> {
    let doc = parse(text)?;
    let report = doc.validate();
    if !report.is_ok() {
        return Err(Error::Invalid { kind: doc.kind(), report });
    }
    Ok(doc)
}

pub fn load(path: impl AsRef<Path>) -> Result<Document> {
    from_str(&std::fs::read_to_string(path)?)
}

pub fn save(path: impl AsRef<Path>, doc: &Document) -> Result<()> {
    std::fs::write(path, to_string(doc))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::FiniteCategory;
    use crate::sset::standard_simplex;

    fn round_trip(doc: Document) {
        let s = to_string(&doc);
        let back = from_str(&s).unwrap();
        assert_eq!(to_string(&back), s);
    }

    #[test]
    fn round_trips() {
        round_trip(Document::SSet(standard_simplex(2, 3)));
        round_trip(Document::SSet(SimplicialSet::empty(2)));
        round_trip(Document::Marked(MarkedSimplicialSet::maximal(standard_simplex(1, 2))));
        let sc = SimplicialCategory::bg(&FiniteCategory::cyclic(2), 2).unwrap();
        round_trip(Document::Category(sc.clone()));
        round_trip(Document::Relative(RelativeSimplicialCategory::whole(sc.clone())));
        let b = crate::nerves::binerve(&sc, 2, 1).unwrap();
        round_trip(Document::Bisset(b.marked));
    }

    #[test]
    fn broken_identity_names_the_cell() {
        let x = standard_simplex(1, 1);
        let mut f = sset_file(&x);
        // d_0 s_0 must be the identity on vertices
        f.face[1][0][1] = 1;
        f.face[1][0][0] = 1;
        let text = serde_json::to_string(&f).unwrap();
        match from_str(&text) {
            Err(Error::Invalid { report, .. }) => assert!(!report.violations.is_empty()),
            other => panic!("expected a validation failure, got {other:?}"),
        }
    }

    #[test]
    fn parse_errors_exit_two() {
        let e = from_str("{\"dim\": 0").unwrap_err();
        assert_eq!(e.exit_code(), 2);
        let e = from_str("{\"dim\": 0, \"cells\": [1], \"face\": [[]], \"degen\": [[1]]}").unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }
}
