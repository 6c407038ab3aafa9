//! The command pipeline behind the `nervekit` binary.
//!
//! Each verb loads or builds its input, runs one construction plus the
//! checks that go with it, and returns a [`RunReport`]. Reports are
//! deterministic: the same invocation on the same input gives the same
//! bytes, since timings are only included on request and live in their own
//! field outside the digest.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::category::{nerve_cat, RelativeSimplicialCategory};
use crate::examples::{build_example, ExampleSpec};
use crate::io::{self, Document};
use crate::nerves::{binerve_marked, classifying_space, cls_diagram, comparison_map, hc_nerve, theta_into_cls, verify_theta};
use crate::report::{CheckReport, Verdict};
use crate::sset::SimplicialSet;
use crate::verify::homology::boundary_squares_vanish;
use crate::verify::{
    column_check, consistency_check, discrete_collapse_check, fiber_check, homology, horn_check, horn_check_all, horn_check_homs,
    induced_chain_iso, pi0, segal_check_on, uniqueness_search, Coefficients,
};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verb {
    Validate,
    Nerve,
    Binerve,
    Hcnerve,
    Bspace,
    Diag,
    Compare,
    Cls,
    Theta,
    Homology,
    Pi0,
    Horncheck,
    UniqCheck,
    Example,
}

impl Verb {
    pub const ALL: [Verb; 14] = [
        Verb::Validate,
        Verb::Nerve,
        Verb::Binerve,
        Verb::Hcnerve,
        Verb::Bspace,
        Verb::Diag,
        Verb::Compare,
        Verb::Cls,
        Verb::Theta,
        Verb::Homology,
        Verb::Pi0,
        Verb::Horncheck,
        Verb::UniqCheck,
        Verb::Example,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Verb::Validate => "validate",
            Verb::Nerve => "nerve",
            Verb::Binerve => "binerve",
            Verb::Hcnerve => "hcnerve",
            Verb::Bspace => "bspace",
            Verb::Diag => "diag",
            Verb::Compare => "compare",
            Verb::Cls => "cls",
            Verb::Theta => "theta",
            Verb::Homology => "homology",
            Verb::Pi0 => "pi0",
            Verb::Horncheck => "horncheck",
            Verb::UniqCheck => "uniq-check",
            Verb::Example => "example",
        }
    }
}

impl fmt::Display for Verb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Verb {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Verb::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Malformed(format!("unknown command `{s}`")))
    }
}

/// Which simplicial set `homology`, `pi0` and `horncheck` look at when the
/// input is a category.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    /// `B(C)`, the diagonal of the binerve.
    Bspace,
    /// `N_hc(C)`.
    Hcnerve,
    /// `N(C_0)`.
    Nerve,
    /// The homs themselves (horncheck only).
    Homs,
}

impl FromStr for Space {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bspace" => Ok(Space::Bspace),
            "hcnerve" => Ok(Space::Hcnerve),
            "nerve" => Ok(Space::Nerve),
            "homs" => Ok(Space::Homs),
            _ => Err(Error::Malformed(format!("unknown space `{s}` (expected bspace, hcnerve, nerve or homs)"))),
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::Bspace => "bspace",
            Space::Hcnerve => "hcnerve",
            Space::Nerve => "nerve",
            Space::Homs => "homs",
        })
    }
}

/// A parsed command line.
#[derive(Clone, Debug)]
pub struct Invocation {
    pub verb: Verb,
    /// Named example, `--example` or the positional name of `example`.
    pub example: Option<String>,
    pub input: Option<PathBuf>,
    /// Where the report goes; stdout when absent.
    pub output: Option<PathBuf>,
    /// Where the constructed object goes, in the file format.
    pub save: Option<PathBuf>,
    pub max_dim: Option<usize>,
    pub rows: Option<usize>,
    pub cols: Option<usize>,
    pub coeff: Coefficients,
    pub space: Option<Space>,
    /// `(n, k)` for a single horn.
    pub horn: Option<(usize, usize)>,
    pub inner: bool,
    pub max_cosimplicial: usize,
    pub into_cls: bool,
    pub emit_cells: bool,
    pub jobs: usize,
    pub text: bool,
    pub timings: bool,
}

impl Invocation {
    pub fn new(verb: Verb) -> Self {
        Invocation {
            verb,
            example: None,
            input: None,
            output: None,
            save: None,
            max_dim: None,
            rows: None,
            cols: None,
            coeff: Coefficients::F2,
            space: None,
            horn: None,
            inner: false,
            max_cosimplicial: 2,
            into_cls: false,
            emit_cells: false,
            jobs: 1,
            text: false,
            timings: false,
        }
    }

    pub fn example(mut self, name: &str) -> Self {
        self.example = Some(name.to_string());
        self
    }

    pub fn input(mut self, path: impl Into<PathBuf>) -> Self {
        self.input = Some(path.into());
        self
    }

    pub fn max_dim(mut self, d: usize) -> Self {
        self.max_dim = Some(d);
        self
    }

    pub fn bidegree(mut self, cols: usize, rows: usize) -> Self {
        self.cols = Some(cols);
        self.rows = Some(rows);
        self
    }

    pub fn coeff(mut self, c: Coefficients) -> Self {
        self.coeff = c;
        self
    }

    /// The invocation in canonical flag order. Output paths are left out so
    /// that the report does not depend on where it is written.
    pub fn echo(&self) -> Vec<String> {
        let mut v = vec![self.verb.to_string()];
        let mut flag = |k: &str, val: Option<String>| {
            if let Some(val) = val {
                v.push(k.to_string());
                v.push(val);
            }
        };
        flag("--example", self.example.clone());
        flag("--in", self.input.as_ref().map(|p| p.display().to_string()));
        flag("--max-dim", self.max_dim.map(|d| d.to_string()));
        flag("--cols", self.cols.map(|d| d.to_string()));
        flag("--rows", self.rows.map(|d| d.to_string()));
        if matches!(self.verb, Verb::Compare | Verb::Homology) {
            flag("--coeff", Some(self.coeff.to_string()));
        }
        flag("--space", self.space.map(|s| s.to_string()));
        flag("--horn", self.horn.map(|(n, k)| format!("{n},{k}")));
        if self.verb == Verb::UniqCheck {
            flag("--max-cosimplicial", Some(self.max_cosimplicial.to_string()));
        }
        if self.inner {
            v.push("--inner".into());
        }
        if self.into_cls {
            v.push("--into-cls".into());
        }
        if self.emit_cells {
            v.push("--emit-cells".into());
        }
        v
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InputDigest {
    pub source: String,
    pub kind: String,
    pub sha256: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub verdict: Verdict,
    pub checks: Vec<CheckReport>,
    pub result: Value,
    /// Hash of everything above.
    pub digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u64>>,
}

impl RunReport {
    fn assemble(command: Vec<String>, inputs: Vec<InputDigest>, checks: Vec<CheckReport>, result: Value) -> Self {
        let verdict = Verdict::from_bool(checks.iter().all(CheckReport::passed));
        let body = json!({ "command": command, "inputs": inputs, "verdict": verdict, "checks": checks, "result": result });
        let digest = hex(&Sha256::digest(serde_json::to_vec(&body).expect("reports serialize")));
        RunReport {
            command,
            inputs,
            verdict,
            checks,
            result,
            digest,
            timings_ms: None,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.verdict.passed() {
            0
        } else {
            1
        }
    }

    pub fn check(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.check == name)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// Plain-text rendering: one line per check, then the result fields.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.command.join(" "));
        for i in &self.inputs {
            out += &format!("input   {} ({}) sha256 {}\n", i.source, i.kind, &i.sha256[..16]);
        }
        for c in &self.checks {
            let v = if c.passed() { "pass" } else { "FAIL" };
            out += &format!("{v:<7} {}\n", c.check);
            for w in &c.witnesses {
                out += &format!("          {w}\n");
            }
        }
        if let Value::Object(m) = &self.result {
            for (k, v) in m {
                if k == "cells" {
                    continue;
                }
                if k == "degrees" {
                    for d in v.as_array().into_iter().flatten() {
                        let group = |g: &Value| {
                            let mut parts: Vec<String> = Vec::new();
                            let rank = g["rank"].as_u64().unwrap_or(0);
                            if rank > 0 {
                                parts.push(format!("rank {rank}"));
                            }
                            parts.extend(g["torsion"].as_array().into_iter().flatten().map(|t| format!("Z/{}", t.as_str().unwrap_or("?"))));
                            if parts.is_empty() {
                                parts.push("0".into());
                            }
                            parts.join(" + ")
                        };
                        out += &format!(
                            "H{:<15} {}  →  {}  (induced rank {}, {})\n",
                            d["degree"].as_u64().unwrap_or(0),
                            group(&d["source"]),
                            group(&d["target"]),
                            d["induced_rank"],
                            d["verdict"].as_str().unwrap_or("")
                        );
                    }
                    continue;
                }
                out += &format!("{k:<16} {}\n", render(v));
            }
        }
        if let Some(t) = &self.timings_ms {
            let parts: Vec<String> = t.iter().map(|(k, v)| format!("{k} {v} ms")).collect();
            out += &format!("timings  {}\n", parts.join(", "));
        }
        out += &format!("verdict  {}\n", if self.verdict.passed() { "pass" } else { "FAIL" });
        out
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let parts: Vec<String> = a.iter().map(render).collect();
            format!("({})", parts.join(", "))
        }
        other => other.to_string(),
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Timer that records named stages.
struct Stages {
    start: Instant,
    done: BTreeMap<String, u64>,
}

impl Stages {
    fn new() -> Self {
        Stages {
            start: Instant::now(),
            done: BTreeMap::new(),
        }
    }

    fn mark(&mut self, name: &str) {
        let ms = self.start.elapsed().as_millis() as u64;
        let before: u64 = self.done.values().sum();
        self.done.insert(name.to_string(), ms - before.min(ms));
    }
}

struct Loaded {
    doc: Document,
    digest: InputDigest,
}

/// Hom truncation an example needs for `inv`.
fn needed_dim(inv: &Invocation) -> usize {
    let l = inv.max_dim.unwrap_or(3);
    match inv.verb {
        Verb::Cls | Verb::Theta => inv.cols.unwrap_or(l / 2) + inv.rows.unwrap_or(l - l / 2),
        Verb::Binerve => inv.rows.unwrap_or(l),
        _ => l,
    }
}

fn load(inv: &Invocation, validate: bool) -> Result<Loaded> {
    match (&inv.example, &inv.input) {
        (Some(_), Some(_)) => Err(Error::Malformed("give either --example or --in, not both".into())),
        (None, None) => Err(Error::Malformed(format!("`{}` needs --example or --in", inv.verb))),
        (Some(name), None) => {
            let rel = build_example(&ExampleSpec::new(name, needed_dim(inv))?)?;
            let doc = Document::Relative(rel);
            let text = io::to_string(&doc);
            Ok(Loaded {
                digest: InputDigest {
                    source: format!("example:{name}"),
                    kind: doc.kind().into(),
                    sha256: hex(&Sha256::digest(text.as_bytes())),
                },
                doc,
            })
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)?;
            let doc = if validate { io::from_str(&text)? } else { io::parse(&text)? };
            let doc = match (doc, inv.max_dim) {
                (Document::SSet(x), Some(d)) if d < x.dim() => Document::SSet(x.truncate(d)),
                (Document::Category(c), Some(d)) if d < c.dim() => Document::Category(c.truncate(d)),
                (Document::Relative(r), Some(d)) if d < r.cat().dim() => Document::Relative(r.truncate(d)),
                (doc, _) => doc,
            };
            Ok(Loaded {
                digest: InputDigest {
                    source: format!("file:{}", path.display()),
                    kind: doc.kind().into(),
                    sha256: hex(&Sha256::digest(text.as_bytes())),
                },
                doc,
            })
        }
    }
}

/// The relative category of a category document. A file without `sub`
/// gets the identities when that is wide, and the whole category otherwise.
fn relative(doc: &Document) -> Result<RelativeSimplicialCategory> {
    match doc {
        Document::Relative(r) => Ok(r.clone()),
        Document::Category(c) => {
            let ids = RelativeSimplicialCategory::identities(c.clone());
            Ok(if ids.validate().is_ok() { ids } else { RelativeSimplicialCategory::whole(c.clone()) })
        }
        other => Err(Error::Malformed(format!("expected a simplicial category, got a {}", other.kind()))),
    }
}

fn sizes_json(x: &SimplicialSet) -> Value {
    json!(x.sizes())
}

fn validation(name: &str, doc: &Document) -> CheckReport {
    CheckReport::from_validation(name, &doc.validate())
}

fn doc_value(doc: &Document) -> Value {
    serde_json::from_str(&io::to_string(doc)).expect("documents are JSON")
}

/// The simplicial set `homology`, `pi0` and `horncheck` act on.
fn target_space(inv: &Invocation, doc: &Document, l: usize) -> Result<(String, SimplicialSet)> {
    match doc {
        Document::SSet(x) => Ok(("input".into(), x.clone())),
        Document::Marked(m) => Ok(("input".into(), m.space().clone())),
        Document::Bisset(b) => Ok(("diagonal".into(), b.space().diagonal())),
        Document::Category(_) | Document::Relative(_) => {
            let rel = relative(doc)?;
            let sc = rel.cat();
            match inv.space.unwrap_or(Space::Bspace) {
                Space::Bspace => Ok(("bspace".into(), classifying_space(sc, l)?)),
                Space::Hcnerve => Ok(("hcnerve".into(), hc_nerve(sc, l)?.set)),
                Space::Nerve => Ok(("nerve".into(), nerve_cat(&sc.level_category(0)?, l))),
                Space::Homs => Err(Error::Malformed("--space homs only applies to horncheck".into())),
            }
        }
    }
}

/// Runs one invocation. Errors are usage or input errors (exit 2) and
/// invalid input files (exit 1); failed checks are reported, not raised.
pub fn run(inv: &Invocation) -> Result<RunReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(inv.jobs.max(1))
        .build()
        .map_err(|e| Error::Malformed(format!("thread pool: {e}")))?;
    pool.install(|| run_inner(inv))
}

fn run_inner(inv: &Invocation) -> Result<RunReport> {
    let mut stages = Stages::new();
    let mut checks: Vec<CheckReport> = Vec::new();
    let mut result = serde_json::Map::new();
    let mut inputs = Vec::new();
    let mut artifact: Option<Document> = None;
    let l = inv.max_dim.unwrap_or(3);

    match inv.verb {
        Verb::UniqCheck => {
            let r = uniqueness_search(inv.max_cosimplicial);
            stages.mark("search");
            let n = inv.max_cosimplicial;
            let mut c = CheckReport::new(r.label.clone()).bound("N", n);
            if r.families.len() != 1 {
                c.fail(format!("families found: {}", r.families.len()));
            }
            if !r.unique_and_comparison {
                c.fail("the surviving family is not the comparison family");
            }
            checks.push(c);
            result.insert("summary".into(), json!(format!("families found: {}", r.families.len())));
            result.insert("families_found".into(), json!(r.families.len()));
            result.insert("survivors".into(), json!(r.survivors));
            result.insert(
                "eliminated".into(),
                json!(r
                    .eliminated
                    .iter()
                    .map(|e| json!({ "degree": e.degree, "witness": e.witness }))
                    .collect::<Vec<_>>()),
            );
            if inv.emit_cells {
                result.insert("families".into(), json!(r.families));
            }
        }
        Verb::Validate => {
            let loaded = load(inv, false)?;
            stages.mark("load");
            checks.push(validation(&format!("validate {}", loaded.doc.kind()), &loaded.doc));
            result.insert("kind".into(), json!(loaded.doc.kind()));
            result.insert("sizes".into(), loaded.doc.sizes());
            inputs.push(loaded.digest);
        }
        Verb::Example => {
            if inv.example.is_none() {
                return Err(Error::Malformed("`example` needs a name".into()));
            }
            let loaded = load(inv, true)?;
            let rel = relative(&loaded.doc)?;
            checks.push(validation("validate relative simplicial category", &loaded.doc));
            result.insert("objects".into(), json!(rel.cat().names()));
            result.insert("hom_sizes".into(), loaded.doc.sizes());
            result.insert("discrete".into(), json!(rel.cat().is_discrete()));
            inputs.push(loaded.digest);
            artifact = Some(loaded.doc);
        }
        Verb::Horncheck => {
            let loaded = load(inv, true)?;
            stages.mark("load");
            let n_max = l.min(3);
            let homs = matches!(loaded.doc, Document::Category(_) | Document::Relative(_))
                && matches!(inv.space, None | Some(Space::Homs));
            let report = if homs {
                let rel = relative(&loaded.doc)?;
                match inv.horn {
                    Some((n, k)) => {
                        let sc = rel.cat();
                        let mut r = CheckReport::new(format!("horn Λ^{n}_{k} on homs"));
                        for a in 0..sc.objects() {
                            for b in 0..sc.objects() {
                                let mut h = horn_check(sc.hom(a, b), n, k)?;
                                h.check = format!("hom({}, {})", sc.names()[a], sc.names()[b]);
                                r.merge(&h);
                            }
                        }
                        r
                    }
                    None => horn_check_homs(rel.cat(), n_max)?,
                }
            } else {
                let (name, x) = target_space(inv, &loaded.doc, l)?;
                result.insert("space".into(), json!(name));
                match inv.horn {
                    Some((n, k)) => horn_check(&x, n, k)?,
                    None => horn_check_all(&x, n_max.min(x.dim()), inv.inner)?,
                }
            };
            stages.mark("horns");
            checks.push(report);
            inputs.push(loaded.digest);
        }
        Verb::Homology | Verb::Pi0 => {
            let loaded = load(inv, true)?;
            stages.mark("load");
            let (name, x) = target_space(inv, &loaded.doc, l)?;
            stages.mark("build");
            result.insert("space".into(), json!(name));
            result.insert("sizes".into(), sizes_json(&x));
            if inv.verb == Verb::Homology {
                let mut sq = CheckReport::new("boundary squared vanishes");
                if !boundary_squares_vanish(&x) {
                    sq.fail("∂∂ ≠ 0");
                }
                checks.push(sq);
                let bound = crate::verify::homology::validity_bound(&x);
                let h = homology(&x, inv.coeff, bound.max(0) as usize)?;
                stages.mark("homology");
                result.insert("groups".into(), json!(h.degrees.iter().map(|g| g.to_string()).collect::<Vec<_>>()));
                result.insert("homology".into(), serde_json::to_value(&h).expect("homology serializes"));
            } else {
                let classes = pi0(&x);
                result.insert("components".into(), json!(classes.len()));
                result.insert("classes".into(), json!(classes));
            }
            inputs.push(loaded.digest);
        }
        Verb::Nerve | Verb::Hcnerve | Verb::Bspace | Verb::Diag => {
            let loaded = load(inv, true)?;
            let rel = relative(&loaded.doc)?;
            let sc = rel.cat();
            stages.mark("load");
            let doc = match inv.verb {
                Verb::Nerve => Document::SSet(nerve_cat(&sc.level_category(0)?, l)),
                Verb::Hcnerve => Document::Marked(hc_nerve(sc, l)?.marked(&rel)),
                Verb::Bspace => Document::SSet(classifying_space(sc, l)?),
                _ => Document::Marked(binerve_marked(&rel, l, l)?.marked.diag_plus()),
            };
            stages.mark("build");
            checks.push(validation(&format!("validate {}", inv.verb), &doc));
            stages.mark("validate");
            result.insert("sizes".into(), doc.sizes());
            if let Document::Marked(m) = &doc {
                result.insert("marked_edges".into(), json!(m.marked_edges().count()));
            }
            inputs.push(loaded.digest);
            artifact = Some(doc);
        }
        Verb::Binerve => {
            let loaded = load(inv, true)?;
            let rel = relative(&loaded.doc)?;
            stages.mark("load");
            let (cols, rows) = (inv.cols.unwrap_or(l), inv.rows.unwrap_or(l.min(rel.cat().dim())));
            let b = binerve_marked(&rel, cols, rows)?;
            stages.mark("build");
            let doc = Document::Bisset(b.marked.clone());
            checks.push(validation("validate binerve", &doc));
            let mut cols_check = CheckReport::new("column formula").bound("P", cols).bound("Q", rows);
            for p in 0..=cols {
                cols_check.merge(&column_check(&rel, &b, p));
            }
            checks.push(cols_check);
            checks.push(segal_check_on(b.space(), cols));
            checks.push(fiber_check(&rel)?);
            stages.mark("checks");
            result.insert("sizes".into(), doc.sizes());
            inputs.push(loaded.digest);
            artifact = Some(doc);
        }
        Verb::Cls => {
            let loaded = load(inv, true)?;
            let rel = relative(&loaded.doc)?;
            stages.mark("load");
            let cols = inv.cols.unwrap_or(l / 2);
            let rows = inv.rows.unwrap_or(l - l / 2);
            let nerve = hc_nerve(rel.cat(), cols + rows)?;
            let cls = cls_diagram(&nerve.marked(&rel), cols, rows)?;
            stages.mark("build");
            let doc = Document::Bisset(cls.marked.clone());
            checks.push(validation("validate classification diagram", &doc));
            result.insert("sizes".into(), doc.sizes());
            inputs.push(loaded.digest);
            artifact = Some(doc);
        }
        Verb::Theta => {
            let loaded = load(inv, true)?;
            let rel = relative(&loaded.doc)?;
            stages.mark("load");
            let cols = inv.cols.unwrap_or(l / 2);
            let rows = inv.rows.unwrap_or(l - l / 2);
            let r = verify_theta(&rel, cols, rows)?;
            stages.mark("theta");
            result.insert("checked_cells".into(), r.details.get("cells").cloned().unwrap_or(Value::Null));
            checks.push(r);
            if inv.into_cls {
                checks.push(theta_into_cls(&rel, cols, rows)?);
                stages.mark("into_cls");
            }
            inputs.push(loaded.digest);
        }
        Verb::Compare => {
            let loaded = load(inv, true)?;
            let rel = relative(&loaded.doc)?;
            let sc = rel.cat();
            stages.mark("load");
            let cm = comparison_map(sc, l)?;
            stages.mark("comparison_map");
            checks.push(CheckReport::from_validation("comparison map", &cm.map.validate(&cm.source, &cm.target.set)));
            let max_deg = l.saturating_sub(1);
            let (iso, consistency) = rayon::join(
                || induced_chain_iso(&cm.map, &cm.source, &cm.target.set, inv.coeff, max_deg),
                || consistency_check(sc, l),
            );
            let iso = iso?;
            let mut iso_check = CheckReport::new("induced homology isomorphism").bound("max_deg", max_deg);
            iso_check.detail("coefficients", inv.coeff.to_string());
            if !iso.commutes {
                iso_check.fail("the chain map does not commute with the boundaries");
            }
            for d in &iso.degrees {
                if !d.verdict.passed() {
                    iso_check.fail(format!("degree {}: {} → {} is not an isomorphism", d.degree, d.source, d.target));
                }
            }
            checks.push(iso_check);
            checks.push(consistency?);
            if sc.is_discrete() {
                checks.push(discrete_collapse_check(sc, l)?);
            }
            stages.mark("checks");
            result.insert("source_sizes".into(), json!(cm.source.sizes()));
            result.insert("target_sizes".into(), json!(cm.target.set.sizes()));
            result.insert("degrees".into(), serde_json::to_value(&iso.degrees).expect("degrees serialize"));
            if inv.emit_cells {
                result.insert("map".into(), json!(cm.map.levels()));
            }
            inputs.push(loaded.digest);
        }
    }

    if let Some(doc) = &artifact {
        if inv.emit_cells {
            result.insert("cells".into(), doc_value(doc));
        }
        if let Some(path) = &inv.save {
            io::save(path, doc)?;
        }
    }
    let mut report = RunReport::assemble(inv.echo(), inputs, checks, Value::Object(result));
    if inv.timings {
        stages.mark("report");
        report.timings_ms = Some(stages.done);
    }
    Ok(report)
}

/// Runs and writes the report where the invocation asks; returns the exit
/// code.
pub fn run_and_write(inv: &Invocation) -> i32 {
    match run(inv) {
        Ok(report) => {
            let text = if inv.text { report.to_text() } else { report.to_json() };
            let written = match &inv.output {
                Some(path) => std::fs::write(path, &text).map_err(Error::from),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            match written {
                Ok(()) => report.exit_code(),
                Err(e) => {
                    eprintln!("error: {e}");
                    e.exit_code()
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verbs_round_trip() {
        for v in Verb::ALL {
            assert_eq!(v.name().parse::<Verb>().unwrap(), v);
        }
        assert_eq!("frobnicate".parse::<Verb>().unwrap_err().exit_code(), 2);
    }

    #[test]
    fn uniq_check_finds_one_family() {
        let mut inv = Invocation::new(Verb::UniqCheck);
        inv.max_cosimplicial = 2;
        let r = run(&inv).unwrap();
        assert_eq!(r.result["summary"], "families found: 1");
        assert_eq!(r.exit_code(), 0);
        assert_eq!(r.checks[0].check, "uniqueness at truncation 2");
    }

    #[test]
    fn compare_bg_z2() {
        let inv = Invocation::new(Verb::Compare).example("bg:z2").max_dim(3).coeff(Coefficients::F2);
        let r = run(&inv).unwrap();
        assert_eq!(r.exit_code(), 0, "{}", r.to_text());
        let degrees = r.result["degrees"].as_array().unwrap();
        assert_eq!(degrees.len(), 3);
    }

    #[test]
    fn reports_are_deterministic() {
        let inv = Invocation::new(Verb::Binerve).example("discrete:chain2").max_dim(2);
        let a = run(&inv).unwrap().to_json();
        let b = run(&inv).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn missing_input_is_usage_error() {
        let e = run(&Invocation::new(Verb::Nerve)).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        let e = run(&Invocation::new(Verb::Nerve).example("nope")).unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }
}
