//! Named example inputs.
//!
//! ```text
//! bg:<group>               one object, hom = nerve of the group      (marking: whole)
//! discrete:<category>      constant homs                             (marking: identities)
//! poset:<n>:<a<b,...>      discrete category on a poset on 0..n      (marking: identities)
//! two-object-interval      the free-living morphism 0 → 1            (marking: identities)
//! interval:<k>             two objects, hom(0, 1) = Δᵏ               (marking: identities)
//! frak-c:<n>, frak-b:<n>   C[Δⁿ] and B[Δⁿ] = [n]_{Δⁿ}                (marking: identities)
//!
//! <group>    z<n> | z<a>xz<b>x… | s3 | trivial
//! <category> poset01 | chain<n> | antichain<n> | <group>
//! ```
//!
//! A suffix `@whole`, `@identities` or `@isos` overrides the marking;
//! `@isos` marks the components of vertices invertible up to homotopy.

use std::fmt;
use std::str::FromStr;

use crate::category::{frak_b, frak_c, interval_power_cat, FiniteCategory, RelativeSimplicialCategory, SimplicialCategory};
use crate::sset::{standard_simplex, FinitePoset};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Marking {
    Identities,
    Whole,
    Isos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleSpec {
    /// The generator with its parameters, without the marking suffix.
    pub name: String,
    /// `None` takes the generator's default.
    pub marking: Option<Marking>,
    /// Truncation of every hom.
    pub dim: usize,
}

impl ExampleSpec {
    pub fn new(spec: &str, dim: usize) -> Result<Self> {
        let (name, marking) = match spec.split_once('@') {
            None => (spec, None),
            Some((n, m)) => (
                n,
                Some(match m {
                    "whole" => Marking::Whole,
                    "identities" | "ids" => Marking::Identities,
                    "isos" => Marking::Isos,
                    _ => return Err(Error::UnknownExample(spec.into())),
                }),
            ),
        };
        Ok(ExampleSpec {
            name: name.to_string(),
            marking,
            dim,
        })
    }
}

impl fmt::Display for ExampleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        match self.marking {
            None => Ok(()),
            Some(Marking::Whole) => write!(f, "@whole"),
            Some(Marking::Identities) => write!(f, "@identities"),
            Some(Marking::Isos) => write!(f, "@isos"),
        }
    }
}

fn cyclic_factors(s: &str) -> Option<Vec<usize>> {
    s.split('x')
        .map(|part| part.strip_prefix('z').and_then(|n| usize::from_str(n).ok()).filter(|&n| n >= 1))
        .collect()
}

/// A finite group by name.
pub fn group(name: &str) -> Result<FiniteCategory> {
    if name == "trivial" {
        return Ok(FiniteCategory::trivial());
    }
    if name == "s3" {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).expect("closed");
        return FiniteCategory::group(6, |a, b| {
            let (g, h) = (perms[a], perms[b]);
            index([g[h[0]], g[h[1]], g[h[2]]])
        });
    }
    let factors = cyclic_factors(name).ok_or_else(|| Error::UnknownExample(name.into()))?;
    let order: usize = factors.iter().product();
    let digits = move |mut a: usize| -> Vec<usize> {
        factors
            .iter()
            .rev()
            .map(|&n| {
                let d = a % n;
                a /= n;
                d
            })
            .collect::<Vec<_>>()
    };
    let factors2 = cyclic_factors(name).expect("parsed above");
    FiniteCategory::group(order, move |a, b| {
        let (x, y) = (digits(a), digits(b));
        // digits are least significant first
        factors2
            .iter()
            .rev()
            .enumerate()
            .rev()
            .fold(0, |acc, (k, &n)| acc * n + (x[k] + y[k]) % n)
    })
}

fn finite_category(name: &str) -> Result<FiniteCategory> {
    if name == "poset01" {
        return Ok(FiniteCategory::poset(&FinitePoset::chain(1)));
    }
    if let Some(n) = name.strip_prefix("chain").and_then(|n| n.parse().ok()) {
        return Ok(FiniteCategory::poset(&FinitePoset::chain(n)));
    }
    if let Some(n) = name.strip_prefix("antichain").and_then(|n| n.parse().ok()) {
        return Ok(FiniteCategory::poset(&FinitePoset::antichain(n)));
    }
    group(name)
}

/// `poset:<n>:<a<b,...>` on `0..n`.
fn poset(body: &str) -> Result<FinitePoset> {
    let bad = || Error::UnknownExample(format!("poset:{body}"));
    let (n, rel) = body.split_once(':').unwrap_or((body, ""));
    let n: usize = n.parse().map_err(|_| bad())?;
    let mut pairs = Vec::new();
    for r in rel.split(',').filter(|r| !r.is_empty()) {
        let (a, b) = r.split_once('<').ok_or_else(bad)?;
        pairs.push((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?));
    }
    FinitePoset::from_relations(n, &pairs)
}

/// Builds a named example at truncation `spec.dim`.
pub fn build_example(spec: &ExampleSpec) -> Result<RelativeSimplicialCategory> {
    let name = spec.name.as_str();
    let d = spec.dim;
    let unknown = || Error::UnknownExample(name.into());
    let (cat, default) = if let Some(g) = name.strip_prefix("bg:") {
        (SimplicialCategory::bg(&group(g)?, d)?, Marking::Whole)
    } else if let Some(c) = name.strip_prefix("discrete:") {
        (SimplicialCategory::discrete(&finite_category(c)?, d), Marking::Identities)
    } else if let Some(p) = name.strip_prefix("poset:") {
        (SimplicialCategory::discrete(&FiniteCategory::poset(&poset(p)?), d), Marking::Identities)
    } else if name == "two-object-interval" {
        (SimplicialCategory::discrete(&FiniteCategory::poset(&FinitePoset::chain(1)), d), Marking::Identities)
    } else if let Some(k) = name.strip_prefix("interval:") {
        let k: usize = k.parse().map_err(|_| unknown())?;
        (interval_power_cat(1, &standard_simplex(k, d)), Marking::Identities)
    } else if let Some(n) = name.strip_prefix("frak-c:") {
        (frak_c(n.parse().map_err(|_| unknown())?, d), Marking::Identities)
    } else if let Some(n) = name.strip_prefix("frak-b:") {
        let n: usize = n.parse().map_err(|_| unknown())?;
        (frak_b(n, d), Marking::Identities)
    } else {
        return Err(unknown());
    };
    let rel = match spec.marking.unwrap_or(default) {
        Marking::Whole => RelativeSimplicialCategory::whole(cat),
        Marking::Identities => RelativeSimplicialCategory::identities(cat),
        Marking::Isos => RelativeSimplicialCategory::homotopy_isos(cat),
    };
    rel.validate().into_result("example", rel)
}

/// Parses and builds in one step.
pub fn example(spec: &str, dim: usize) -> Result<RelativeSimplicialCategory> {
    build_example(&ExampleSpec::new(spec, dim)?)
}

/// The generator library used by property tests and the acceptance suite.
pub const LIBRARY: &[&str] = &[
    "bg:trivial",
    "bg:z2",
    "bg:z3",
    "bg:z2xz2",
    "discrete:poset01",
    "discrete:chain2",
    "discrete:antichain2",
    "discrete:z2",
    "discrete:s3@isos",
    "poset:3:0<1,0<2",
    "two-object-interval",
    "interval:1",
    "interval:2",
    "frak-c:2",
    "frak-b:1",
];

/// Generators whose homs are Kan complexes.
pub const FIBRANT: &[&str] = &["bg:trivial", "bg:z2", "bg:z3", "bg:z2xz2", "discrete:poset01", "discrete:chain2", "discrete:z2"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bg_z2_sizes() {
        let r = example("bg:z2", 2).unwrap();
        assert_eq!(r.cat().objects(), 1);
        assert_eq!(r.cat().hom(0, 0).sizes(), &[1, 2, 4]);
    }

    #[test]
    fn products_and_s3() {
        let g = group("z2xz3").unwrap();
        assert_eq!(g.morphisms(), 6);
        assert!(SimplicialCategory::bg(&g, 1).is_ok());
        assert!(SimplicialCategory::bg(&group("s3").unwrap(), 1).is_err());
        assert!(group("z2xz2").unwrap().validate().is_ok());
    }

    #[test]
    fn library_is_valid() {
        for name in LIBRARY {
            let r = example(name, 2).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(r.validate().is_ok(), "{name}");
        }
    }

    #[test]
    fn unknown_names() {
        for bad in ["bg:q8", "nothing", "discrete:chainx", "bg:z2@most"] {
            let e = example(bad, 2).unwrap_err();
            assert_eq!(e.exit_code(), 2, "{bad}");
        }
    }

    #[test]
    fn discrete_poset01() {
        let r = example("discrete:poset01", 3).unwrap();
        assert!(r.cat().is_discrete());
        assert_eq!(r.cat().objects(), 2);
    }
}
