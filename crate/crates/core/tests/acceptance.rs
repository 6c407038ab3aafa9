//! The acceptance suite. Runs every criterion, prints one line each, and
//! exits non-zero if any failed.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::time::Instant;

use nervekit::category::{
    bar_map, comparison_functor, frak_c_map, mask_of, CubeFunctor, RelativeSimplicialCategory, SimplicialCategory,
};
use nervekit::examples::{example, LIBRARY};
use nervekit::io;
use nervekit::nerves::{binerve_marked, classifying_space, comparison_map, hc_nerve, theta_into_cls, verify_theta};
use nervekit::sset::{monotone_maps, poset_nerve, FinitePoset};
use nervekit::verify::uniqueness::naturality_failure;
use nervekit::verify::{
    consistency_check, discrete_collapse_check, fiber_check, horn_check, horn_check_homs, induced_chain_iso, segal_check_on,
    segal_column_check, uniqueness_search, Coefficients,
};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: nervekit::Error) -> String {
    e.to_string()
}

fn uniqueness() -> Outcome {
    let r = uniqueness_search(2);
    ensure(r.families.len() == 1, format!("{} families", r.families.len()))?;
    for (n, g) in r.families[0].iter().enumerate() {
        let f = g.to_simplicial(3).map_err(err)?;
        ensure(f == comparison_functor(n, 3).2, format!("g_{n} differs from f_{n}"))?;
    }
    ensure(r.eliminated.len() == 1, format!("{} eliminations", r.eliminated.len()))?;
    let e = &r.eliminated[0];
    ensure(e.degree == 2, format!("candidate eliminated at degree {}", e.degree))?;
    ensure(e.family[1].value(0, 1, 0) == [1], "the eliminated candidate is not the vertex-1 choice")?;
    Ok(format!("survivors {:?}, vertex-1 candidate dies at degree 2", r.survivors))
}

fn formula() -> Outcome {
    let f2 = CubeFunctor::comparison(2);
    ensure(f2.value(0, 2, mask_of(0, 2, &[0, 2])) == [0, 0], "{0,2} ↦ (0,0) fails")?;
    ensure(f2.value(0, 2, mask_of(0, 2, &[0, 1, 2])) == [1, 0], "{0,1,2} ↦ (1,0) fails")?;
    let dim = 2;
    let mut squares = 0;
    for n in 0..=4 {
        let (c, b, f) = comparison_functor(n, dim);
        let v = f.validate(&c, &b);
        ensure(v.is_ok(), format!("f_{n}: {v}"))?;
    }
    let mut vertex_squares = 0;
    for a in 0..=4 {
        for bb in 0..=4 {
            for map in monotone_maps(a, bb) {
                if let Some(w) = naturality_failure(&map, &CubeFunctor::comparison(a), &CubeFunctor::comparison(bb)) {
                    return Err(w);
                }
                vertex_squares += 1;
            }
        }
    }
    // whole homs, on the cofaces and codegeneracies
    let f: Vec<_> = (0..=4).map(|n| comparison_functor(n, dim).2).collect();
    let mut generators = Vec::new();
    for n in 1..=4 {
        for i in 0..=n {
            generators.push(((0..n).map(|k| if k < i { k } else { k + 1 }).collect::<Vec<_>>(), n));
        }
        for i in 0..n {
            generators.push(((0..=n).map(|k| if k <= i { k } else { k - 1 }).collect::<Vec<_>>(), n - 1));
        }
    }
    for (map, bb) in &generators {
        let a = map.len() - 1;
        let left = frak_c_map(map, *bb, dim).map_err(err)?.then(&f[*bb]);
        let right = f[a].then(&bar_map(map, *bb, dim).map_err(err)?);
        ensure(left == right, format!("naturality square for {map:?} does not commute"))?;
        squares += 1;
    }
    Ok(format!("f_0..f_4 valid, {vertex_squares} squares on vertices and {squares} on homs commute"))
}

fn columns() -> Outcome {
    let mut parts = Vec::new();
    for name in ["bg:z2", "discrete:chain2"] {
        let rel = example(name, 3).map_err(err)?;
        let r = segal_column_check(&rel, 3, 3).map_err(err)?;
        ensure(r.passed(), format!("{name}: {:?}", r.witnesses))?;
        let b = binerve_marked(&rel, 3, 3).map_err(err)?;
        let s = segal_check_on(b.space(), 3);
        ensure(s.passed(), format!("{name} segal: {:?}", s.witnesses))?;
        parts.push(format!("{name} {:?}", b.space().sizes()[3]));
    }
    Ok(format!("columns n ≤ 3, q ≤ 3, Segal n = 2, 3: {}", parts.join("; ")))
}

fn fibers() -> Outcome {
    for name in LIBRARY {
        let rel = example(name, 3).map_err(err)?;
        let r = fiber_check(&rel).map_err(err)?;
        ensure(r.passed(), format!("{name}: {:?}", r.witnesses))?;
    }
    Ok(format!("{} generators", LIBRARY.len()))
}

fn discrete_collapse() -> Outcome {
    let names = ["discrete:poset01", "discrete:chain2", "discrete:antichain2", "discrete:z2", "poset:3:0<1,0<2", "two-object-interval"];
    for name in names {
        let rel = example(name, 3).map_err(err)?;
        let r = discrete_collapse_check(rel.cat(), 3).map_err(err)?;
        ensure(r.passed(), format!("{name}: {:?}", r.witnesses))?;
    }
    Ok(format!("{} discrete categories at L = 3", names.len()))
}

fn corollary() -> Outcome {
    let rel = example("bg:z2", 4).map_err(err)?;
    let cm = comparison_map(rel.cat(), 4).map_err(err)?;
    let r = induced_chain_iso(&cm.map, &cm.source, &cm.target.set, Coefficients::F2, 2).map_err(err)?;
    ensure(r.commutes, "the chain map does not commute with the boundaries")?;
    let verdicts: Vec<bool> = r.degrees.iter().map(|d| d.verdict.passed()).collect();
    let source: Vec<usize> = r.degrees.iter().map(|d| d.source.rank).collect();
    let target: Vec<usize> = r.degrees.iter().map(|d| d.target.rank).collect();
    let summary = format!("iso verdicts {verdicts:?}, dimensions {source:?} → {target:?}");
    ensure(verdicts == [true, true, true], summary.clone())?;
    // one dimension per degree
    ensure(source == [1, 1, 1] && target == [1, 1, 1], format!("{summary}, expected [1, 1, 1] on both sides"))?;
    Ok(summary)
}

fn theta() -> Outcome {
    let mut parts = Vec::new();
    let cases = [
        ("bg:z2", RelativeSimplicialCategory::whole(SimplicialCategory::bg(&nervekit::examples::group("z2").map_err(err)?, 6).map_err(err)?)),
        ("discrete:poset01", example("discrete:poset01@identities", 6).map_err(err)?),
    ];
    for (name, rel) in &cases {
        let r = verify_theta(rel, 3, 3).map_err(err)?;
        ensure(r.passed(), format!("{name}: {:?}", r.witnesses))?;
        let c = consistency_check(rel.cat(), 3).map_err(err)?;
        ensure(c.passed(), format!("{name} consistency: {:?}", c.witnesses))?;
        parts.push(format!("{name} ({} diagonal cells)", c.details["diagonal_cells"]));
    }
    let r = theta_into_cls(&cases[1].1, 3, 3).map_err(err)?;
    ensure(r.passed(), format!("discrete:poset01 into Cls: {:?}", r.witnesses))?;
    Ok(format!("bidegree (3, 3): {}", parts.join(", ")))
}

fn counting() -> Outcome {
    let rel = example("bg:z2", 3).map_err(err)?;
    let hc = hc_nerve(rel.cat(), 3).map_err(err)?.set.sizes().to_vec();
    let b = classifying_space(rel.cat(), 3).map_err(err)?.sizes().to_vec();
    let hc_oracle: Vec<usize> = (0..=3).map(|n: usize| 1 << (n * n.saturating_sub(1) / 2)).collect();
    let b_oracle: Vec<usize> = (0..=3).map(|k: usize| 1 << (k * k)).collect();
    ensure(hc == [1, 1, 2, 8] && hc == hc_oracle, format!("N_hc sizes {hc:?}"))?;
    ensure(b == [1, 2, 16, 512] && b == b_oracle, format!("B sizes {b:?}"))?;
    Ok(format!("N_hc {hc:?}, B {b:?}"))
}

fn fibrancy() -> Outcome {
    let groups = ["bg:trivial", "bg:z2", "bg:z3", "bg:z2xz2", "bg:z4"];
    for name in groups {
        let rel = example(name, 3).map_err(err)?;
        let r = horn_check_homs(rel.cat(), 3).map_err(err)?;
        ensure(r.passed(), format!("{name}: {:?}", r.witnesses))?;
    }
    let interval = poset_nerve(&FinitePoset::chain(1), 2);
    let r = horn_check(&interval, 2, 0).map_err(err)?;
    ensure(!r.passed(), "N([1]) fills Λ²₀")?;
    let w = r.witnesses.first().ok_or("no witness")?;
    ensure(w.starts_with("Λ^2_0"), format!("unnamed witness {w}"))?;
    Ok(format!("{} groups fill all horns n ≤ 3; N([1]): {w}", groups.len()))
}

fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn json_files(dir: &Path) -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = std::fs::read_dir(dir)
        .expect("fixtures")
        .map(|e| e.expect("entry").path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    v.sort();
    v
}

fn soundness() -> Outcome {
    let clean = json_files(&fixtures_dir());
    for path in &clean {
        let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
        let doc = io::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        ensure(io::to_string(&doc) == text, format!("{} does not round-trip", path.display()))?;
    }
    let planted = json_files(&fixtures_dir().join("planted"));
    let mut kinds = Vec::new();
    for path in &planted {
        let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
        match io::from_str(&text) {
            Err(nervekit::Error::Invalid { report, .. }) => {
                ensure(!report.is_empty(), format!("{}: rejected without a witness", path.display()))?;
                kinds.push(format!("{} ({})", path.file_stem().unwrap().to_string_lossy(), report.kinds()[0]));
            }
            Err(e) => return Err(format!("{}: wrong error {e}", path.display())),
            Ok(_) => return Err(format!("{} was accepted", path.display())),
        }
    }
    ensure(planted.len() >= 4, "missing planted fixtures")?;
    Ok(format!("{} clean pass, rejected: {}", clean.len(), kinds.join(", ")))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("uniqueness", uniqueness),
        ("formula reproduction", formula),
        ("column formula", columns),
        ("fiber identification", fibers),
        ("discrete collapse", discrete_collapse),
        ("homology of the comparison map", corollary),
        ("theta well-formedness", theta),
        ("counting cross-oracle", counting),
        ("fibrancy precondition", fibrancy),
        ("validation soundness", soundness),
    ];
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let n = i + 1;
        if !only.is_empty() && !only.contains(&n) {
            continue;
        }
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {n:>2} PASS  {name}: {msg} [{secs:.1}s]"),
            Err(msg) => {
                failed += 1;
                println!("criterion {n:>2} FAIL  {name}: {msg} [{secs:.1}s]");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
