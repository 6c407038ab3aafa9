//! The comparison map B(C) → N_hc(C) and the homology it induces.

use nervekit::examples::example;
use nervekit::nerves::comparison_map;
use nervekit::verify::{consistency_check, discrete_collapse_check, induced_chain_iso, Coefficients};

fn main() -> nervekit::Result<()> {
    let rel = example("bg:z2", 3)?;
    let cm = comparison_map(rel.cat(), 3)?;
    println!("B: {:?}  N_hc: {:?}", cm.source.sizes(), cm.target.set.sizes());
    for coeff in [Coefficients::F2, Coefficients::Integers] {
        let r = induced_chain_iso(&cm.map, &cm.source, &cm.target.set, coeff, 2)?;
        for d in &r.degrees {
            println!("{coeff}: {}  →  {}  {:?}", d.source, d.target, d.verdict);
        }
    }
    println!("consistency: {:?}", consistency_check(rel.cat(), 3)?.verdict);

    let discrete = example("discrete:chain2", 3)?;
    let r = discrete_collapse_check(discrete.cat(), 3)?;
    println!("discrete collapse: {:?} {}", r.verdict, r.details["sizes"]);
    Ok(())
}
