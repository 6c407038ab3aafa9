//! Exhaustive search for natural families C[Δⁿ] → B[Δⁿ].

use nervekit::verify::uniqueness_search;

fn main() {
    for n in 1..=2 {
        let r = uniqueness_search(n);
        println!("N = {n}: survivors per degree {:?}, families found: {}", r.survivors, r.families.len());
        for e in &r.eliminated {
            println!("  dies at degree {}: {}", e.degree, e.witness);
        }
        println!("  unique and equal to the comparison family: {}", r.unique_and_comparison);
    }
}
