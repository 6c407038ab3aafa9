//! Exact homology over the integers and over F2.

use nervekit::category::{nerve_cat, FiniteCategory};
use nervekit::sset::simplex_boundary;
use nervekit::verify::{homology, pi0, Coefficients};

fn main() -> nervekit::Result<()> {
    let circle = simplex_boundary(2, 3).set;
    let h = homology(&circle, Coefficients::Integers, 2)?;
    println!("∂Δ²: {}", h.degrees.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", "));

    // RP^∞ through degree 4
    let rp = nerve_cat(&FiniteCategory::cyclic(2), 5);
    for c in [Coefficients::Integers, Coefficients::F2] {
        let h = homology(&rp, c, 4)?;
        println!("N(Z/2) over {c}: ranks {:?}, torsion {:?}", h.ranks(), h.degrees.iter().map(|g| g.torsion.len()).collect::<Vec<_>>());
    }

    let two_points = nervekit::sset::SimplicialSet::discrete(2, 2);
    println!("π₀ of two points: {:?}", pi0(&two_points));
    Ok(())
}
