//! Simplicial categories: one-object examples, discrete categories, the
//! cosimplicial objects C[Δⁿ] and B[Δⁿ], and the comparison functor.

use nervekit::category::{comparison_functor, mask_of, nerve_cat, CubeFunctor, FiniteCategory, SimplicialCategory};
use nervekit::examples::example;

fn main() -> nervekit::Result<()> {
    let z2 = FiniteCategory::cyclic(2);
    println!("N(Z/2): {:?}", nerve_cat(&z2, 4).sizes());

    let bg = SimplicialCategory::bg(&z2, 3)?;
    println!("bg:z2 hom sizes: {:?}", bg.hom(0, 0).sizes());

    let rel = example("discrete:chain2", 2)?;
    println!("discrete:chain2: {} objects, valid: {}", rel.cat().objects(), rel.validate().is_ok());

    // f_2 on the vertices of C[Δ²](0, 2)
    let f2 = CubeFunctor::comparison(2);
    for s in [vec![0, 2], vec![0, 1, 2]] {
        println!("f_2 {:?} = {:?}", s, f2.value(0, 2, mask_of(0, 2, &s)));
    }

    let (c, b, f) = comparison_functor(2, 2);
    println!("f_2 : C[Δ²] → B[Δ²] valid: {}", f.validate(&c, &b).is_ok());
    Ok(())
}
