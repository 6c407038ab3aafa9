//! Truncated simplicial sets: simplices, products, poset nerves and maps.

use nervekit::sset::{enumerate_maps, poset_nerve, product, standard_simplex, FinitePoset};

fn main() -> nervekit::Result<()> {
    let d2 = standard_simplex(2, 3);
    println!("Δ² up to level 3: {:?}", d2.sizes());
    println!("nondegenerate: {:?}", d2.nondegenerate_counts());

    let square = product(&standard_simplex(1, 2), &standard_simplex(1, 2));
    println!("Δ¹ × Δ¹: {:?}, nondegenerate {:?}", square.sizes(), square.nondegenerate_counts());

    // the nerve of 0 < 1 < 2 < 3 is Δ³
    let chain = poset_nerve(&FinitePoset::chain(3), 3);
    assert_eq!(chain.sizes(), standard_simplex(3, 3).sizes());
    println!("N(0<1<2<3): {:?}", chain.sizes());

    let v = square.validate();
    println!("Δ¹ × Δ¹ valid: {}", v.is_ok());

    let maps = enumerate_maps(&standard_simplex(1, 2), &standard_simplex(2, 2))?;
    println!("maps Δ¹ → Δ²: {}", maps.len());
    Ok(())
}
