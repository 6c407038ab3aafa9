//! The homotopy coherent nerve, counted against a closed form.

use nervekit::examples::example;
use nervekit::nerves::hc_nerve;

fn main() -> nervekit::Result<()> {
    let rel = example("bg:z2", 3)?;
    let n = hc_nerve(rel.cat(), 4)?;
    for (k, &size) in n.set.sizes().iter().enumerate() {
        let closed = 1u64 << (k * k.saturating_sub(1) / 2);
        println!("level {k}: {size} cells (2^(k(k-1)/2) = {closed})");
    }
    let s = n.cell(2, 1);
    println!("a 2-simplex: objects {:?}, components {:?}", s.objects(), s.components());

    let frak = example("frak-c:2", 2)?;
    println!("N_hc(C[Δ²]): {:?}", hc_nerve(frak.cat(), 2)?.set.sizes());
    Ok(())
}
