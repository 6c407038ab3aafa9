//! The binerve of a relative simplicial category, its diagonal and the
//! strict Segal condition.

use nervekit::examples::example;
use nervekit::nerves::{binerve_marked, classifying_space};
use nervekit::verify::{fiber_check, segal_check_on, segal_column_check};

fn main() -> nervekit::Result<()> {
    let rel = example("bg:z2", 3)?;
    let b = binerve_marked(&rel, 3, 3)?;
    for (p, col) in b.space().sizes().iter().enumerate() {
        println!("column {p}: {col:?}");
    }
    println!("B(bg:z2): {:?}", classifying_space(rel.cat(), 3)?.sizes());

    let segal = segal_check_on(b.space(), 3);
    println!("segal: {:?}", segal.verdict);
    println!("column formula: {:?}", segal_column_check(&rel, 3, 3)?.verdict);
    let fiber = fiber_check(&rel)?;
    println!("fibers: {}", fiber.details["fiber_sizes"]);
    Ok(())
}
