//! Horn filling: Kan complexes fill every horn, N([1]) does not.

use nervekit::examples::example;
use nervekit::sset::poset_nerve;
use nervekit::sset::FinitePoset;
use nervekit::verify::{horn_check, horn_check_all, horn_check_homs};

fn main() -> nervekit::Result<()> {
    let bg = example("bg:z2xz2", 4)?;
    println!("homs of bg:z2xz2, n ≤ 3: {:?}", horn_check_homs(bg.cat(), 3)?.verdict);

    let interval = poset_nerve(&FinitePoset::chain(1), 3);
    println!("N([1]), inner horns: {:?}", horn_check_all(&interval, 3, true)?.verdict);
    let outer = horn_check(&interval, 2, 0)?;
    println!("N([1]), Λ²₀: {:?}", outer.verdict);
    for w in &outer.witnesses {
        println!("  {w}");
    }
    Ok(())
}
