//! The map θ from the marked binerve to the classification diagram.

use nervekit::examples::example;
use nervekit::nerves::{cls_diagram, hc_nerve, theta_into_cls, verify_theta};

fn main() -> nervekit::Result<()> {
    let rel = example("discrete:poset01", 4)?;
    let r = verify_theta(&rel, 2, 2)?;
    println!("θ on discrete:poset01 up to (2, 2): {:?}", r.verdict);
    println!("into Cls: {:?}", theta_into_cls(&rel, 2, 2)?.verdict);

    let bg = example("bg:z2", 3)?;
    let nerve = hc_nerve(bg.cat(), 3)?;
    let cls = cls_diagram(&nerve.marked(&bg), 1, 2)?;
    println!("Cls(N_hc(bg:z2)) sizes: {:?}", cls.marked.space().sizes());
    println!("θ on bg:z2 up to (1, 2): {:?}", verify_theta(&bg, 1, 2)?.verdict);
    Ok(())
}
