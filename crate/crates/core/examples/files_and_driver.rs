//! JSON files and the command pipeline, without the binary.

use nervekit::driver::{run, Invocation, Verb};
use nervekit::examples::example;
use nervekit::io::{self, Document};

fn main() -> nervekit::Result<()> {
    let rel = example("discrete:poset01", 2)?;
    let doc = Document::Relative(rel);
    let text = io::to_string(&doc);
    println!("{} bytes: {}", text.len(), &text[..text.len().min(120)]);
    let back = io::from_str(&text)?;
    assert_eq!(io::to_string(&back), text);

    let path = std::env::temp_dir().join("nervekit-poset01.json");
    io::save(&path, &doc)?;
    let report = run(&Invocation::new(Verb::Validate).input(&path))?;
    print!("{}", report.to_text());

    let report = run(&Invocation::new(Verb::Compare).example("bg:z2").max_dim(3))?;
    print!("{}", report.to_text());
    Ok(())
}
