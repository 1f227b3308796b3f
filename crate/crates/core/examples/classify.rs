//! Places a graph in one of the forbidden-subgraph classes and reports
//! whether every palette above the chromatic number is mixing, or which
//! exceptional structure blocks it.

use recolor::catalog::NamedGraph;
use recolor::recognizers::{classify_theorem, Class};

fn main() {
    let cases = [
        (NamedGraph::Cycle(7), "triangle-claw"),
        (NamedGraph::Cycle(8), "triangle-claw"),
        (NamedGraph::KllMinusMatching(3), "triangle-4k1"),
        (NamedGraph::Prism3, "2k2-diamond"),
        (NamedGraph::Banner, "p5-c5-house-co-banner"),
        (NamedGraph::Claw, "triangle-co-diamond"),
    ];
    for (name, class) in cases {
        let class: Class = class.parse().expect("known class");
        match classify_theorem(&name.build(), class) {
            Ok(v) => println!("{name} in {class}: {:?} {}", v.verdict, v.structure.unwrap_or_else(|| "-".into())),
            Err(e) => println!("{name} in {class}: {e}"),
        }
    }
}
