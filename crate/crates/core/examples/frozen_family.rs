//! Joins of Figure-4 copies: `7p`-chromatic graphs with a frozen
//! `8p`-coloring that avoid 2K2, 4K1, the co-diamond and the co-claw.

use recolor::catalog::NamedGraph;
use recolor::coloring::{chromatic_number, is_frozen};
use recolor::recognizers::frozen_family_generator;
use recolor::subgraph::is_family_free;

fn main() {
    let family = [NamedGraph::TwoK2, NamedGraph::FourK1, NamedGraph::CoDiamond, NamedGraph::CoClaw];
    for p in 1..=3 {
        let (g, c) = frozen_family_generator(p).expect("p >= 1");
        let chi = if p == 1 { chromatic_number(&g).to_string() } else { format!("{} (by joins)", 7 * p) };
        println!(
            "p={p}: n={} m={} chi={chi} frozen {}-coloring={} family-free={}",
            g.n(),
            g.m(),
            c.ell,
            is_frozen(&g, &c).unwrap(),
            is_family_free(&g, &family).is_ok()
        );
    }
}
