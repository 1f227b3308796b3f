//! Frozen colorings certify that the reconfiguration graph is disconnected:
//! every vertex already sees every other color, so no single recolor is
//! possible.

use recolor::catalog::{figure4_frozen_coloring, kll_frozen_coloring, NamedGraph};
use recolor::coloring::is_frozen;
use recolor::reconfig::{reconfig_connected, DEFAULT_BUDGET};
use recolor::{Coloring, Graph};

fn report(name: &str, g: &Graph, c: &Coloring) {
    let frozen = is_frozen(g, c).expect("proper coloring");
    let conn = reconfig_connected(g, c.ell, DEFAULT_BUDGET).expect("within budget");
    println!("{name:>8}  ell={}  frozen={frozen}  R connected={}", c.ell, conn.connected);
}

fn main() {
    report("C6", &NamedGraph::Cycle(6).build(), &Coloring::new(vec![1, 2, 3, 1, 2, 3], 3));
    for l in 3..=5 {
        report(&format!("K{l},{l}-M"), &NamedGraph::KllMinusMatching(l).build(), &kll_frozen_coloring(l));
    }
    report("Figure4", &NamedGraph::Figure4.build(), &figure4_frozen_coloring());
}
