//! For each palette size, whether `R_ell(G)` is connected and how far apart
//! two colorings can be.

use recolor::catalog::NamedGraph;
use recolor::reconfig::{mixing_report, MixingOptions};

fn main() {
    for name in [NamedGraph::Cycle(5), NamedGraph::Cycle(6), NamedGraph::KllMinusMatching(3), NamedGraph::House] {
        let g = name.build();
        let report = mixing_report(&g, 5, MixingOptions::default());
        println!("{name}: chi={} max degree={}", report.chromatic_number, report.max_degree);
        for e in &report.entries {
            let show = |x: Option<String>| x.unwrap_or_else(|| "?".into());
            let colorings = show(e.colorings.map(|c| c.to_string()));
            let connected = show(e.connected.map(|c| c.to_string()));
            let diameter = show(e.diameter.map(|d| d.to_string()));
            let note = if e.inferred { " (inferred)" } else { "" };
            println!("  ell={} colorings={colorings} connected={connected} diameter={diameter}{note}", e.ell);
        }
    }
}
