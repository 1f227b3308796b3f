//! The two exceptional base graphs of the clique-number-3 argument: graph F
//! and the 3-prism star. Every 4-coloring reaches the canonical target.

use recolor::catalog::NamedGraph;
use recolor::coloring::enumerate_colorings;
use recolor::procedures::{graph_f_recolor, prism_star_recolor};
use recolor::reconfig::RecoloringPath;
use recolor::{Coloring, Result};

fn sweep(name: NamedGraph, recolor: fn(&Coloring, usize) -> Result<RecoloringPath>) {
    let g = name.build();
    let (mut runs, mut worst) = (0, 0);
    for a in enumerate_colorings(&g, 4) {
        let p = recolor(&a, 4).expect("schedule applies");
        worst = worst.max(p.counts().into_iter().max().unwrap_or(0));
        runs += 1;
    }
    println!("{name}: {runs} colorings, at most {worst} recolorings per vertex");
}

fn main() {
    sweep(NamedGraph::GraphF, graph_f_recolor);
    sweep(NamedGraph::Prism3Star, prism_star_recolor);
}
