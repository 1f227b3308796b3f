//! A triangle whose other vertices each see exactly one triangle vertex,
//! as in the 3-prism. This base case recolors with at most four moves per
//! vertex.

use recolor::catalog::NamedGraph;
use recolor::coloring::enumerate_colorings;
use recolor::procedures::{clique3_recolor, Clique3Layout};

fn main() {
    let g = NamedGraph::Prism3.build();
    let layout = Clique3Layout::find(&g).expect("prism has the layout");
    println!("triangle {:?}, attachments {:?}", layout.triangle, layout.sets);
    let mut worst = 0;
    let mut runs = 0;
    for ell in 4..=5 {
        for a in enumerate_colorings(&g, ell) {
            let p = clique3_recolor(&g, &layout, &a, ell).expect("four colors");
            worst = worst.max(p.counts().into_iter().max().unwrap_or(0));
            runs += 1;
        }
    }
    println!("{runs} starts reach {:?}, at most {worst} moves per vertex", layout.target(g.n()));
}
