//! Connected bipartite co-diamond-free graphs: three colors connect any two
//! colorings by flooding each side onto a spare color.

use recolor::catalog::NamedGraph;
use recolor::procedures::bipartite_codiamond_connect;
use recolor::reconfig::verify_path;
use recolor::Coloring;

fn main() {
    // K_{2,3} contains no induced co-diamond.
    let g = NamedGraph::CompleteMultipartite(vec![2, 3]).build();
    let a = Coloring::new(vec![1, 2, 3, 3, 3], 3);
    let b = Coloring::new(vec![3, 3, 1, 2, 1], 3);
    let p = bipartite_codiamond_connect(&g, &a, &b, 3).expect("class member");
    let stats = verify_path(&g, &p).expect("valid");
    println!("{:?} -> {:?} in {} steps, at most {} per vertex", a.colors, b.colors, stats.length, stats.max_count);

    // K_{3,3} minus a perfect matching is bipartite but freezes at three colors.
    let h = NamedGraph::KllMinusMatching(3).build();
    let frozen = recolor::catalog::kll_frozen_coloring(3);
    println!("K3,3-M: {}", bipartite_codiamond_connect(&h, &frozen, &frozen, 3).unwrap_err());
}
