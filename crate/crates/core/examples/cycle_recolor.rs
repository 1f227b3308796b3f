//! With four colors every cycle recolors to a fixed target while touching
//! each vertex at most twice.

use recolor::catalog::NamedGraph;
use recolor::procedures::{cycle_recolor, cycle_target};
use recolor::reconfig::verify_path;
use recolor::Coloring;

fn main() {
    let n = 9;
    let g = NamedGraph::Cycle(n).build();
    let start = Coloring::new(vec![1, 2, 3, 4, 1, 2, 3, 4, 2], 4);
    let path = cycle_recolor(n, &start, 4).expect("four colors suffice");
    let stats = verify_path(&g, &path).expect("valid path");
    println!("start  {:?}", start.colors);
    for (v, c) in &path.steps {
        println!("  recolor {v} -> {c}");
    }
    println!("end    {:?}", path.end().colors);
    println!("target {:?}", cycle_target(n));
    println!("{} steps, at most {} per vertex", stats.length, stats.max_count);
}
