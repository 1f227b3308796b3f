//! Reading and writing the edge-list and DIMACS formats.

use recolor::io::{parse_coloring, parse_graph, write_dimacs, write_edge_list};

fn main() {
    let dimacs = "c the paw\np edge 4 4\ne 1 2\ne 2 3\ne 1 3\ne 3 4\n";
    let parsed = parse_graph(dimacs, None).expect("valid DIMACS");
    print!("edge list:\n{}", write_edge_list(&parsed.graph));
    print!("dimacs:\n{}", write_dimacs(&parsed.graph));
    let c = parse_coloring("1 2 3 1", Some(4)).expect("colors");
    println!("coloring proper: {}", c.validate(&parsed.graph).is_ok());
}
