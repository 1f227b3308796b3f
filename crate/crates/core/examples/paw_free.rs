//! Paw-free graphs split into triangle-free and complete multipartite
//! components.

use recolor::catalog::NamedGraph;
use recolor::recognizers::paw_free_decompose;

fn main() {
    let g = NamedGraph::Cycle(5)
        .build()
        .disjoint_union(&NamedGraph::CompleteMultipartite(vec![1, 2, 3]).build());
    for comp in paw_free_decompose(&g).expect("paw-free") {
        println!("{:?}: {:?}", comp.vertices, comp.shape);
    }
}
