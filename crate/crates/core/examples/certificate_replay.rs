//! Reduction certificates: a tree of dominated-vertex removals, unions,
//! joins and base cases. Replaying it gives an explicit path between any
//! two colorings.

use recolor::catalog::NamedGraph;
use recolor::procedures::{connect_via_certificate, good_certificate, ReductionCertificate};
use recolor::reconfig::verify_path;
use recolor::Coloring;

fn print_tree(c: &ReductionCertificate, depth: usize) {
    println!("{}{:?} (n={}, chi={})", "  ".repeat(depth), c.step, c.n, c.chi);
    for child in &c.children {
        print_tree(&child.certificate, depth + 1);
    }
}

fn main() {
    let g = NamedGraph::House.build();
    let cert = good_certificate(&g).expect("house is reducible");
    print_tree(&cert, 0);
    let ell = cert.chi + 1;
    let a = Coloring::new(vec![1, 2, 3, 1, 4], ell);
    let b = Coloring::new(vec![4, 3, 1, 2, 3], ell);
    let p = connect_via_certificate(&g, &cert, &a, &b, ell).expect("good certificate");
    let stats = verify_path(&g, &p).expect("valid");
    println!("{:?} -> {:?}: {} steps (bound 2n^2 = {})", a.colors, b.colors, stats.length, 2 * g.n() * g.n());
}
