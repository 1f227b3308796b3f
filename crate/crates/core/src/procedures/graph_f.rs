use super::{renaming_walk, require_palette, PathBuilder};
use crate::catalog::f_labels::{A, B, C, D, W, X, Y, Z};
use crate::catalog::NamedGraph;
use crate::coloring::{Color, Coloring};
use crate::error::Result;
use crate::graph::Graph;
use crate::reconfig::{check_bound, RecoloringPath};

/// Canonical 3-coloring of F with classes `{a,x,c} = 1`, `{b,y,d} = 2` and
/// `{w,z} = 3`, indexed by the catalog labeling.
pub fn graph_f_target() -> Vec<Color> {
    let mut t = vec![0; 8];
    for v in [A, X, C] {
        t[v] = 1;
    }
    for v in [B, Y, D] {
        t[v] = 2;
    }
    for v in [W, Z] {
        t[v] = 3;
    }
    t
}

/// Moves `a` to some 3-coloring with the partition `{a,x,c}, {b,y,d}, {w,z}`.
fn partition_phase(g: &Graph, a: &Coloring) -> Result<RecoloringPath> {
    let mut p = PathBuilder::new(g, a);
    if p.color(W) != p.color(Z) {
        if p.color(D) != p.color(W) {
            p.set(Z, p.color(W))?;
        } else if p.color(A) != p.color(Z) {
            p.set(W, p.color(Z))?;
        } else {
            // z, a share P and w, d share Q.
            let (pc, qc) = (p.color(A), p.color(D));
            let mut spare = (1..=p.ell()).filter(|&c| c != pc && c != qc);
            let r1 = spare.next().expect("four colors");
            let r2 = spare.next().expect("four colors");
            for (v, c) in [(B, qc), (C, pc), (X, r2), (Y, r2), (Z, r1), (W, r1), (Y, qc), (X, pc)] {
                p.set(v, c)?;
            }
            return Ok(p.finish());
        }
    }
    let (pc, qc) = (p.color(A), p.color(D));
    for (v, c) in [(X, pc), (Y, qc), (C, pc), (B, qc)] {
        p.set(v, c)?;
    }
    Ok(p.finish())
}

/// Recolors any coloring of F with at least four colors to [`graph_f_target`].
pub fn graph_f_recolor(a: &Coloring, ell: usize) -> Result<RecoloringPath> {
    require_palette(4, ell)?;
    let g = NamedGraph::GraphF.build();
    let a = a.with_ell(ell);
    a.validate(&g)?;
    let phase = partition_phase(&g, &a)?;
    let target = Coloring::new(graph_f_target(), ell);
    let rename = renaming_walk(&g, &phase.end(), &target, ell)?;
    let path = phase.concat(&rename);
    check_bound(&g, &path, 4)?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{enumerate_colorings, partition_isomorphic};
    use crate::error::Error;

    fn labeled(pairs: &[(usize, Color)], ell: usize) -> Coloring {
        let mut colors = vec![0; 8];
        for &(v, c) in pairs {
            colors[v] = c;
        }
        Coloring::new(colors, ell)
    }

    #[test]
    fn same_color_case_uses_four_steps() {
        let g = NamedGraph::GraphF.build();
        let a = labeled(&[(Z, 3), (Y, 1), (X, 2), (W, 3), (D, 2), (C, 3), (B, 4), (A, 1)], 4);
        a.validate(&g).unwrap();
        let p = partition_phase(&g, &a).unwrap();
        assert_eq!(p.steps, vec![(X, 1), (Y, 2), (C, 1), (B, 2)]);
    }

    #[test]
    fn crossed_case_uses_eight_steps() {
        let g = NamedGraph::GraphF.build();
        let a = labeled(&[(Z, 1), (A, 1), (W, 2), (D, 2), (X, 3), (Y, 3), (B, 4), (C, 5)], 5);
        a.validate(&g).unwrap();
        let p = partition_phase(&g, &a).unwrap();
        assert_eq!(
            p.steps,
            vec![(B, 2), (C, 1), (X, 4), (Y, 4), (Z, 3), (W, 3), (Y, 2), (X, 1)]
        );
        assert!(partition_isomorphic(&p.end(), &Coloring::new(graph_f_target(), 5)).unwrap());
    }

    #[test]
    fn every_four_and_five_coloring() {
        let g = NamedGraph::GraphF.build();
        for ell in [4, 5] {
            let target = Coloring::new(graph_f_target(), ell);
            for a in enumerate_colorings(&g, ell) {
                let phase = partition_phase(&g, &a).unwrap();
                assert!(partition_isomorphic(&phase.end(), &target).unwrap());
                let p = graph_f_recolor(&a, ell).unwrap();
                assert_eq!(p.end(), target);
            }
        }
    }

    #[test]
    fn needs_four_colors() {
        let a = Coloring::new(graph_f_target(), 3);
        assert_eq!(
            graph_f_recolor(&a, 3).unwrap_err(),
            Error::PaletteTooSmall { needed: 4, ell: 3 }
        );
    }
}
