use super::{renaming_walk, require_palette, smallest_free, PathBuilder};
use crate::catalog::prism_labels::{V1, V2, V3, X1, X2, Y1, Y2, Z1, Z2};
use crate::catalog::NamedGraph;
use crate::coloring::{Color, Coloring};
use crate::error::Result;
use crate::graph::Graph;
use crate::reconfig::{check_bound, RecoloringPath};

/// Canonical 3-coloring of the 3-prism star: `{v1,z1,z2} = 1`,
/// `{v2,x1,x2} = 2`, `{v3,y1,y2} = 3`.
pub fn prism_star_target() -> Vec<Color> {
    let mut t = vec![0; 9];
    for (class, color) in [([V1, Z1, Z2], 1), ([V2, X1, X2], 2), ([V3, Y1, Y2], 3)] {
        for v in class {
            t[v] = color;
        }
    }
    t
}

/// Reaches a coloring with the target partition, recoloring each vertex at
/// most twice. Colors are named relative to the triangle `v1 v2 v3`.
fn partition_phase(g: &Graph, a: &Coloring) -> Result<RecoloringPath> {
    let mut p = PathBuilder::new(g, a);
    let (c1, c2, c3) = (p.color(V1), p.color(V2), p.color(V3));
    let c4 = smallest_free(p.ell(), &[c1, c2, c3]).expect("four colors");
    let schedule: Vec<(usize, Color)> = if p.color(X1) == c3 {
        vec![
            (X2, c3),
            (Z1, c2),
            (Z2, c2),
            (Y1, c4),
            (Y2, c4),
            (Z1, c1),
            (Z2, c1),
            (X1, c2),
            (X2, c2),
            (Y1, c3),
            (Y2, c3),
        ]
    } else if p.color(X2) == c3 {
        vec![(Y1, c3), (Z1, c1), (X1, c2), (Z2, c2), (Y2, c4), (Z2, c1), (X2, c2), (Y2, c3)]
    } else {
        vec![(Y1, c3), (Z1, c1), (X1, c2), (Y2, c3), (Z2, c1), (X2, c2)]
    };
    for (v, c) in schedule {
        p.set(v, c)?;
    }
    let path = p.finish();
    check_bound(g, &path, 2)?;
    Ok(path)
}

/// Recolors any coloring of the 3-prism star with at least four colors to
/// [`prism_star_target`], recoloring each vertex at most four times.
pub fn prism_star_recolor(a: &Coloring, ell: usize) -> Result<RecoloringPath> {
    require_palette(4, ell)?;
    let g = NamedGraph::Prism3Star.build();
    let a = a.with_ell(ell);
    a.validate(&g)?;
    let phase = partition_phase(&g, &a)?;
    let target = Coloring::new(prism_star_target(), ell);
    let rename = renaming_walk(&g, &phase.end(), &target, ell)?;
    let path = phase.concat(&rename);
    check_bound(&g, &path, 4)?;
    Ok(path)
}
