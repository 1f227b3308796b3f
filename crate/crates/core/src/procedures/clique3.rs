//! Graphs built around one triangle `v1 v2 v3` where every other vertex sees
//! exactly one triangle vertex, the sets `B_i` seen only by `v_i` are
//! independent, and `B_1` is a single vertex `b1`.

use super::{renaming_walk, require_palette, smallest_free, PathBuilder};
use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reconfig::{check_bound, RecoloringPath};

/// The triangle and the three attachment sets, `sets[i]` seen by `triangle[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clique3Layout {
    pub triangle: [usize; 3],
    pub sets: [Vec<usize>; 3],
}

impl Clique3Layout {
    /// Checks the structure with `triangle[0]` playing `v1`.
    pub fn new(g: &Graph, triangle: [usize; 3]) -> Option<Self> {
        if !g.is_clique(&triangle) || triangle[0] == triangle[1] || triangle[1] == triangle[2] || triangle[0] == triangle[2] {
            return None;
        }
        let mut sets: [Vec<usize>; 3] = Default::default();
        for x in (0..g.n()).filter(|x| !triangle.contains(x)) {
            let seen: Vec<usize> = (0..3).filter(|&i| g.has_edge(x, triangle[i])).collect();
            match seen[..] {
                [i] => sets[i].push(x),
                _ => return None,
            }
        }
        if sets[0].len() != 1 || !sets.iter().all(|s| g.is_independent(s)) {
            return None;
        }
        Some(Clique3Layout { triangle, sets })
    }

    /// First layout found over every triangle and every choice of `v1`.
    pub fn find(g: &Graph) -> Option<Self> {
        let n = g.n();
        for a in 0..n {
            for &b in g.neighbors(a).iter().filter(|&&b| b > a) {
                for &c in g.neighbors(b).iter().filter(|&&c| c > b && g.has_edge(a, c)) {
                    for t in [[a, b, c], [b, c, a], [c, a, b]] {
                        if let Some(layout) = Clique3Layout::new(g, t) {
                            return Some(layout);
                        }
                    }
                }
            }
        }
        None
    }

    fn b1(&self) -> usize {
        self.sets[0][0]
    }

    /// `{v1} ∪ B3 = 1`, `{v2, b1} = 2`, `{v3} ∪ B2 = 3`.
    pub fn target(&self, n: usize) -> Vec<Color> {
        let [v1, v2, v3] = self.triangle;
        let mut t = vec![0; n];
        t[v1] = 1;
        t[v2] = 2;
        t[v3] = 3;
        t[self.b1()] = 2;
        self.sets[1].iter().for_each(|&x| t[x] = 3);
        self.sets[2].iter().for_each(|&x| t[x] = 1);
        t
    }
}

/// Reaches the target partition recoloring each vertex at most twice.
/// Colors are named relative to the current colors of the triangle.
fn partition_phase(g: &Graph, layout: &Clique3Layout, a: &Coloring) -> Result<RecoloringPath> {
    let mut p = PathBuilder::new(g, a);
    let [v1, v2, v3] = layout.triangle;
    let (c1, c2, c3) = (p.color(v1), p.color(v2), p.color(v3));
    let c4 = smallest_free(p.ell(), &[c1, c2, c3]).expect("four colors");
    let (b1, b2, b3) = (layout.b1(), &layout.sets[1], &layout.sets[2]);
    let mut moves: Vec<(&[usize], Color)> = Vec::new();
    let r = p.color(b1);
    let single = [b1];
    if r == c3 {
        moves.extend([(&b3[..], c2), (&b2[..], c4), (&b3[..], c1), (&single[..], c2), (&b2[..], c3)]);
    } else {
        moves.extend([(&b2[..], c3), (&b3[..], c1), (&single[..], c2)]);
    }
    for (set, c) in moves {
        for &x in set {
            p.set(x, c)?;
        }
    }
    let path = p.finish();
    check_bound(g, &path, 2)?;
    Ok(path)
}

/// Recolors any coloring with at least four colors to the layout target,
/// recoloring each vertex at most four times.
pub fn clique3_recolor(g: &Graph, layout: &Clique3Layout, a: &Coloring, ell: usize) -> Result<RecoloringPath> {
    require_palette(4, ell)?;
    if Clique3Layout::new(g, layout.triangle).as_ref() != Some(layout) {
        return Err(Error::CertificateMismatch("triangle does not give the clique layout".into()));
    }
    let a = a.with_ell(ell);
    a.validate(g)?;
    let phase = partition_phase(g, layout, &a)?;
    let target = Coloring::new(layout.target(g.n()), ell);
    let rename = renaming_walk(g, &phase.end(), &target, ell)?;
    let path = phase.concat(&rename);
    check_bound(g, &path, 4)?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::enumerate_colorings;

    fn prism() -> Graph {
        Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap()
    }

    #[test]
    fn prism_has_a_layout() {
        let g = prism();
        let layout = Clique3Layout::find(&g).unwrap();
        assert_eq!(layout.sets.iter().map(Vec::len).sum::<usize>(), 3);
        let t = layout.target(6);
        assert!(Coloring::new(t, 3).validate(&g).is_ok());
    }

    #[test]
    fn prism_reaches_target_from_every_coloring() {
        let g = prism();
        let layout = Clique3Layout::find(&g).unwrap();
        for ell in 4..=5 {
            for a in enumerate_colorings(&g, ell) {
                let p = clique3_recolor(&g, &layout, &a, ell).unwrap();
                assert_eq!(p.end().colors, layout.target(6));
            }
        }
    }

    #[test]
    fn larger_sets_with_cross_edges() {
        // B2 = {4, 5}, B3 = {6, 7}, b1 = 3, with edges across the sets.
        let g = Graph::new(
            8,
            &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 4), (3, 6), (4, 6), (5, 7), (3, 7)],
        )
        .unwrap();
        let layout = Clique3Layout::new(&g, [0, 1, 2]).unwrap();
        for a in enumerate_colorings(&g, 4) {
            let p = clique3_recolor(&g, &layout, &a, 4).unwrap();
            assert_eq!(p.end().colors, layout.target(8));
        }
    }

    #[test]
    fn rejects_vertex_seeing_two_triangle_vertices() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 3)]).unwrap();
        assert!(Clique3Layout::find(&g).is_none());
    }

    #[test]
    fn three_colors_are_rejected() {
        let g = prism();
        let layout = Clique3Layout::find(&g).unwrap();
        let a = Coloring::new(layout.target(6), 3);
        assert!(clique3_recolor(&g, &layout, &a, 3).is_err());
    }
}
