use super::{renaming_walk, require_palette, smallest_free, PathBuilder};
use crate::catalog::NamedGraph;
use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reconfig::{check_bound, RecoloringPath};
use crate::subgraph::is_family_free;

/// Sides of `g` after checking the procedure's preconditions.
pub(crate) fn sides(g: &Graph) -> Result<(Vec<usize>, Vec<usize>)> {
    if !g.is_connected() {
        return Err(Error::Precondition("graph is not connected".into()));
    }
    let (a, b) = g
        .bipartition()
        .ok_or_else(|| Error::Precondition("graph is not bipartite".into()))?;
    if let Err(v) = is_family_free(g, &[NamedGraph::CoDiamond]) {
        return Err(Error::OutsideClass {
            pattern: v.pattern.to_string(),
            embedding: v.embedding,
        });
    }
    if let Some(frozen) = matching_obstruction(g, &a, &b) {
        return Err(Error::FrozenObstruction { ell: a.len(), frozen });
    }
    Ok((a, b))
}

/// When `g` is `K_{m,m} - M` with `m >= 3`, the coloring that gives each
/// vertex and its unique non-neighbor across the bipartition the same color.
/// That coloring is frozen with `m` colors.
fn matching_obstruction(g: &Graph, a: &[usize], b: &[usize]) -> Option<Vec<Color>> {
    let m = a.len();
    if m < 3 || b.len() != m || !g.is_regular(m - 1) {
        return None;
    }
    let mut colors = vec![0; g.n()];
    for (k, &u) in a.iter().enumerate() {
        let missing: Vec<usize> = b.iter().copied().filter(|&w| !g.has_edge(u, w)).collect();
        let [w] = missing[..] else { return None };
        if colors[w] != 0 {
            return None;
        }
        colors[u] = k + 1;
        colors[w] = k + 1;
    }
    Some(colors)
}

/// Recolors `a` to a 2-coloring of a connected bipartite co-diamond-free
/// graph, recoloring each vertex at most twice.
///
/// If some color is missing from one side, the other side is flooded with it
/// and then the first side with the smallest different color. Otherwise one
/// vertex is moved to the color of a non-adjacent vertex across, which
/// empties its old color from its side. Graphs isomorphic to `K_{m,m} - M`
/// for `m >= 3` carry a frozen `m`-coloring and are rejected.
pub fn bipartite_codiamond_recolor(g: &Graph, a: &Coloring, ell: usize) -> Result<RecoloringPath> {
    require_palette(3, ell)?;
    let (side_a, side_b) = sides(g)?;
    let a = a.with_ell(ell);
    a.validate(g)?;
    let mut p = PathBuilder::new(g, &a);
    let missing_on = |p: &PathBuilder, side: &[usize]| {
        (1..=ell).find(|&c| side.iter().all(|&v| p.color(v) != c))
    };
    let probe = |p: &PathBuilder| {
        missing_on(p, &side_a)
            .map(|i| (i, &side_a, &side_b))
            .or_else(|| missing_on(p, &side_b).map(|i| (i, &side_b, &side_a)))
    };
    if probe(&p).is_none() {
        // u is alone in its side with its color; moving it to the color of
        // a non-neighbor across empties that color from the side.
        let mut unlock = None;
        'search: for (x, y) in [(&side_a, &side_b), (&side_b, &side_a)] {
            for &u in x {
                let c = p.color(u);
                if x.iter().any(|&v| v != u && p.color(v) == c) {
                    continue;
                }
                for &w in y {
                    let d = p.color(w);
                    if d != c && !g.has_edge(u, w) && p.allowed(u, d) {
                        unlock = Some((u, d));
                        break 'search;
                    }
                }
            }
        }
        let (u, d) = unlock.ok_or(Error::Contradiction("every color appears on both sides and no vertex can be unlocked".into()))?;
        p.set(u, d)?;
    }
    let (i, full, other) = probe(&p).ok_or(Error::Contradiction("no color is missing from either side".into()))?;
    for &v in other {
        p.set(v, i)?;
    }
    let j = smallest_free(ell, &[i]).expect("palette has three colors");
    for &v in full {
        p.set(v, j)?;
    }
    let path = p.finish();
    check_bound(g, &path, 2)?;
    Ok(path)
}

/// Joins two colorings through their 2-colorings with a renaming in between,
/// in at most `6n` steps.
pub fn bipartite_codiamond_connect(
    g: &Graph,
    a: &Coloring,
    b: &Coloring,
    ell: usize,
) -> Result<RecoloringPath> {
    let to_a = bipartite_codiamond_recolor(g, a, ell)?;
    let to_b = bipartite_codiamond_recolor(g, b, ell)?;
    let rename = renaming_walk(g, &to_a.end(), &to_b.end(), ell)?;
    let path = to_a.concat(&rename).concat(&to_b.reversed());
    debug_assert!(path.len() <= 6 * g.n());
    check_bound(g, &path, 6)?;
    Ok(path)
}
