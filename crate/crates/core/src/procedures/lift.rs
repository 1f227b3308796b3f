//! Lifting paths from `G - v` back to `G`.

use super::PathBuilder;
use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reconfig::{verify_path, RecoloringPath};

/// Vertex of `G` corresponding to vertex `i` of `G - removed`.
fn lift_index(i: usize, removed: usize) -> usize {
    if i < removed {
        i
    } else {
        i + 1
    }
}

fn check_restriction(full: &[Color], removed: usize, part: &[Color], what: &str) -> Result<()> {
    let restricted: Vec<Color> = full
        .iter()
        .enumerate()
        .filter(|&(v, _)| v != removed)
        .map(|(_, &c)| c)
        .collect();
    if restricted != part {
        return Err(Error::Precondition(format!(
            "{what} does not restrict to the subpath's {what}"
        )));
    }
    Ok(())
}

/// Lifts `subpath` (on `G - v`) to a path from `a` to `b` when
/// `deg(v) <= ell - 2`.
///
/// Steps are replayed as they are. A step that would give a neighbor of `v`
/// the color of `v` is preceded by moving `v` to a color absent from `N[v]`
/// and different from the incoming color, preferring `b(v)`. Finally `v`
/// takes `b(v)`.
pub fn lift_low_degree(
    g: &Graph,
    v: usize,
    subpath: &RecoloringPath,
    a: &Coloring,
    b: &Coloring,
) -> Result<RecoloringPath> {
    let ell = subpath.start.ell;
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if g.degree(v) + 2 > ell {
        return Err(Error::Precondition(format!(
            "vertex {v} has degree {} but the palette has only {ell} colors",
            g.degree(v)
        )));
    }
    check_restriction(&a.colors, v, &subpath.start.colors, "start")?;
    check_restriction(&b.colors, v, &subpath.end().colors, "end")?;
    let mut builder = PathBuilder::new(g, &a.with_ell(ell));
    for &(x, c) in &subpath.steps {
        let u = lift_index(x, v);
        if g.has_edge(u, v) && builder.color(v) == c {
            let blocked: Vec<Color> = g
                .neighbors(v)
                .iter()
                .map(|&w| builder.color(w))
                .chain([c])
                .collect();
            let r = std::iter::once(b.colors[v])
                .chain(1..=ell)
                .find(|r| !blocked.contains(r))
                .expect("degree bound leaves a spare color");
            builder.set(v, r)?;
        }
        builder.set(u, c)?;
    }
    builder.set(v, b.colors[v])?;
    let path = builder.finish();
    verify_path(g, &path)?;
    Ok(path)
}

/// Lifts `subpath` (on `G - u`) when `u`, `v` are non-adjacent and
/// `N(u) ⊆ N(v)`: `u` first copies the color of `v`, then follows every
/// recoloring of `v`.
pub fn lift_dominated(
    g: &Graph,
    u: usize,
    v: usize,
    start: &Coloring,
    subpath: &RecoloringPath,
) -> Result<RecoloringPath> {
    if u == v || g.has_edge(u, v) || !g.neighborhood_subset(u, v) {
        return Err(Error::Precondition(format!(
            "{u} is not dominated by a non-neighbor {v}"
        )));
    }
    check_restriction(&start.colors, u, &subpath.start.colors, "start")?;
    let mut builder = PathBuilder::new(g, &start.with_ell(subpath.start.ell));
    builder.set(u, builder.color(v))?;
    for &(x, c) in &subpath.steps {
        let w = lift_index(x, u);
        builder.set(w, c)?;
        if w == v {
            builder.set(u, c)?;
        }
    }
    let path = builder.finish();
    verify_path(g, &path)?;
    Ok(path)
}
