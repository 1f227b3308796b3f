use std::collections::BTreeMap;

use super::{require_palette, PathBuilder};
use crate::coloring::{partition_isomorphic, Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reconfig::{check_bound, RecoloringPath};

/// Walks between two colorings with the same color classes, recoloring each
/// vertex at most twice.
///
/// A class moves straight to its target color when that color is unused.
/// When every pending target is occupied the pending classes form cycles of
/// the renaming permutation; one class of a cycle is parked on a spare
/// color, which needs fewer classes than `ell`.
pub fn renaming_walk(g: &Graph, a: &Coloring, b: &Coloring, ell: usize) -> Result<RecoloringPath> {
    let a = a.with_ell(ell);
    let b = b.with_ell(ell);
    a.validate(g)?;
    b.validate(g)?;
    if !partition_isomorphic(&a, &b)? {
        return Err(Error::NotPartitionIsomorphic);
    }
    if a.colors == b.colors {
        return Ok(RecoloringPath::empty(a));
    }
    // target[c] = color that class c must end on.
    let mut target: BTreeMap<Color, Color> = BTreeMap::new();
    let mut members: BTreeMap<Color, Vec<usize>> = BTreeMap::new();
    for v in 0..g.n() {
        target.insert(a.colors[v], b.colors[v]);
        members.entry(a.colors[v]).or_default().push(v);
    }
    require_palette(members.len() + 1, ell)?;

    let mut builder = PathBuilder::new(g, &a);
    // Classes keyed by their original color; `at` is where each sits now.
    let mut at: BTreeMap<Color, Color> = target.keys().map(|&c| (c, c)).collect();
    let mut pending: Vec<Color> = target
        .iter()
        .filter(|(c, t)| c != t)
        .map(|(&c, _)| c)
        .collect();
    pending.sort_by_key(|c| target[c]);
    while !pending.is_empty() {
        let occupied = |at: &BTreeMap<Color, Color>, color: Color| at.values().any(|&x| x == color);
        let movable = pending.iter().position(|c| !occupied(&at, target[c]));
        match movable {
            Some(i) => {
                let class = pending.remove(i);
                for &v in &members[&class] {
                    builder.set(v, target[&class])?;
                }
                at.insert(class, target[&class]);
            }
            None => {
                let spare = (1..=ell)
                    .find(|&c| !occupied(&at, c))
                    .expect("fewer classes than colors");
                let class = pending[0];
                for &v in &members[&class] {
                    builder.set(v, spare)?;
                }
                at.insert(class, spare);
            }
        }
    }
    let path = builder.finish();
    check_bound(g, &path, 2)?;
    Ok(path)
}
