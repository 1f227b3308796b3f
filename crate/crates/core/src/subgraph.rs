//! Induced-subgraph search, isomorphism and canonical forms at desk scale.

use crate::catalog::NamedGraph;
use crate::graph::{Embedding, Graph};

/// An induced copy of `pattern` in `host`, if one exists.
///
/// Exhaustive backtracking. Pattern vertices are placed in order of
/// descending degree; host candidates are tried in increasing order and
/// pruned by degree and by the edge/non-edge relation to placed vertices.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    let k = pattern.n();
    if k > host.n() {
        return None;
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&p| std::cmp::Reverse(pattern.degree(p)));
    let mut mapping = vec![usize::MAX; k];
    let mut used = vec![false; host.n()];
    if extend(host, pattern, &order, 0, &mut mapping, &mut used) {
        Some(Embedding { mapping })
    } else {
        None
    }
}

fn extend(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    mapping: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    for h in 0..host.n() {
        if used[h] || host.degree(h) < pattern.degree(p) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&q| pattern.has_edge(p, q) == host.has_edge(h, mapping[q]));
        if !consistent {
            continue;
        }
        mapping[p] = h;
        used[h] = true;
        if extend(host, pattern, order, depth + 1, mapping, used) {
            return true;
        }
        used[h] = false;
    }
    mapping[p] = usize::MAX;
    false
}

/// First member of `family` that occurs as an induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyViolation {
    pub pattern: NamedGraph,
    pub embedding: Embedding,
}

/// `Ok(())` when `g` is free of every member, otherwise the first witness.
pub fn is_family_free(g: &Graph, family: &[NamedGraph]) -> Result<(), FamilyViolation> {
    for name in family {
        let pattern = name.build();
        if let Some(embedding) = contains_induced(g, &pattern) {
            return Err(FamilyViolation {
                pattern: name.clone(),
                embedding,
            });
        }
    }
    Ok(())
}

/// An isomorphism `a -> b` as an embedding of `b` into `a`: `mapping[i]`
/// is the vertex of `a` matched with vertex `i` of `b`.
pub fn isomorphism(a: &Graph, b: &Graph) -> Option<Embedding> {
    if a.n() != b.n() || a.m() != b.m() {
        return None;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return None;
    }
    contains_induced(a, b)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    isomorphism(a, b).is_some()
}

/// Isomorphism-invariant key: the lexicographically greatest
/// `(degree, adjacency row)` sequence over all vertex orders.
///
/// Found by backtracking over ties only, so it is fast on asymmetric
/// graphs and degrades to `n!` on highly symmetric ones. Intended for
/// `n <= 10`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u64>);

const ROW_BITS: usize = 57;

pub fn canonical_key(g: &Graph) -> CanonicalKey {
    let n = g.n();
    assert!(n <= ROW_BITS, "canonical_key is limited to {ROW_BITS} vertices");
    let mut best: Option<Vec<u64>> = None;
    let mut order = Vec::with_capacity(n);
    let mut key = vec![n as u64];
    let mut placed = vec![false; n];
    canon_search(g, &mut order, &mut placed, &mut key, &mut best);
    CanonicalKey(best.unwrap_or(key))
}

/// Degree in the high bits, then one bit per placed vertex (earliest
/// placed is most significant).
fn row_value(g: &Graph, order: &[usize], v: usize) -> u64 {
    let mut row = (g.degree(v) as u64) << ROW_BITS;
    for (j, &u) in order.iter().enumerate() {
        if g.has_edge(u, v) {
            row |= 1 << (ROW_BITS - 1 - j);
        }
    }
    row
}

fn canon_search(
    g: &Graph,
    order: &mut Vec<usize>,
    placed: &mut [bool],
    key: &mut Vec<u64>,
    best: &mut Option<Vec<u64>>,
) {
    let n = g.n();
    if order.len() == n {
        if best.as_ref().is_none_or(|b| key.as_slice() > b.as_slice()) {
            *best = Some(key.clone());
        }
        return;
    }
    let mut top = 0u64;
    let mut ties = Vec::new();
    for v in (0..n).filter(|&v| !placed[v]) {
        let s = row_value(g, order, v);
        if ties.is_empty() || s > top {
            top = s;
            ties.clear();
            ties.push(v);
        } else if s == top {
            ties.push(v);
        }
    }
    key.push(top);
    if let Some(b) = best.as_ref() {
        if key.as_slice() < &b[..key.len()] {
            key.pop();
            return;
        }
    }
    for v in ties {
        placed[v] = true;
        order.push(v);
        canon_search(g, order, placed, key, best);
        order.pop();
        placed[v] = false;
    }
    key.pop();
}
