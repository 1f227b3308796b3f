use super::PathBuilder;
use crate::catalog::NamedGraph;
use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reconfig::{check_bound, RecoloringPath};

/// The canonical 3-coloring of `C_n` (vertex `i` is `v_{i+1}`): colors
/// 1, 2, 3, 1, ... on `v_1..v_{n-1}`, and `v_n` gets 3 when `n ≡ 0 (mod 3)`
/// and 2 otherwise.
pub fn cycle_target(n: usize) -> Vec<Color> {
    let mut t: Vec<Color> = (0..n).map(|i| i % 3 + 1).collect();
    if n >= 3 {
        t[n - 1] = if n % 3 == 0 { 3 } else { 2 };
    }
    t
}

/// One step of the schedule: evacuate `w` when it holds `color`, or set `v`
/// to its target.
#[derive(Clone, Copy)]
enum Op {
    Evacuate { w: usize, color: Color },
    Settle(usize),
}

/// Cap on schedule nodes explored when choosing evacuation colors.
const SEARCH_NODES: usize = 100_000;

/// Recolors `a` on `C_n` to [`cycle_target`] with every vertex recolored at
/// most twice, for palettes of at least four colors.
///
/// `v_1` takes color 1, then each `v_i` in turn takes its target color,
/// first evacuating the next vertex when it holds that color. An evacuated
/// vertex takes a color absent from its closed neighborhood. The last
/// vertex can be evacuated twice before it settles, so evacuation colors
/// are chosen by a depth-first search (own target first) that keeps every
/// count at most two. With four colors and `n ≡ 0 (mod 3)` that can fail
/// for the order starting at `v_1`; the search then settles the cycle from
/// another start or in the other direction.
pub fn cycle_recolor(n: usize, a: &Coloring, ell: usize) -> Result<RecoloringPath> {
    if ell < 4 {
        return Err(Error::PaletteTooSmall { needed: 4, ell });
    }
    let g = NamedGraph::Cycle(n).try_build()?;
    let a = a.with_ell(ell);
    a.validate(&g)?;
    let t = cycle_target(n);
    let mut budget = SEARCH_NODES;
    let path = settle_orders(n)
        .find_map(|order| schedule(&g, &t, &ops_for(&order, &t), PathBuilder::new(&g, &a), &mut budget))
        .ok_or(Error::BoundViolated { vertex: n - 1, count: 3, bound: 2 })?;
    check_bound(&g, &path, 2)?;
    Ok(path)
}

/// Settling orders around the cycle: from `v_1` forwards first, then every
/// other start and direction.
fn settle_orders(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).flat_map(move |s| {
        [1, n - 1].into_iter().map(move |step| (0..n).map(|k| (s + k * step) % n).collect())
    })
}

fn ops_for(order: &[usize], t: &[Color]) -> Vec<Op> {
    let n = order.len();
    let mut ops = vec![
        Op::Evacuate { w: order[1], color: t[order[0]] },
        Op::Evacuate { w: order[n - 1], color: t[order[0]] },
        Op::Settle(order[0]),
    ];
    for k in 1..n - 1 {
        ops.push(Op::Evacuate { w: order[k + 1], color: t[order[k]] });
        ops.push(Op::Settle(order[k]));
    }
    ops.push(Op::Settle(order[n - 1]));
    ops
}

fn schedule(
    g: &Graph,
    t: &[Color],
    ops: &[Op],
    mut b: PathBuilder,
    budget: &mut usize,
) -> Option<RecoloringPath> {
    *budget = budget.checked_sub(1)?;
    let Some((&op, rest)) = ops.split_first() else {
        return Some(b.finish());
    };
    let within = |b: &PathBuilder, v: usize| b.count(v) <= 2;
    match op {
        Op::Settle(v) => {
            b.set(v, t[v]).ok()?;
            within(&b, v).then_some(())?;
            schedule(g, t, rest, b, budget)
        }
        Op::Evacuate { w, color } if b.color(w) == color => {
            let blocked: Vec<Color> = g.neighbors(w).iter().map(|&u| b.color(u)).collect();
            let candidates = std::iter::once(t[w])
                .chain(1..=b.ell())
                .filter(|c| *c != color && !blocked.contains(c));
            let mut tried = Vec::new();
            for c in candidates {
                if tried.contains(&c) {
                    continue;
                }
                tried.push(c);
                let mut next = b.clone();
                next.set(w, c).ok()?;
                if !within(&next, w) {
                    continue;
                }
                if let Some(p) = schedule(g, t, rest, next, budget) {
                    return Some(p);
                }
            }
            None
        }
        Op::Evacuate { .. } => schedule(g, t, rest, b, budget),
    }
}
