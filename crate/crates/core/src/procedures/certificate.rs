//! Reduction certificates: trees of structural moves showing that a graph
//! is good (or, with a low-degree move, at least recolorable), and their
//! replay into explicit recoloring paths.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::compose::{compose, compose_target, ComposeMode, GoodRecolorer, Part};
use super::{
    bipartite_codiamond_recolor, clique3_recolor, Clique3Layout, cycle_recolor, cycle_target, graph_f_recolor, graph_f_target,
    lift_dominated, lift_low_degree, prism_star_recolor, prism_star_target, renaming_walk,
    require_palette,
};
use crate::catalog::NamedGraph;
use crate::coloring::{chromatic_number, lex_least_coloring, Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reconfig::{check_bound, verify_path, RecoloringPath, StateSpace, DEFAULT_BUDGET};
use crate::subgraph::{canonical_key, isomorphism, CanonicalKey};

/// One node of a certificate. `target` is the node's good coloring, with
/// colors `1..=chi`; `good` is false when a low-degree move occurs in the
/// subtree, in which case only recolorability is certified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionCertificate {
    pub n: usize,
    pub chi: usize,
    pub target: Vec<Color>,
    pub good: bool,
    #[serde(rename = "move")]
    pub step: Move,
    pub children: Vec<Child>,
}

/// A child certificate for the subgraph induced by `vertices` (sorted,
/// relative to the parent).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Child {
    pub vertices: Vec<usize>,
    pub certificate: ReductionCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Move {
    BaseComplete,
    /// At most three vertices.
    BaseSmall,
    /// An odd cycle; `order[k]` is the vertex at position `k` around it.
    BaseCycle { order: Vec<usize> },
    /// `map[i]` is the vertex playing catalog vertex `i` of F.
    BaseGraphF { map: Vec<usize> },
    /// `map[i]` is the vertex playing catalog vertex `i` of the prism star.
    BasePrismStar { map: Vec<usize> },
    BaseBipartiteCoDiamond { side_a: Vec<usize> },
    /// A triangle `[v1, v2, v3]` seen exactly once by every other vertex,
    /// with independent attachment sets and `v1` seen by a single vertex.
    BaseClique3 { triangle: [usize; 3] },
    /// Non-adjacent `u`, `v` with `N(u) ⊆ N(v)`; the child is `G - u`.
    DominatedVertex { u: usize, v: usize },
    /// `deg(v) <= chi - 1`; the child is `G - v`.
    LowDegree { v: usize },
    DisjointUnionSplit,
    JoinSplit,
}

impl ReductionCertificate {
    fn leaf(g: &Graph, chi: usize, target: Vec<Color>, step: Move) -> Self {
        ReductionCertificate { n: g.n(), chi, target, good: true, step, children: Vec::new() }
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(|c| c.certificate.size()).sum::<usize>()
    }

    /// Whether any node uses the move named by `pred`.
    pub fn uses(&self, pred: &dyn Fn(&Move) -> bool) -> bool {
        pred(&self.step) || self.children.iter().any(|c| c.certificate.uses(pred))
    }
}

impl GoodRecolorer for ReductionCertificate {
    fn chromatic(&self) -> usize {
        self.chi
    }
    fn target(&self) -> Vec<Color> {
        self.target.clone()
    }
    fn recolor_to_target(&self, g: &Graph, start: &Coloring) -> Result<RecoloringPath> {
        recolor_via_certificate(g, self, start, start.ell)
    }
}

/// Certificate search with memoized failures.
#[derive(Default)]
struct Search {
    failed: HashSet<CanonicalKey>,
    solved: HashMap<Graph, Option<ReductionCertificate>>,
}

/// Failures are shared between isomorphic graphs only where canonical keys
/// stay cheap.
const MEMO_LIMIT: usize = 10;

impl Search {
    fn run(&mut self, g: &Graph) -> Option<ReductionCertificate> {
        if let Some(hit) = self.solved.get(g) {
            return hit.clone();
        }
        let key = (g.n() <= MEMO_LIMIT).then(|| canonical_key(g));
        if key.as_ref().is_some_and(|k| self.failed.contains(k)) {
            return None;
        }
        let out = self.rules(g);
        if out.is_none() {
            if let Some(k) = key {
                self.failed.insert(k);
            }
        }
        self.solved.insert(g.clone(), out.clone());
        out
    }

    fn rules(&mut self, g: &Graph) -> Option<ReductionCertificate> {
        let n = g.n();
        if n == 0 {
            return None;
        }
        if g.is_complete() {
            return Some(ReductionCertificate::leaf(g, n, (1..=n).collect(), Move::BaseComplete));
        }
        if n <= 3 {
            let chi = chromatic_number(g);
            let target = lex_least_coloring(g, chi).expect("chi colors suffice").colors;
            return Some(ReductionCertificate::leaf(g, chi, target, Move::BaseSmall));
        }
        if let Some(cert) = special_base(g) {
            return Some(cert);
        }
        if let Some(order) = odd_cycle_order(g) {
            let t = cycle_target(n);
            let mut target = vec![0; n];
            for (k, &v) in order.iter().enumerate() {
                target[v] = t[k];
            }
            return Some(ReductionCertificate::leaf(g, 3, target, Move::BaseCycle { order }));
        }
        for u in 0..n {
            for v in 0..n {
                if u == v || g.has_edge(u, v) || !g.neighborhood_subset(u, v) {
                    continue;
                }
                let keep: Vec<usize> = (0..n).filter(|&x| x != u).collect();
                let Some(child) = self.run(&g.induced(&keep)) else { continue };
                let mut target = vec![0; n];
                for (i, &x) in keep.iter().enumerate() {
                    target[x] = child.target[i];
                }
                target[u] = target[v];
                return Some(ReductionCertificate {
                    n,
                    chi: child.chi,
                    target,
                    good: child.good,
                    step: Move::DominatedVertex { u, v },
                    children: vec![Child { vertices: keep, certificate: child }],
                });
            }
        }
        let comps = g.components();
        if comps.len() > 1 {
            return self.split(g, comps, ComposeMode::DisjointUnion);
        }
        let co = g.complement().components();
        if co.len() > 1 {
            let first = co[0].clone();
            let rest: Vec<usize> = (0..n).filter(|v| !first.contains(v)).collect();
            return self.split(g, vec![first, rest], ComposeMode::Join);
        }
        if let Some(layout) = Clique3Layout::find(g) {
            let target = layout.target(n);
            return Some(ReductionCertificate::leaf(g, 3, target, Move::BaseClique3 { triangle: layout.triangle }));
        }
        if let Ok((side_a, side_b)) = super::bipartite::sides(g) {
            let mut target = vec![0; n];
            side_b.iter().for_each(|&v| target[v] = 2);
            side_a.iter().for_each(|&v| target[v] = 1);
            return Some(ReductionCertificate::leaf(
                g,
                2,
                target,
                Move::BaseBipartiteCoDiamond { side_a },
            ));
        }
        let chi = chromatic_number(g);
        for v in 0..n {
            if g.degree(v) + 1 > chi {
                continue;
            }
            let keep: Vec<usize> = (0..n).filter(|&x| x != v).collect();
            let Some(child) = self.run(&g.induced(&keep)) else { continue };
            let mut target = vec![0; n];
            for (i, &x) in keep.iter().enumerate() {
                target[x] = child.target[i];
            }
            let seen: Vec<Color> = g.neighbors(v).iter().map(|&u| target[u]).collect();
            target[v] = (1..).find(|c| !seen.contains(c)).expect("unbounded");
            let chi = child.chi.max(target[v]);
            return Some(ReductionCertificate {
                n,
                chi,
                target,
                good: false,
                step: Move::LowDegree { v },
                children: vec![Child { vertices: keep, certificate: child }],
            });
        }
        None
    }

    fn split(&mut self, g: &Graph, blocks: Vec<Vec<usize>>, mode: ComposeMode) -> Option<ReductionCertificate> {
        let mut children = Vec::new();
        for block in blocks {
            let certificate = self.run(&g.induced(&block))?;
            children.push(Child { vertices: block, certificate });
        }
        let parts: Vec<Part> = children
            .iter()
            .map(|c| Part { vertices: c.vertices.clone(), recolorer: &c.certificate })
            .collect();
        let target = compose_target(g.n(), mode, &parts);
        let chi = match mode {
            ComposeMode::DisjointUnion => children.iter().map(|c| c.certificate.chi).max(),
            ComposeMode::Join => Some(children.iter().map(|c| c.certificate.chi).sum()),
        }
        .unwrap_or(0);
        let step = match mode {
            ComposeMode::DisjointUnion => Move::DisjointUnionSplit,
            ComposeMode::Join => Move::JoinSplit,
        };
        Some(ReductionCertificate {
            n: g.n(),
            chi,
            good: children.iter().all(|c| c.certificate.good),
            target,
            step,
            children,
        })
    }
}

/// Graph F or the 3-prism star, matched by isomorphism.
fn special_base(g: &Graph) -> Option<ReductionCertificate> {
    let (name, m) = match g.n() {
        8 => (NamedGraph::GraphF, 12),
        9 => (NamedGraph::Prism3Star, 18),
        _ => return None,
    };
    if g.m() != m {
        return None;
    }
    let map = isomorphism(g, &name.build())?.mapping;
    let labeled = match name {
        NamedGraph::GraphF => graph_f_target(),
        _ => prism_star_target(),
    };
    let mut target = vec![0; g.n()];
    for (i, &v) in map.iter().enumerate() {
        target[v] = labeled[i];
    }
    let step = match name {
        NamedGraph::GraphF => Move::BaseGraphF { map },
        _ => Move::BasePrismStar { map },
    };
    Some(ReductionCertificate::leaf(g, 3, target, step))
}

/// Cyclic vertex order of a connected 2-regular graph with an odd number
/// (at least five) of vertices.
fn odd_cycle_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 5 || n % 2 == 0 || !g.is_regular(2) || !g.is_connected() {
        return None;
    }
    let mut order = vec![0, g.neighbors(0)[0]];
    while order.len() < n {
        let (prev, cur) = (order[order.len() - 2], order[order.len() - 1]);
        let next = *g.neighbors(cur).iter().find(|&&w| w != prev)?;
        order.push(next);
    }
    Some(order)
}

/// A certificate for `g` if the reduction rules reach base cases.
///
/// Rules are tried in order: complete graph, at most three vertices, graph
/// F, the 3-prism star, odd cycles, dominated pairs (every pair in scan
/// order), disjoint union, join, a triangle with single attachments,
/// bipartite co-diamond-free, and last a vertex of degree below `chi`, which only certifies recolorability.
pub fn good_certificate(g: &Graph) -> Option<ReductionCertificate> {
    Search::default().run(g)
}

fn relabel(path: &RecoloringPath, map: &[usize], start: &Coloring) -> RecoloringPath {
    RecoloringPath {
        start: start.clone(),
        steps: path.steps.iter().map(|&(i, c)| (map[i], c)).collect(),
    }
}

fn pull_back(a: &Coloring, map: &[usize]) -> Coloring {
    Coloring::new(map.iter().map(|&v| a.colors[v]).collect(), a.ell)
}

/// Shortest path to `target` in `R_ell(g)` that recolors no vertex more than
/// `n` times, for graphs with at most three vertices.
fn small_path(g: &Graph, a: &Coloring, target: &[Color]) -> Result<RecoloringPath> {
    let space = StateSpace::build(g, a.ell, DEFAULT_BUDGET)?;
    let from = space.index_of(&a.colors).ok_or(Error::CertificateMismatch("start is not a coloring of the node".into()))?;
    let to = space.index_of(target).ok_or(Error::CertificateMismatch("target is not a coloring of the node".into()))?;
    let path = space.shortest_path(from, to).ok_or(Error::Disconnected)?;
    if path.counts().iter().all(|&c| c <= g.n()) {
        return Ok(path);
    }
    // Breadth-first over (coloring, counts) with counts capped at n.
    let n = g.n();
    type State = (Vec<Color>, Vec<usize>);
    let start: State = (a.colors.clone(), vec![0; n]);
    let mut parent: HashMap<State, Option<(State, (usize, Color))>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(state) = queue.pop_front() {
        if state.0 == target {
            let mut steps = Vec::new();
            let mut cur = state;
            while let Some(Some((prev, step))) = parent.get(&cur).cloned() {
                steps.push(step);
                cur = prev;
            }
            steps.reverse();
            return Ok(RecoloringPath { start: a.clone(), steps });
        }
        for v in 0..n {
            if state.1[v] == n {
                continue;
            }
            for c in 1..=a.ell {
                if c == state.0[v] || g.neighbors(v).iter().any(|&u| state.0[u] == c) {
                    continue;
                }
                let mut next = state.clone();
                next.0[v] = c;
                next.1[v] += 1;
                if !parent.contains_key(&next) {
                    parent.insert(next.clone(), Some((state.clone(), (v, c))));
                    queue.push_back(next);
                }
            }
        }
    }
    Err(Error::BoundViolated { vertex: 0, count: n + 1, bound: n })
}

/// Replays `cert` bottom-up from `a`, returning a path to `cert.target`.
///
/// When the certificate is good, every node's path is checked to recolor
/// each vertex at most `n` times, with `n` the order of that node.
pub fn recolor_via_certificate(
    g: &Graph,
    cert: &ReductionCertificate,
    a: &Coloring,
    ell: usize,
) -> Result<RecoloringPath> {
    if cert.n != g.n() || cert.target.len() != g.n() {
        return Err(Error::CertificateMismatch(format!("certificate is for {} vertices, graph has {}", cert.n, g.n()).into()));
    }
    require_palette(cert.chi + 1, ell)?;
    let a = a.with_ell(ell);
    a.validate(g)?;
    let target = Coloring::new(cert.target.clone(), ell);
    let path = match &cert.step {
        Move::BaseComplete => {
            if !g.is_complete() {
                return Err(Error::CertificateMismatch("complete base on a non-complete graph".into()));
            }
            renaming_walk(g, &a, &target, ell)?
        }
        Move::BaseSmall => {
            if g.n() > 3 {
                return Err(Error::CertificateMismatch("small base on more than three vertices".into()));
            }
            small_path(g, &a, &cert.target)?
        }
        Move::BaseCycle { order } => {
            let cycle = NamedGraph::Cycle(g.n()).try_build()?;
            if !maps_onto(g, &cycle, order) {
                return Err(Error::CertificateMismatch("cycle order is not an isomorphism".into()));
            }
            let sub = cycle_recolor(g.n(), &pull_back(&a, order), ell)?;
            relabel(&sub, order, &a)
        }
        Move::BaseGraphF { map } | Move::BasePrismStar { map } => {
            let is_f = matches!(cert.step, Move::BaseGraphF { .. });
            let name = if is_f { NamedGraph::GraphF } else { NamedGraph::Prism3Star };
            if !maps_onto(g, &name.build(), map) {
                return Err(Error::CertificateMismatch("base map is not an isomorphism".into()));
            }
            let local = pull_back(&a, map);
            let sub = if is_f { graph_f_recolor(&local, ell)? } else { prism_star_recolor(&local, ell)? };
            relabel(&sub, map, &a)
        }
        Move::BaseBipartiteCoDiamond { .. } => {
            let flood = bipartite_codiamond_recolor(g, &a, ell)?;
            let rename = renaming_walk(g, &flood.end(), &target, ell)?;
            flood.concat(&rename)
        }
        Move::BaseClique3 { triangle } => {
            let layout = Clique3Layout::new(g, *triangle)
                .ok_or(Error::CertificateMismatch("triangle does not give the clique layout".into()))?;
            clique3_recolor(g, &layout, &a, ell)?
        }
        Move::DominatedVertex { u, v } => {
            let child = only_child(cert)?;
            let sub_g = g.induced(&child.vertices);
            let sub = recolor_via_certificate(&sub_g, &child.certificate, &a.restrict(&child.vertices), ell)?;
            lift_dominated(g, *u, *v, &a, &sub)?
        }
        Move::LowDegree { v } => {
            let child = only_child(cert)?;
            let sub_g = g.induced(&child.vertices);
            let sub = recolor_via_certificate(&sub_g, &child.certificate, &a.restrict(&child.vertices), ell)?;
            lift_low_degree(g, *v, &sub, &a, &target)?
        }
        Move::DisjointUnionSplit | Move::JoinSplit => {
            let mode = if cert.step == Move::JoinSplit { ComposeMode::Join } else { ComposeMode::DisjointUnion };
            let parts: Vec<Part> = cert
                .children
                .iter()
                .map(|c| Part { vertices: c.vertices.clone(), recolorer: &c.certificate })
                .collect();
            compose(g, mode, &parts, &a, ell)?
        }
    };
    if path.end() != target {
        return Err(Error::CertificateMismatch("replay did not end on the target".into()));
    }
    if cert.good {
        check_bound(g, &path, g.n())?;
    } else {
        verify_path(g, &path)?;
    }
    Ok(path)
}

fn only_child(cert: &ReductionCertificate) -> Result<&Child> {
    match &cert.children[..] {
        [c] => Ok(c),
        _ => Err(Error::CertificateMismatch("expected exactly one child".into())),
    }
}

/// Whether `map` (pattern vertex to host vertex) is an isomorphism.
fn maps_onto(host: &Graph, pattern: &Graph, map: &[usize]) -> bool {
    let n = pattern.n();
    if host.n() != n || map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    if map.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true)) {
        return false;
    }
    (0..n).all(|i| (0..n).all(|j| i == j || pattern.has_edge(i, j) == host.has_edge(map[i], map[j])))
}

/// Joins `a` to `b` through the certificate's target. For a good
/// certificate the path has at most `2n^2` steps.
pub fn connect_via_certificate(
    g: &Graph,
    cert: &ReductionCertificate,
    a: &Coloring,
    b: &Coloring,
    ell: usize,
) -> Result<RecoloringPath> {
    let to_a = recolor_via_certificate(g, cert, a, ell)?;
    let to_b = recolor_via_certificate(g, cert, b, ell)?;
    let path = to_a.concat(&to_b.reversed());
    if cert.good && path.len() > 2 * g.n() * g.n() {
        return Err(Error::BoundViolated { vertex: 0, count: path.len(), bound: 2 * g.n() * g.n() });
    }
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::NamedGraph as N;
    use crate::coloring::enumerate_colorings;

    fn replay_all(g: &Graph, cert: &ReductionCertificate, ells: std::ops::RangeInclusive<usize>) {
        for ell in ells {
            for a in enumerate_colorings(g, ell) {
                let p = recolor_via_certificate(g, cert, &a, ell)
                    .unwrap_or_else(|e| panic!("{g:?} from {:?} at {ell}: {e}", a.colors));
                assert_eq!(p.end().colors, cert.target);
            }
        }
    }

    #[test]
    fn complete_graph_is_single_leaf() {
        for n in 1..=5 {
            let g = N::Complete(n).build();
            let cert = good_certificate(&g).unwrap();
            assert_eq!(cert.step, Move::BaseComplete);
            assert!(cert.children.is_empty());
            replay_all(&g, &cert, n + 1..=n + 1);
        }
    }

    #[test]
    fn p4_reduces_to_p3() {
        let g = N::Path(4).build();
        let cert = good_certificate(&g).unwrap();
        assert_eq!(cert.step, Move::DominatedVertex { u: 0, v: 2 });
        assert_eq!(cert.children[0].certificate.step, Move::BaseSmall);
        assert!(cert.good);
        replay_all(&g, &cert, 3..=4);
    }

    #[test]
    fn c6_has_no_certificate() {
        assert!(good_certificate(&N::Cycle(6).build()).is_none());
        assert!(good_certificate(&N::KllMinusMatching(4).build()).is_none());
    }

    #[test]
    fn named_bases() {
        let f = N::GraphF.build();
        let cert = good_certificate(&f).unwrap();
        assert!(matches!(cert.step, Move::BaseGraphF { .. }));
        replay_all(&f, &cert, 4..=4);
        let star = N::Prism3Star.build();
        let cert = good_certificate(&star).unwrap();
        assert!(matches!(cert.step, Move::BasePrismStar { .. }));
        let c7 = N::Cycle(7).build();
        let cert = good_certificate(&c7).unwrap();
        assert!(matches!(cert.step, Move::BaseCycle { .. }));
        replay_all(&c7, &cert, 4..=4);
    }

    #[test]
    fn joins_and_unions() {
        let g = N::CompleteMultipartite(vec![1, 2, 3]).build();
        let cert = good_certificate(&g).unwrap();
        assert!(cert.good);
        assert_eq!(cert.chi, 3);
        replay_all(&g, &cert, 4..=4);
        let c5 = N::Cycle(5).build();
        let two = c5.disjoint_union(&c5);
        let cert = good_certificate(&two).unwrap();
        assert_eq!(cert.step, Move::DisjointUnionSplit);
        let a = Coloring::new(vec![1, 2, 1, 2, 3, 4, 3, 4, 3, 1], 4);
        let p = recolor_via_certificate(&two, &cert, &a, 4).unwrap();
        assert_eq!(p.end().colors, cert.target);
        assert!(good_certificate(&c5.join(&c5)).is_some());
    }

    #[test]
    fn json_round_trip() {
        let g = N::Paw.build();
        let cert = good_certificate(&g).unwrap();
        let text = serde_json::to_string(&cert).unwrap();
        assert!(text.contains("\"move\":{\"type\":"));
        let back: ReductionCertificate = serde_json::from_str(&text).unwrap();
        assert_eq!(back, cert);
    }

    #[test]
    fn mismatched_certificate_is_rejected() {
        let cert = good_certificate(&N::Path(4).build()).unwrap();
        // The same reduction is valid on C4, but not on the claw, whose
        // vertex 0 is adjacent to vertex 2.
        let c4 = N::Cycle(4).build();
        let a = Coloring::new(vec![1, 2, 1, 2], 3);
        assert!(recolor_via_certificate(&c4, &cert, &a, 3).is_ok());
        let claw = N::Claw.build();
        let a = Coloring::new(vec![1, 2, 2, 2], 3);
        assert!(recolor_via_certificate(&claw, &cert, &a, 3).is_err());
        let k3 = N::Complete(3).build();
        assert!(recolor_via_certificate(&k3, &cert, &Coloring::new(vec![1, 2, 3], 4), 4).is_err());
    }

    #[test]
    fn connect_stays_within_two_n_squared() {
        let g = N::House.build();
        let cert = good_certificate(&g).unwrap();
        let all: Vec<Coloring> = enumerate_colorings(&g, 4).collect();
        for b in all.iter().step_by(7) {
            let p = connect_via_certificate(&g, &cert, &all[0], b, 4).unwrap();
            assert_eq!(&p.end(), b);
        }
    }
}
