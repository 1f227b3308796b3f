//! Simple undirected graphs on dense vertex labels `0..n`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An immutable simple undirected graph.
///
/// Adjacency is kept twice: sorted neighbor lists for iteration and a dense
/// matrix for constant-time edge tests. Desk-scale graphs only.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    matrix: Vec<bool>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

/// Injective map from the vertices of a pattern graph into a host graph.
///
/// `mapping[p]` is the host vertex that pattern vertex `p` lands on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Embedding {
    pub mapping: Vec<usize>,
}

impl Embedding {
    pub fn image(&self) -> impl Iterator<Item = usize> + '_ {
        self.mapping.iter().copied()
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(i, &v)| i == v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CombineMode {
    Complement,
    DisjointUnion,
    Join,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.insert_edge(u, v);
        }
        g.finish();
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            matrix: vec![false; n * n],
        }
    }

    pub(crate) fn from_matrix(n: usize, has_edge: impl Fn(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if has_edge(u, v) {
                    g.insert_edge(u, v);
                }
            }
        }
        g.finish();
        g
    }

    fn insert_edge(&mut self, u: usize, v: usize) {
        if !self.matrix[u * self.n + v] {
            self.matrix[u * self.n + v] = true;
            self.matrix[v * self.n + u] = true;
            self.adj[u].push(v);
            self.adj[v].push(u);
        }
    }

    fn finish(&mut self) {
        for list in &mut self.adj {
            list.sort_unstable();
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.n + v]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.m() * 2 == self.n * self.n.saturating_sub(1)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|l| l.len() == d)
    }

    /// `N(u) ⊆ N(v)`.
    pub fn neighborhood_subset(&self, u: usize, v: usize) -> bool {
        self.adj[u].iter().all(|&w| self.has_edge(v, w))
    }

    pub fn complement(&self) -> Graph {
        Graph::from_matrix(self.n, |u, v| !self.has_edge(u, v))
    }

    /// Vertices of `other` are shifted up by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        self.glue(other, false)
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        self.glue(other, true)
    }

    fn glue(&self, other: &Graph, cross: bool) -> Graph {
        let n1 = self.n;
        Graph::from_matrix(n1 + other.n, |u, v| match (u < n1, v < n1) {
            (true, true) => self.has_edge(u, v),
            (false, false) => other.has_edge(u - n1, v - n1),
            _ => cross,
        })
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]` of `self`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        Graph::from_matrix(vertices.len(), |i, j| self.has_edge(vertices[i], vertices[j]))
    }

    /// `G - u`. Vertices above `u` shift down by one.
    pub fn delete_vertex(&self, u: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&v| v != u).collect();
        self.induced(&keep)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(&vec![false; self.n])
    }

    /// Components of the graph with the `removed` vertices deleted.
    pub fn components_avoiding(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let mut seen = removed.to_vec();
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Proper 2-coloring as `(side_a, side_b)` if the graph is bipartite.
    /// In each component the smallest vertex goes to side A.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut side = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        _ => {}
                    }
                }
            }
        }
        let a = (0..self.n).filter(|&v| side[v] == Some(false)).collect();
        let b = (0..self.n).filter(|&v| side[v] == Some(true)).collect();
        Some((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn is_complete_to(&self, xs: &[usize], ys: &[usize]) -> bool {
        xs.iter().all(|&x| ys.iter().all(|&y| self.has_edge(x, y)))
    }

    pub fn is_anticomplete_to(&self, xs: &[usize], ys: &[usize]) -> bool {
        xs.iter().all(|&x| ys.iter().all(|&y| !self.has_edge(x, y)))
    }

    /// FNV-1a over the sorted edge list; used to pin transcribed graphs.
    pub fn edge_checksum(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut eat = |x: usize| {
            for b in (x as u32).to_le_bytes() {
                h ^= u64::from(b);
                h = h.wrapping_mul(0x0000_0100_0000_01b3);
            }
        };
        eat(self.n);
        for (u, v) in self.edges() {
            eat(u);
            eat(v);
        }
        h
    }

    /// Smallest `u`, then smallest `v`, with `u`, `v` non-adjacent and
    /// `N(u) ⊆ N(v)`.
    pub fn find_dominated_pair(&self) -> Option<(usize, usize)> {
        (0..self.n).find_map(|u| {
            (0..self.n)
                .find(|&v| v != u && !self.has_edge(u, v) && self.neighborhood_subset(u, v))
                .map(|v| (u, v))
        })
    }

    /// A clique cutset `Q` together with a component of `G - Q` that is
    /// complete to `Q`. Cliques are tried by size, then lexicographically.
    pub fn find_tight_clique_cutset(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let base = self.components().len();
        let mut cliques = Vec::new();
        let mut current = Vec::new();
        self.collect_cliques(0, &mut current, &mut cliques);
        cliques.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        for q in cliques {
            let mut removed = vec![false; self.n];
            for &v in &q {
                removed[v] = true;
            }
            let comps = self.components_avoiding(&removed);
            if comps.len() <= base {
                continue;
            }
            if let Some(h) = comps.into_iter().find(|h| self.is_complete_to(h, &q)) {
                return Some((q, h));
            }
        }
        None
    }

    fn collect_cliques(&self, from: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for v in from..self.n {
            if current.iter().all(|&u| self.has_edge(u, v)) {
                current.push(v);
                out.push(current.clone());
                self.collect_cliques(v + 1, current, out);
                current.pop();
            }
        }
    }

    /// Exact clique number by branch and bound.
    pub fn clique_number(&self) -> usize {
        self.max_clique().len()
    }

    pub fn max_clique(&self) -> Vec<usize> {
        let mut best = Vec::new();
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let mut current = Vec::new();
        self.expand_clique(&mut current, order, &mut best);
        best.sort_unstable();
        best
    }

    fn expand_clique(&self, current: &mut Vec<usize>, candidates: Vec<usize>, best: &mut Vec<usize>) {
        if candidates.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        }
        for (i, &v) in candidates.iter().enumerate() {
            if current.len() + candidates.len() - i <= best.len() {
                return;
            }
            let next: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&w| self.has_edge(v, w))
                .collect();
            current.push(v);
            self.expand_clique(current, next, best);
            current.pop();
        }
    }
}

/// `complement(g1)`, `g1 + g2`, or the join of `g1` and `g2`.
pub fn combine(mode: CombineMode, g1: &Graph, g2: Option<&Graph>) -> Result<Graph> {
    match (mode, g2) {
        (CombineMode::Complement, None) => Ok(g1.complement()),
        (CombineMode::DisjointUnion, Some(g2)) => Ok(g1.disjoint_union(g2)),
        (CombineMode::Join, Some(g2)) => Ok(g1.join(g2)),
        (CombineMode::Complement, Some(_)) => Err(Error::Precondition(
            "complement takes exactly one graph".into(),
        )),
        (_, None) => Err(Error::Precondition(
            "disjoint union and join take two graphs".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(Graph::new(2, &[(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn build_dedups() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.m(), 3);
        assert!(g.is_complete());
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));
    }

    #[test]
    fn combine_modes() {
        let p3 = path(3);
        let k1 = Graph::empty(1);
        let u = combine(CombineMode::DisjointUnion, &p3, Some(&k1)).unwrap();
        assert_eq!((u.n(), u.m()), (4, 2));
        let w = combine(CombineMode::Join, &k1, Some(&cycle(4))).unwrap();
        assert_eq!((w.n(), w.m()), (5, 8));
        assert_eq!(w.degree(0), 4);
        assert!(combine(CombineMode::Join, &k1, None).is_err());
        assert!(combine(CombineMode::Complement, &k1, Some(&k1)).is_err());
    }

    #[test]
    fn components_small() {
        let two_k2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.components(), vec![vec![0, 1], vec![2, 3]]);
        let p3p1 = path(3).disjoint_union(&Graph::empty(1));
        let sizes: Vec<_> = p3p1.components().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 1]);
        assert_eq!(cycle(5).components().len(), 1);
    }

    #[test]
    fn dominated_pairs() {
        assert_eq!(path(4).find_dominated_pair(), Some((0, 2)));
        for n in 3..9 {
            assert!(path(n).find_dominated_pair().is_some());
        }
        for n in 5..10 {
            assert_eq!(cycle(n).find_dominated_pair(), None);
        }
    }

    #[test]
    fn tight_clique_cutsets() {
        let bowtie = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let (q, h) = bowtie.find_tight_clique_cutset().unwrap();
        assert_eq!(q, vec![2]);
        assert!(h == vec![0, 1] || h == vec![3, 4]);
        assert_eq!(cycle(5).find_tight_clique_cutset(), None);
        let k4 = Graph::from_matrix(4, |_, _| true);
        assert_eq!(k4.find_tight_clique_cutset(), None);
    }

    #[test]
    fn clique_numbers() {
        let k4 = Graph::from_matrix(4, |_, _| true);
        assert_eq!(k4.clique_number(), 4);
        assert_eq!(cycle(5).clique_number(), 2);
        assert_eq!(Graph::empty(3).clique_number(), 1);
        assert_eq!(Graph::empty(0).clique_number(), 0);
    }

    #[test]
    fn bipartition_sides() {
        let (a, b) = path(4).bipartition().unwrap();
        assert_eq!((a, b), (vec![0, 2], vec![1, 3]));
        assert!(cycle(5).bipartition().is_none());
    }

    #[test]
    fn delete_and_induce() {
        let g = path(4).delete_vertex(1);
        assert_eq!(g.edges(), vec![(1, 2)]);
        let h = cycle(5).induced(&[4, 0, 1]);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
    }
}
