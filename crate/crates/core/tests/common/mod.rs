//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's search code, so agreement is independent evidence.

#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use recolor::subgraph::{canonical_key, CanonicalKey};
use recolor::Graph;

/// Every labeled graph on `n` vertices, in mask order.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, &edges).expect("valid edges")
    })
}

/// Labeled graphs on `1..=n_max` vertices.
pub fn labeled_graphs_up_to(n_max: usize) -> impl Iterator<Item = Graph> {
    (1..=n_max).flat_map(labeled_graphs)
}

/// Caches a per-isomorphism-class value.
pub struct ClassCache<T> {
    map: HashMap<CanonicalKey, T>,
}

impl<T> Default for ClassCache<T> {
    fn default() -> Self {
        ClassCache { map: HashMap::new() }
    }
}

impl<T: Clone> ClassCache<T> {
    pub fn get_or(&mut self, g: &Graph, f: impl FnOnce() -> T) -> T {
        self.map.entry(canonical_key(g)).or_insert_with(f).clone()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }
}

/// All proper `ell`-colorings by plain enumeration of `ell^n` assignments.
pub fn brute_colorings(g: &Graph, ell: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let edges = g.edges();
    let mut out = Vec::new();
    if ell == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut c = vec![1; n];
    loop {
        if edges.iter().all(|&(u, v)| c[u] != c[v]) {
            out.push(c.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            if c[i] < ell {
                c[i] += 1;
                break;
            }
            c[i] = 1;
            i += 1;
        }
    }
}

/// The reconfiguration graph built explicitly: nodes are proper colorings,
/// adjacency lists join colorings differing at one vertex.
pub struct ExplicitSpace {
    pub nodes: Vec<Vec<usize>>,
    pub adj: Vec<Vec<usize>>,
}

impl ExplicitSpace {
    pub fn new(g: &Graph, ell: usize) -> Self {
        let nodes = brute_colorings(g, ell);
        let index: HashMap<Vec<usize>, usize> =
            nodes.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        let adj = nodes
            .iter()
            .map(|c| {
                let mut out = Vec::new();
                for v in 0..g.n() {
                    for col in 1..=ell {
                        if col != c[v] {
                            let mut d = c.clone();
                            d[v] = col;
                            if let Some(&j) = index.get(&d) {
                                out.push(j);
                            }
                        }
                    }
                }
                out
            })
            .collect();
        ExplicitSpace { nodes, adj }
    }

    fn bfs(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.nodes.len()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn connected(&self) -> bool {
        self.nodes.is_empty() || self.bfs(0).iter().all(Option::is_some)
    }

    /// `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for s in 0..self.nodes.len() {
            let dist = self.bfs(s);
            for d in dist {
                best = best.max(d?);
            }
        }
        Some(best)
    }
}

/// Chromatic polynomial `P(G, k)` by deletion and contraction.
pub fn chromatic_polynomial(g: &Graph, k: i64) -> i64 {
    let edges: Vec<(usize, usize)> = g.edges();
    deletion_contraction(g.n(), &edges, k)
}

fn deletion_contraction(n: usize, edges: &[(usize, usize)], k: i64) -> i64 {
    let Some((&(u, v), rest)) = edges.split_first() else {
        return k.pow(n as u32);
    };
    let deleted = deletion_contraction(n, rest, k);
    // Contract v into u, relabel n-1 onto v, and drop loops and duplicates.
    let relabel = |x: usize| {
        let x = if x == v { u } else { x };
        if x == n - 1 { v } else { x }
    };
    let mut merged: Vec<(usize, usize)> = rest
        .iter()
        .map(|&(a, b)| {
            let (a, b) = (relabel(a), relabel(b));
            (a.min(b), a.max(b))
        })
        .filter(|(a, b)| a != b)
        .collect();
    merged.sort_unstable();
    merged.dedup();
    deleted - deletion_contraction(n - 1, &merged, k)
}

/// Seeded random graph with `n` vertices and edge probability `p`.
pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("valid edges")
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Connected bipartite graphs on `n` vertices, one per isomorphism class,
/// found by running over every edge set between sides of sizes `a <= b`.
pub fn bipartite_classes(n: usize) -> Vec<Graph> {
    let mut seen = HashMap::new();
    for a in 1..=n / 2 {
        let pairs: Vec<(usize, usize)> = (0..a).flat_map(|u| (a..n).map(move |w| (u, w))).collect();
        for mask in 0u64..1 << pairs.len() {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            if edges.len() < n - 1 {
                continue;
            }
            let g = Graph::new(n, &edges).expect("valid edges");
            if g.is_connected() {
                seen.entry(canonical_key(&g)).or_insert(g);
            }
        }
    }
    let mut out: Vec<Graph> = seen.into_values().collect();
    out.sort_by_key(|g| (g.m(), g.edges()));
    out
}
