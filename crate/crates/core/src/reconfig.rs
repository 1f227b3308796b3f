//! Brute-force oracle over the reconfiguration graph `R_ell(G)`.
//!
//! The proper colorings are enumerated once, in lexicographic order, into a
//! sorted vector of packed keys; a state is found again by binary search. BFS
//! generates single-vertex recolorings on the fly.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{chromatic_number, enumerate_colorings, find_frozen_coloring_budgeted,
    frozen_unchecked, Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on the number of colorings the oracle will materialize.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// A start coloring followed by single-vertex recolorings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecoloringPath {
    pub start: Coloring,
    pub steps: Vec<(usize, Color)>,
}

impl RecoloringPath {
    pub fn empty(start: Coloring) -> Self {
        RecoloringPath { start, steps: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The final coloring. Does not check validity.
    pub fn end(&self) -> Coloring {
        let mut c = self.start.clone();
        for &(v, color) in &self.steps {
            c.colors[v] = color;
        }
        c
    }

    /// Recolor counts per vertex.
    pub fn counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.start.len()];
        for &(v, _) in &self.steps {
            counts[v] += 1;
        }
        counts
    }

    /// The same walk traversed backwards.
    pub fn reversed(&self) -> RecoloringPath {
        let mut current = self.start.colors.clone();
        let mut undo = Vec::with_capacity(self.steps.len());
        for &(v, c) in &self.steps {
            undo.push((v, current[v]));
            current[v] = c;
        }
        undo.reverse();
        RecoloringPath {
            start: Coloring::new(current, self.start.ell),
            steps: undo,
        }
    }

    /// Appends `other`, which must start where `self` ends.
    pub fn concat(mut self, other: &RecoloringPath) -> RecoloringPath {
        debug_assert_eq!(self.end().colors, other.start.colors);
        self.steps.extend_from_slice(&other.steps);
        self
    }
}

/// Outcome of [`verify_path`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathStats {
    pub length: usize,
    pub counts: Vec<usize>,
    pub max_count: usize,
}

/// Checks that every prefix is a proper coloring and that no step is a
/// no-op; returns the per-vertex recolor counts.
pub fn verify_path(g: &Graph, p: &RecoloringPath) -> Result<PathStats> {
    p.start.validate(g)?;
    let mut colors = p.start.colors.clone();
    let mut counts = vec![0; g.n()];
    for (step, &(vertex, color)) in p.steps.iter().enumerate() {
        if vertex >= g.n() {
            return Err(Error::VertexOutOfRange { vertex, n: g.n() });
        }
        if color == 0 || color > p.start.ell {
            return Err(Error::ColorOutOfPalette { vertex, color, ell: p.start.ell });
        }
        if colors[vertex] == color {
            return Err(Error::NoOpStep { step, vertex, color });
        }
        if let Some(&neighbor) = g.neighbors(vertex).iter().find(|&&u| colors[u] == color) {
            return Err(Error::StepConflict { step, vertex, color, neighbor });
        }
        colors[vertex] = color;
        counts[vertex] += 1;
    }
    let max_count = counts.iter().copied().max().unwrap_or(0);
    Ok(PathStats {
        length: p.steps.len(),
        counts,
        max_count,
    })
}

/// [`verify_path`] plus a per-vertex bound.
pub fn check_bound(g: &Graph, p: &RecoloringPath, bound: usize) -> Result<PathStats> {
    let stats = verify_path(g, p)?;
    if let Some((vertex, &count)) = stats.counts.iter().enumerate().find(|(_, &c)| c > bound) {
        return Err(Error::BoundViolated { vertex, count, bound });
    }
    Ok(stats)
}

/// All proper colorings of `G` over `1..=ell`, packed and sorted.
pub struct StateSpace<'a> {
    g: &'a Graph,
    ell: usize,
    bits: u32,
    states: Vec<u128>,
}

impl<'a> StateSpace<'a> {
    /// Enumerates the colorings; fails with `BudgetExceeded` past `budget`.
    pub fn build(g: &'a Graph, ell: usize, budget: usize) -> Result<Self> {
        let bits = usize::BITS - ell.saturating_sub(1).leading_zeros();
        let bits = bits.max(1);
        if (g.n() as u32) * bits > 128 {
            return Err(Error::BudgetExceeded { budget });
        }
        let mut states = Vec::new();
        let mut it = enumerate_colorings(g, ell);
        while let Some(c) = it.next_slice() {
            if states.len() == budget {
                return Err(Error::BudgetExceeded { budget });
            }
            states.push(pack(c, bits));
        }
        Ok(StateSpace { g, ell, bits, states })
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn coloring(&self, index: usize) -> Coloring {
        Coloring::new(unpack(self.states[index], self.g.n(), self.bits), self.ell)
    }

    pub fn index_of(&self, colors: &[Color]) -> Option<usize> {
        if colors.len() != self.g.n() || colors.iter().any(|&c| c == 0 || c > self.ell) {
            return None;
        }
        self.states.binary_search(&pack(colors, self.bits)).ok()
    }

    /// Calls `visit(j, v, c)` for every neighbor `j` of state `i`, reached by
    /// recoloring `v` with `c`.
    fn for_each_neighbor(&self, i: usize, mut visit: impl FnMut(usize, usize, Color)) {
        let n = self.g.n();
        let key = self.states[i];
        let mask = (1u128 << self.bits) - 1;
        let color_at = |v: usize| ((key >> shift(v, n, self.bits)) & mask) as usize + 1;
        for v in 0..n {
            let own = color_at(v);
            let s = shift(v, n, self.bits);
            for c in 1..=self.ell {
                if c == own || self.g.neighbors(v).iter().any(|&u| color_at(u) == c) {
                    continue;
                }
                let next = (key & !(mask << s)) | (((c - 1) as u128) << s);
                let j = self
                    .states
                    .binary_search(&next)
                    .expect("neighbor of a proper coloring is enumerated");
                visit(j, v, c);
            }
        }
    }

    /// BFS distances from `source`; unreachable states get `u32::MAX`.
    pub fn distances(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.len()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(i) = queue.pop_front() {
            let d = dist[i] + 1;
            self.for_each_neighbor(i, |j, _, _| {
                if dist[j] == u32::MAX {
                    dist[j] = d;
                    queue.push_back(j);
                }
            });
        }
        dist
    }

    /// Verdict from a BFS rooted at the lexicographically least coloring.
    pub fn connectivity(&self) -> Connectivity {
        if self.is_empty() {
            return Connectivity { connected: true, witness: None };
        }
        let dist = self.distances(0);
        match dist.iter().position(|&d| d == u32::MAX) {
            None => Connectivity { connected: true, witness: None },
            Some(other) => {
                let a = self.coloring(0);
                let b = self.coloring(other);
                let witness = if frozen_unchecked(self.g, &a.colors, self.ell) {
                    Witness::Frozen { coloring: a }
                } else if frozen_unchecked(self.g, &b.colors, self.ell) {
                    Witness::Frozen { coloring: b }
                } else {
                    Witness::Separated { a, b }
                };
                Connectivity { connected: false, witness: Some(witness) }
            }
        }
    }

    /// Exact diameter by BFS from every color-order-canonical source.
    pub fn diameter(&self) -> Result<usize> {
        if self.connectivity().connected {
            let n = self.g.n();
            let sources: Vec<usize> = (0..self.len())
                .filter(|&i| is_canonical(&unpack(self.states[i], n, self.bits)))
                .collect();
            let ecc = sources
                .par_iter()
                .map(|&s| self.distances(s).into_iter().max().unwrap_or(0))
                .max()
                .unwrap_or(0);
            Ok(ecc as usize)
        } else {
            Err(Error::Disconnected)
        }
    }

    /// A shortest path between two states, or `None` when separated.
    pub fn shortest_path(&self, from: usize, to: usize) -> Option<RecoloringPath> {
        let mut parent: Vec<Option<(usize, usize, Color)>> = vec![None; self.len()];
        let mut seen = vec![false; self.len()];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(i) = queue.pop_front() {
            if i == to {
                break;
            }
            self.for_each_neighbor(i, |j, v, c| {
                if !seen[j] {
                    seen[j] = true;
                    parent[j] = Some((i, v, c));
                    queue.push_back(j);
                }
            });
        }
        if !seen[to] {
            return None;
        }
        let mut steps = Vec::new();
        let mut at = to;
        while let Some((prev, v, c)) = parent[at] {
            steps.push((v, c));
            at = prev;
        }
        steps.reverse();
        Some(RecoloringPath {
            start: self.coloring(from),
            steps,
        })
    }

    /// Indices of the colorings in the component of `index`.
    pub fn component_of(&self, index: usize) -> Vec<usize> {
        let dist = self.distances(index);
        (0..self.len()).filter(|&i| dist[i] != u32::MAX).collect()
    }
}

fn shift(v: usize, n: usize, bits: u32) -> u32 {
    bits * (n - 1 - v) as u32
}

fn pack(colors: &[Color], bits: u32) -> u128 {
    colors
        .iter()
        .fold(0u128, |acc, &c| (acc << bits) | (c - 1) as u128)
}

fn unpack(key: u128, n: usize, bits: u32) -> Vec<Color> {
    let mask = (1u128 << bits) - 1;
    (0..n)
        .map(|v| ((key >> shift(v, n, bits)) & mask) as usize + 1)
        .collect()
}

/// First occurrences of colors appear in increasing order `1, 2, 3, ...`.
fn is_canonical(colors: &[Color]) -> bool {
    let mut next = 1;
    for &c in colors {
        if c == next {
            next += 1;
        } else if c > next {
            return false;
        }
    }
    true
}

/// Evidence that `R_ell(G)` is disconnected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    /// An isolated coloring.
    Frozen { coloring: Coloring },
    /// Two colorings in different components.
    Separated { a: Coloring, b: Coloring },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Connectivity {
    pub connected: bool,
    pub witness: Option<Witness>,
}

/// Whether `R_ell(G)` is connected, with a witness when it is not.
///
/// When every vertex could see all `ell` colors, a bounded frozen-coloring
/// search runs first: a frozen coloring settles the question without
/// enumerating the state space.
pub fn reconfig_connected(g: &Graph, ell: usize, budget: usize) -> Result<Connectivity> {
    if ell >= 2 && g.n() > 0 && g.min_degree() + 1 >= ell {
        if let Ok(Some(frozen)) = find_frozen_coloring_budgeted(g, ell, 20_000) {
            return Ok(Connectivity {
                connected: false,
                witness: Some(Witness::Frozen { coloring: frozen }),
            });
        }
    }
    let space = StateSpace::build(g, ell, budget)?;
    if space.is_empty() {
        return Err(Error::NotColorable(ell));
    }
    Ok(space.connectivity())
}

/// The colorings reachable from `c`.
pub fn component_of(g: &Graph, c: &Coloring, budget: usize) -> Result<Vec<Coloring>> {
    c.validate(g)?;
    let space = StateSpace::build(g, c.ell, budget)?;
    let start = space.index_of(&c.colors).expect("proper coloring is enumerated");
    Ok(space.component_of(start).into_iter().map(|i| space.coloring(i)).collect())
}

pub fn reconfig_diameter(g: &Graph, ell: usize, budget: usize) -> Result<usize> {
    let space = StateSpace::build(g, ell, budget)?;
    if space.is_empty() {
        return Err(Error::NotColorable(ell));
    }
    space.diameter()
}

/// A shortest path from `a` to `b` in `R_ell(G)`, `ell` taken from `a`.
pub fn shortest_recoloring_path(
    g: &Graph,
    a: &Coloring,
    b: &Coloring,
    budget: usize,
) -> Result<Option<RecoloringPath>> {
    a.validate(g)?;
    b.with_ell(a.ell).validate(g)?;
    if a.colors == b.colors {
        return Ok(Some(RecoloringPath::empty(a.clone())));
    }
    let space = StateSpace::build(g, a.ell, budget)?;
    let from = space.index_of(&a.colors).expect("proper coloring is enumerated");
    let to = space.index_of(&b.colors).expect("proper coloring is enumerated");
    Ok(space.shortest_path(from, to))
}

/// One row of a [`MixingReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MixingEntry {
    pub ell: usize,
    /// Number of proper `ell`-colorings; absent when over budget.
    pub colorings: Option<usize>,
    pub connected: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diameter: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Set when `connected` comes from the `(Δ+2)`-mixing fact rather than
    /// from search.
    #[serde(skip_serializing_if = "std::ops::Not::not", default)]
    pub inferred: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MixingReport {
    pub chromatic_number: usize,
    pub max_degree: usize,
    pub entries: Vec<MixingEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

#[derive(Clone, Copy, Debug)]
pub struct MixingOptions {
    pub budget: usize,
    pub diameter: bool,
}

impl Default for MixingOptions {
    fn default() -> Self {
        MixingOptions {
            budget: DEFAULT_BUDGET,
            diameter: true,
        }
    }
}

/// Connectivity of `R_ell(G)` for every `ell` in `[chi+1, ell_max]`.
pub fn mixing_report(g: &Graph, ell_max: usize, opts: MixingOptions) -> MixingReport {
    let chi = chromatic_number(g);
    let delta = g.max_degree();
    let mut notes = Vec::new();
    if ell_max > delta + 2 {
        notes.push(format!(
            "every graph is (Δ+2)-mixing; ell > {} is connected regardless",
            delta + 2
        ));
    }
    let entries = (chi + 1..=ell_max)
        .map(|ell| {
            let mut entry = MixingEntry {
                ell,
                colorings: None,
                connected: None,
                diameter: None,
                witness: None,
                inferred: false,
            };
            match StateSpace::build(g, ell, opts.budget) {
                Ok(space) => {
                    let conn = space.connectivity();
                    entry.colorings = Some(space.len());
                    entry.connected = Some(conn.connected);
                    entry.witness = conn.witness;
                    if conn.connected && opts.diameter {
                        entry.diameter = space.diameter().ok();
                    }
                }
                Err(_) if ell >= delta + 2 => {
                    entry.connected = Some(true);
                    entry.inferred = true;
                }
                Err(_) => {
                    if let Ok(conn) = reconfig_connected(g, ell, opts.budget) {
                        entry.connected = Some(conn.connected);
                        entry.witness = conn.witness;
                    } else {
                        notes.push(format!("ell = {ell}: state budget {} exceeded", opts.budget));
                    }
                }
            }
            entry
        })
        .collect();
    MixingReport {
        chromatic_number: chi,
        max_degree: delta,
        entries,
        notes,
    }
}
