//! Proper colorings, chromatic number and frozen colorings.
//!
//! Colors are 1-based: an `ell`-coloring uses colors from `1..=ell`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reconfig::RecoloringPath;

pub type Color = usize;

/// A per-vertex color vector together with the palette size `ell`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    pub ell: usize,
    pub colors: Vec<Color>,
}

impl Coloring {
    pub fn new(colors: Vec<Color>, ell: usize) -> Self {
        Coloring { ell, colors }
    }

    /// Palette size taken as the largest color used.
    pub fn from_colors(colors: Vec<Color>) -> Self {
        let ell = colors.iter().copied().max().unwrap_or(0);
        Coloring { ell, colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn used_colors(&self) -> BTreeSet<Color> {
        self.colors.iter().copied().collect()
    }

    pub fn num_colors_used(&self) -> usize {
        self.used_colors().len()
    }

    /// Same colors over a different palette size.
    pub fn with_ell(&self, ell: usize) -> Coloring {
        Coloring::new(self.colors.clone(), ell)
    }

    /// The colors of `vertices`, in that order.
    pub fn restrict(&self, vertices: &[usize]) -> Coloring {
        Coloring::new(vertices.iter().map(|&v| self.colors[v]).collect(), self.ell)
    }

    /// Checks size, palette and properness.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        check_palette(g, self)?;
        match first_conflict(g, &self.colors) {
            Some((u, v)) => Err(Error::Improper(u, v)),
            None => Ok(()),
        }
    }
}

fn check_palette(g: &Graph, c: &Coloring) -> Result<()> {
    if c.colors.len() != g.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            got: c.colors.len(),
        });
    }
    for (vertex, &color) in c.colors.iter().enumerate() {
        if color == 0 || color > c.ell {
            return Err(Error::ColorOutOfPalette { vertex, color, ell: c.ell });
        }
    }
    Ok(())
}

fn first_conflict(g: &Graph, colors: &[Color]) -> Option<(usize, usize)> {
    g.edges().into_iter().find(|&(u, v)| colors[u] == colors[v])
}

pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    check_palette(g, c)?;
    Ok(first_conflict(g, &c.colors).is_none())
}

/// Canonical partition into color classes: each class sorted, classes
/// ordered by smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColorPartition {
    pub classes: Vec<Vec<usize>>,
}

pub fn color_partition(c: &Coloring) -> ColorPartition {
    let mut by_color: BTreeMap<Color, Vec<usize>> = BTreeMap::new();
    for (v, &col) in c.colors.iter().enumerate() {
        by_color.entry(col).or_default().push(v);
    }
    let mut classes: Vec<Vec<usize>> = by_color.into_values().collect();
    classes.sort();
    ColorPartition { classes }
}

/// Whether `c1` and `c2` differ only by a renaming of colors.
pub fn partition_isomorphic(c1: &Coloring, c2: &Coloring) -> Result<bool> {
    if c1.len() != c2.len() {
        return Err(Error::SizeMismatch {
            expected: c1.len(),
            got: c2.len(),
        });
    }
    let mut forward = BTreeMap::new();
    let mut backward = BTreeMap::new();
    for (&a, &b) in c1.colors.iter().zip(&c2.colors) {
        if *forward.entry(a).or_insert(b) != b || *backward.entry(b).or_insert(a) != a {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact chromatic number.
pub fn chromatic_number(g: &Graph) -> usize {
    optimal_coloring(g).num_colors_used()
}

/// A `chi(G)`-coloring using colors `1..=chi`.
///
/// Components are colored independently. A co-disconnected component is
/// split into its co-components, which receive disjoint palettes; other
/// pieces go to DSATUR branch and bound seeded with a maximum clique.
pub fn optimal_coloring(g: &Graph) -> Coloring {
    let mut colors = vec![0; g.n()];
    let mut chi = 0;
    for comp in g.components() {
        let sub = g.induced(&comp);
        let local = color_co_components(&sub);
        for (i, &v) in comp.iter().enumerate() {
            colors[v] = local[i];
        }
        chi = chi.max(local.iter().copied().max().unwrap_or(0));
    }
    Coloring::new(colors, chi)
}

fn color_co_components(g: &Graph) -> Vec<Color> {
    let co = g.complement().components();
    if co.len() == 1 {
        return color_connected(g);
    }
    let mut colors = vec![0; g.n()];
    let mut offset = 0;
    for part in co {
        let sub = g.induced(&part);
        let local = optimal_coloring(&sub);
        for (i, &v) in part.iter().enumerate() {
            colors[v] = local.colors[i] + offset;
        }
        offset += local.ell;
    }
    colors
}

fn color_connected(g: &Graph) -> Vec<Color> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let lower = g.clique_number();
    let upper = dsatur_greedy(g);
    let mut best = upper;
    let mut k = best.iter().copied().max().unwrap_or(0);
    while k > lower {
        match k_coloring(g, k - 1) {
            Some(c) => {
                best = c;
                k -= 1;
            }
            None => break,
        }
    }
    best
}

fn dsatur_pick(g: &Graph, colors: &[Color]) -> Option<usize> {
    let mut pick: Option<(usize, usize, usize)> = None;
    for v in (0..g.n()).filter(|&v| colors[v] == 0) {
        let mut seen: Vec<Color> = g
            .neighbors(v)
            .iter()
            .map(|&u| colors[u])
            .filter(|&c| c != 0)
            .collect();
        seen.sort_unstable();
        seen.dedup();
        let key = (seen.len(), g.degree(v));
        if pick.is_none_or(|(s, d, _)| key > (s, d)) {
            pick = Some((key.0, key.1, v));
        }
    }
    pick.map(|(_, _, v)| v)
}

fn dsatur_greedy(g: &Graph) -> Vec<Color> {
    let mut colors = vec![0; g.n()];
    while let Some(v) = dsatur_pick(g, &colors) {
        colors[v] = (1..)
            .find(|&c| g.neighbors(v).iter().all(|&u| colors[u] != c))
            .unwrap();
    }
    colors
}

/// A proper `k`-coloring, found by DSATUR backtracking with new colors
/// introduced one at a time.
pub fn k_coloring(g: &Graph, k: usize) -> Option<Vec<Color>> {
    if g.n() == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    let mut colors = vec![0; g.n()];
    if dsatur_search(g, k, &mut colors, 0) {
        Some(colors)
    } else {
        None
    }
}

fn dsatur_search(g: &Graph, k: usize, colors: &mut [Color], max_used: usize) -> bool {
    let Some(v) = dsatur_pick(g, colors) else {
        return true;
    };
    for c in 1..=k.min(max_used + 1) {
        if g.neighbors(v).iter().all(|&u| colors[u] != c) {
            colors[v] = c;
            if dsatur_search(g, k, colors, max_used.max(c)) {
                return true;
            }
        }
    }
    colors[v] = 0;
    false
}

/// All proper `ell`-colorings in lexicographic order of the color vector.
pub fn enumerate_colorings(g: &Graph, ell: usize) -> ColoringIter<'_> {
    ColoringIter {
        g,
        ell,
        colors: vec![0; g.n()],
        depth: 0,
        done: ell == 0 && g.n() > 0,
    }
}

/// Explicit-stack lexicographic backtracking; see [`enumerate_colorings`].
pub struct ColoringIter<'a> {
    g: &'a Graph,
    ell: usize,
    colors: Vec<Color>,
    depth: usize,
    done: bool,
}

impl ColoringIter<'_> {
    /// Advances to the next coloring and returns it as a slice.
    pub fn next_slice(&mut self) -> Option<&[Color]> {
        if self.done {
            return None;
        }
        let n = self.g.n();
        if n == 0 {
            self.done = true;
            return Some(&self.colors);
        }
        if self.depth == n {
            // Resume below the last emitted coloring.
            self.depth = n - 1;
        }
        loop {
            let v = self.depth;
            let mut c = self.colors[v] + 1;
            while c <= self.ell
                && self.g.neighbors(v).iter().any(|&u| u < v && self.colors[u] == c)
            {
                c += 1;
            }
            if c <= self.ell {
                self.colors[v] = c;
                if v + 1 == n {
                    self.depth = n;
                    return Some(&self.colors);
                }
                self.depth += 1;
            } else {
                self.colors[v] = 0;
                if v == 0 {
                    self.done = true;
                    return None;
                }
                self.depth -= 1;
            }
        }
    }
}

impl Iterator for ColoringIter<'_> {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        let ell = self.ell;
        self.next_slice().map(|c| Coloring::new(c.to_vec(), ell))
    }
}

/// Lexicographically least proper `ell`-coloring.
pub fn lex_least_coloring(g: &Graph, ell: usize) -> Option<Coloring> {
    enumerate_colorings(g, ell).next()
}

/// Every vertex sees all `ell` colors in its closed neighborhood.
pub fn is_frozen(g: &Graph, c: &Coloring) -> Result<bool> {
    c.validate(g)?;
    Ok(frozen_unchecked(g, &c.colors, c.ell))
}

pub(crate) fn frozen_unchecked(g: &Graph, colors: &[Color], ell: usize) -> bool {
    let mut seen = vec![usize::MAX; ell + 1];
    (0..g.n()).all(|v| {
        let mut count = 0;
        for &u in std::iter::once(&v).chain(g.neighbors(v)) {
            if seen[colors[u]] != v {
                seen[colors[u]] = v;
                count += 1;
            }
        }
        count == ell
    })
}

/// A frozen `ell`-coloring, or `None` when none exists.
pub fn find_frozen_coloring(g: &Graph, ell: usize) -> Option<Coloring> {
    find_frozen_coloring_budgeted(g, ell, u64::MAX).unwrap_or(None)
}

/// As [`find_frozen_coloring`] but gives up with `Err(BudgetExceeded)`
/// after `nodes` search nodes.
pub fn find_frozen_coloring_budgeted(g: &Graph, ell: usize, nodes: u64) -> Result<Option<Coloring>> {
    let n = g.n();
    if ell == 0 || n == 0 {
        return Ok(None);
    }
    if g.min_degree() + 1 < ell {
        return Ok(None);
    }
    let mut search = FrozenSearch {
        g,
        ell,
        colors: vec![0; n],
        count: vec![vec![0; ell + 1]; n],
        missing: vec![ell; n],
        unassigned: (0..n).map(|v| g.degree(v) + 1).collect(),
        nodes_left: nodes,
    };
    match search.run(0) {
        Some(true) => Ok(Some(Coloring::new(search.colors, ell))),
        Some(false) => Ok(None),
        None => Err(Error::BudgetExceeded {
            budget: usize::try_from(nodes).unwrap_or(usize::MAX),
        }),
    }
}

struct FrozenSearch<'a> {
    g: &'a Graph,
    ell: usize,
    colors: Vec<Color>,
    /// `count[v][c]`: vertices of `N[v]` currently colored `c`.
    count: Vec<Vec<usize>>,
    /// Colors absent from `N[v]`.
    missing: Vec<usize>,
    /// Uncolored vertices of `N[v]`.
    unassigned: Vec<usize>,
    nodes_left: u64,
}

impl FrozenSearch<'_> {
    fn closed(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(v).chain(self.g.neighbors(v).iter().copied())
    }

    fn feasible(&self, v: usize, c: Color) -> bool {
        self.g.neighbors(v).iter().all(|&u| self.colors[u] != c)
    }

    /// `None` on budget exhaustion.
    fn run(&mut self, max_used: usize) -> Option<bool> {
        if self.nodes_left == 0 {
            return None;
        }
        self.nodes_left -= 1;
        let mut pick: Option<(usize, usize)> = None;
        for v in (0..self.g.n()).filter(|&v| self.colors[v] == 0) {
            let options = (1..=self.ell).filter(|&c| self.feasible(v, c)).count();
            if options == 0 {
                return Some(false);
            }
            if pick.is_none_or(|(best, _)| options < best) {
                pick = Some((options, v));
            }
        }
        let Some((_, v)) = pick else {
            return Some(self.missing.iter().all(|&m| m == 0));
        };
        for c in 1..=self.ell.min(max_used + 1) {
            if !self.feasible(v, c) {
                continue;
            }
            self.assign(v, c);
            let ok = self.closed(v).all(|u| self.missing[u] <= self.unassigned[u]);
            if ok {
                match self.run(max_used.max(c)) {
                    Some(true) => return Some(true),
                    None => return None,
                    Some(false) => {}
                }
            }
            self.unassign(v, c);
        }
        Some(false)
    }

    fn assign(&mut self, v: usize, c: Color) {
        self.colors[v] = c;
        for u in std::iter::once(v).chain(self.g.neighbors(v).iter().copied()) {
            self.unassigned[u] -= 1;
            if self.count[u][c] == 0 {
                self.missing[u] -= 1;
            }
            self.count[u][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: Color) {
        self.colors[v] = 0;
        for u in std::iter::once(v).chain(self.g.neighbors(v).iter().copied()) {
            self.unassigned[u] += 1;
            self.count[u][c] -= 1;
            if self.count[u][c] == 0 {
                self.missing[u] += 1;
            }
        }
    }
}

/// Transports a path that only uses colors in `s` onto `s_star`.
///
/// Colors in `s ∩ s_star` are kept and every other color `c` becomes
/// `f[c]`, where `f` must be a bijection `s \ s_star -> s_star \ s`.
/// Per-vertex recolor counts are unchanged.
pub fn remap_colors(
    path: &RecoloringPath,
    s: &BTreeSet<Color>,
    s_star: &BTreeSet<Color>,
    f: &BTreeMap<Color, Color>,
) -> Result<RecoloringPath> {
    if s.len() != s_star.len() {
        return Err(Error::InvalidColorMap(format!(
            "|S| = {} but |S*| = {}",
            s.len(),
            s_star.len()
        )));
    }
    let domain: BTreeSet<Color> = s.difference(s_star).copied().collect();
    let codomain: BTreeSet<Color> = s_star.difference(s).copied().collect();
    let keys: BTreeSet<Color> = f.keys().copied().collect();
    let values: BTreeSet<Color> = f.values().copied().collect();
    if keys != domain || values != codomain || values.len() != f.len() {
        return Err(Error::InvalidColorMap(
            "f must be a bijection from S \\ S* onto S* \\ S".into(),
        ));
    }
    let map = |c: Color| -> Result<Color> {
        if !s.contains(&c) {
            Err(Error::ColorNotInSet(c))
        } else {
            Ok(f.get(&c).copied().unwrap_or(c))
        }
    };
    let start = path
        .start
        .colors
        .iter()
        .map(|&c| map(c))
        .collect::<Result<Vec<_>>>()?;
    let steps = path
        .steps
        .iter()
        .map(|&(v, c)| Ok((v, map(c)?)))
        .collect::<Result<Vec<_>>>()?;
    let ell = path.start.ell.max(s_star.iter().copied().max().unwrap_or(0));
    Ok(RecoloringPath {
        start: Coloring::new(start, ell),
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, NamedGraph as N};
    use proptest::prelude::*;

    /// Deletion–contraction value of the chromatic polynomial at `k`.
    fn chromatic_polynomial(n: usize, edges: &[(usize, usize)], k: u64) -> u64 {
        let Some(&(u, v)) = edges.first() else {
            return k.pow(n as u32);
        };
        let rest = &edges[1..];
        let deleted = chromatic_polynomial(n, rest, k);
        // Contract v into u, dropping loops and duplicates.
        let relabel = |x: usize| {
            let x = if x == v { u } else { x };
            if x > v {
                x - 1
            } else {
                x
            }
        };
        let mut contracted: Vec<(usize, usize)> = rest
            .iter()
            .map(|&(a, b)| {
                let (a, b) = (relabel(a), relabel(b));
                (a.min(b), a.max(b))
            })
            .filter(|&(a, b)| a != b)
            .collect();
        contracted.sort_unstable();
        contracted.dedup();
        deleted - chromatic_polynomial(n - 1, &contracted, k)
    }

    fn small_graph() -> impl Strategy<Value = Graph> {
        (1usize..=7).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut i = 0;
                for u in 0..n {
                    for v in (u + 1)..n {
                        if bits[i] {
                            edges.push((u, v));
                        }
                        i += 1;
                    }
                }
                Graph::new(n, &edges).unwrap()
            })
        })
    }

    #[test]
    fn properness() {
        let k2 = N::Complete(2).build();
        assert!(is_proper(&k2, &Coloring::new(vec![1, 2], 2)).unwrap());
        assert!(!is_proper(&k2, &Coloring::new(vec![1, 1], 2)).unwrap());
        let c6 = N::Cycle(6).build();
        assert!(is_proper(&c6, &Coloring::new(vec![1, 2, 3, 1, 2, 3], 3)).unwrap());
        assert!(matches!(
            is_proper(&k2, &Coloring::new(vec![1], 2)),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&N::GraphF.build()), 3);
        assert_eq!(chromatic_number(&N::Cycle(6).build()), 2);
        assert_eq!(chromatic_number(&N::Cycle(7).build()), 3);
        assert_eq!(chromatic_number(&N::Prism3Star.build()), 3);
        assert_eq!(chromatic_number(&N::Figure4.build()), 7);
        assert_eq!(chromatic_number(&N::CompleteMultipartite(vec![2, 3, 1]).build()), 3);
        assert_eq!(chromatic_number(&Graph::empty(3)), 1);
        let c = optimal_coloring(&N::Figure4.build());
        assert!(c.validate(&N::Figure4.build()).is_ok());
    }

    #[test]
    fn enumeration_examples() {
        let k1 = N::Complete(1).build();
        let all: Vec<Vec<Color>> = enumerate_colorings(&k1, 2).map(|c| c.colors).collect();
        assert_eq!(all, vec![vec![1], vec![2]]);
        assert_eq!(enumerate_colorings(&N::Complete(3).build(), 3).count(), 6);
        assert_eq!(enumerate_colorings(&N::Path(3).build(), 3).count(), 12);
        assert_eq!(enumerate_colorings(&N::Complete(3).build(), 2).count(), 0);
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let g = N::Paw.build();
        let all: Vec<Vec<Color>> = enumerate_colorings(&g, 4).map(|c| c.colors).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|c| is_proper(&g, &Coloring::new(c.clone(), 4)).unwrap()));
    }

    #[test]
    fn frozen_examples() {
        for k in 3..=6 {
            let g = N::Complete(k).build();
            assert!(is_frozen(&g, &Coloring::new((1..=k).collect(), k)).unwrap());
        }
        for l in 3..=5 {
            let g = N::KllMinusMatching(l).build();
            assert!(is_frozen(&g, &catalog::kll_frozen_coloring(l)).unwrap());
        }
        let fig4 = N::Figure4.build();
        assert!(is_frozen(&fig4, &catalog::figure4_frozen_coloring()).unwrap());
        assert!(catalog::figure4_seven_coloring().validate(&fig4).is_ok());

        let c6 = N::Cycle(6).build();
        let frozen = find_frozen_coloring(&c6, 3).unwrap();
        assert!(is_frozen(&c6, &frozen).unwrap());
        assert!(partition_isomorphic(&frozen, &Coloring::new(vec![1, 2, 3, 1, 2, 3], 3)).unwrap());
        assert!(find_frozen_coloring(&N::Path(4).build(), 3).is_none());
        assert!(find_frozen_coloring(&N::Complete(3).build(), 3).is_some());
    }

    #[test]
    fn frozen_search_on_figure4() {
        let fig4 = N::Figure4.build();
        let c = find_frozen_coloring_budgeted(&fig4, 8, 1_000_000).unwrap().unwrap();
        assert!(is_frozen(&fig4, &c).unwrap());
    }

    #[test]
    fn is_frozen_rejects_improper() {
        let k2 = N::Complete(2).build();
        assert!(matches!(
            is_frozen(&k2, &Coloring::new(vec![1, 1], 2)),
            Err(Error::Improper(0, 1))
        ));
    }

    #[test]
    fn partition_isomorphism_examples() {
        let pi = |a: Vec<Color>, b: Vec<Color>| {
            partition_isomorphic(&Coloring::from_colors(a), &Coloring::from_colors(b)).unwrap()
        };
        assert!(pi(vec![1, 2, 1], vec![2, 1, 2]));
        assert!(!pi(vec![1, 2, 1], vec![1, 2, 2]));
        assert!(pi(vec![1, 2, 3], vec![3, 1, 2]));
    }

    #[test]
    fn remap_examples() {
        let path = RecoloringPath {
            start: Coloring::new(vec![1, 2], 2),
            steps: vec![],
        };
        let s: BTreeSet<Color> = [1, 2].into();
        let same = remap_colors(&path, &s, &s, &BTreeMap::new()).unwrap();
        assert_eq!(same, path);

        let path = RecoloringPath {
            start: Coloring::new(vec![1, 2], 3),
            steps: vec![(0, 3), (1, 1), (0, 2)],
        };
        let s: BTreeSet<Color> = [1, 2, 3].into();
        let s_star: BTreeSet<Color> = [3, 4, 5].into();
        let f: BTreeMap<Color, Color> = [(1, 4), (2, 5)].into();
        let out = remap_colors(&path, &s, &s_star, &f).unwrap();
        assert_eq!(out.start.colors, vec![4, 5]);
        assert_eq!(out.steps, vec![(0, 3), (1, 4), (0, 5)]);

        let narrow: BTreeSet<Color> = [1, 2].into();
        let narrow_star: BTreeSet<Color> = [3, 4].into();
        let f: BTreeMap<Color, Color> = [(1, 3), (2, 4)].into();
        assert_eq!(
            remap_colors(&path, &narrow, &narrow_star, &f),
            Err(Error::ColorNotInSet(3))
        );
    }

    proptest! {
        #[test]
        fn enumeration_matches_chromatic_polynomial(g in small_graph(), ell in 1u64..=4) {
            let count = enumerate_colorings(&g, ell as usize).count() as u64;
            prop_assert_eq!(count, chromatic_polynomial(g.n(), &g.edges(), ell));
        }

        #[test]
        fn chromatic_number_is_least_k(g in small_graph()) {
            let chi = chromatic_number(&g);
            prop_assert!(k_coloring(&g, chi).is_some());
            prop_assert!(chi == 0 || k_coloring(&g, chi - 1).is_none());
            prop_assert!(optimal_coloring(&g).validate(&g).is_ok());
        }

        #[test]
        fn join_adds_chromatic_numbers(a in small_graph(), b in small_graph()) {
            let j = a.join(&b);
            prop_assert_eq!(chromatic_number(&j), chromatic_number(&a) + chromatic_number(&b));
        }

        #[test]
        fn frozen_search_agrees_with_enumeration(g in small_graph(), ell in 1usize..=4) {
            let found = find_frozen_coloring(&g, ell);
            let exists = enumerate_colorings(&g, ell)
                .any(|c| frozen_unchecked(&g, &c.colors, ell));
            prop_assert_eq!(found.is_some(), exists);
            if let Some(c) = found {
                prop_assert!(is_frozen(&g, &c).unwrap());
            }
        }
    }
}
