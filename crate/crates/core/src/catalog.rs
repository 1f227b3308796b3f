//! Named graphs with fixed labelings.
//!
//! Graph `F` uses the labels `z, y, x, w, d, c, b, a` as vertices `0..8`
//! (see [`f_labels`]). The 3-prism star uses `v1, v2, v3, x1, y1, z1, y2,
//! z2, x2` as `0..9` (see [`prism_labels`]). The recoloring schedules in
//! [`crate::procedures`] are written against these labels.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum NamedGraph {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `n` isolated vertices.
    Empty(usize),
    CompleteMultipartite(Vec<usize>),
    /// `K_{l,l}` with a perfect matching removed.
    KllMinusMatching(usize),
    CoDiamond,
    TwoK2,
    P3PlusP1,
    CoClaw,
    Claw,
    Paw,
    Diamond,
    House,
    Banner,
    CoBanner,
    Fork,
    CoFork,
    GraphF,
    Prism3,
    Prism3Star,
    Figure4,
}

#[allow(non_upper_case_globals)]
impl NamedGraph {
    pub const FourK1: NamedGraph = NamedGraph::Empty(4);
    pub const Triangle: NamedGraph = NamedGraph::Complete(3);

    /// The eleven graphs on four vertices.
    pub fn four_vertex_graphs() -> Vec<NamedGraph> {
        use NamedGraph::*;
        vec![
            Empty(4),
            CoDiamond,
            TwoK2,
            P3PlusP1,
            CoClaw,
            Path(4),
            Claw,
            Paw,
            Cycle(4),
            Diamond,
            Complete(4),
        ]
    }

    pub fn try_build(&self) -> Result<Graph> {
        use NamedGraph::*;
        let invalid = |reason: &str| Error::InvalidParameter {
            name: self.to_string(),
            reason: reason.into(),
        };
        let g = match self {
            Path(n) => {
                if *n == 0 {
                    return Err(invalid("path needs at least one vertex"));
                }
                let edges: Vec<_> = (1..*n).map(|i| (i - 1, i)).collect();
                Graph::new(*n, &edges)?
            }
            Cycle(n) => {
                if *n < 3 {
                    return Err(invalid("cycle needs at least three vertices"));
                }
                let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
                Graph::new(*n, &edges)?
            }
            Complete(n) => {
                if *n == 0 {
                    return Err(invalid("complete graph needs at least one vertex"));
                }
                Graph::from_matrix(*n, |_, _| true)
            }
            Empty(n) => {
                if *n == 0 {
                    return Err(invalid("needs at least one vertex"));
                }
                Graph::empty(*n)
            }
            CompleteMultipartite(parts) => {
                if parts.len() < 2 || parts.contains(&0) {
                    return Err(invalid("need at least two non-empty parts"));
                }
                let mut part_of = Vec::new();
                for (i, &size) in parts.iter().enumerate() {
                    part_of.extend(std::iter::repeat_n(i, size));
                }
                Graph::from_matrix(part_of.len(), |u, v| part_of[u] != part_of[v])
            }
            KllMinusMatching(l) => {
                if *l == 0 {
                    return Err(invalid("side size must be positive"));
                }
                let l = *l;
                Graph::from_matrix(2 * l, |u, v| (u < l) != (v < l) && u % l != v % l)
            }
            CoDiamond => Graph::new(4, &[(0, 1)])?,
            TwoK2 => Graph::new(4, &[(0, 1), (2, 3)])?,
            P3PlusP1 => Graph::new(4, &[(0, 1), (1, 2)])?,
            CoClaw => Graph::new(4, &[(0, 1), (1, 2), (0, 2)])?,
            Claw => Graph::new(4, &[(0, 1), (0, 2), (0, 3)])?,
            Paw => Graph::new(4, &[(0, 1), (1, 2), (0, 2), (0, 3)])?,
            Diamond => Graph::new(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])?,
            // 4-cycle 0-1-3-2 with roof vertex 4 on 2 and 3.
            House => Graph::new(5, &[(0, 1), (3, 1), (2, 3), (0, 2), (3, 4), (2, 4)])?,
            // 4-cycle 0-1-3-2 with pendant 4 on 3.
            Banner => Graph::new(5, &[(2, 0), (0, 1), (1, 3), (2, 3), (3, 4)])?,
            // Triangle 0,1,2 with the path 2-3-4 hanging off it.
            CoBanner => Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)])?,
            // Path 0-1-2, with 2 carrying two leaves 3 and 4.
            Fork => Graph::new(5, &[(0, 1), (2, 1), (2, 3), (2, 4)])?,
            // Diamond 0,1,2,3 (missing edge 0-3) plus pendant 4 on 3.
            CoFork => Graph::new(5, &[(1, 0), (2, 0), (1, 2), (1, 3), (3, 2), (3, 4)])?,
            GraphF => Graph::new(8, &GRAPH_F_EDGES)?,
            Prism3 => Graph::new(6, &PRISM_EDGES)?,
            Prism3Star => Graph::new(9, &PRISM_STAR_EDGES)?,
            Figure4 => Graph::new(16, &figure4_edges())?,
        };
        Ok(g)
    }

    /// Builds the graph, panicking on invalid parameters.
    pub fn build(&self) -> Graph {
        self.try_build()
            .unwrap_or_else(|e| panic!("invalid catalog graph {self}: {e}"))
    }

    /// The complementary catalog entry for the pairs the classes use.
    pub fn complement_name(&self) -> Option<NamedGraph> {
        use NamedGraph::*;
        Some(match self {
            Claw => CoClaw,
            CoClaw => Claw,
            Diamond => CoDiamond,
            CoDiamond => Diamond,
            TwoK2 => Cycle(4),
            Cycle(4) => TwoK2,
            Empty(4) => Complete(4),
            Complete(4) => Empty(4),
            Fork => CoFork,
            CoFork => Fork,
            Banner => CoBanner,
            CoBanner => Banner,
            Path(4) => Path(4),
            Paw => P3PlusP1,
            P3PlusP1 => Paw,
            Path(5) => House,
            House => Path(5),
            Cycle(5) => Cycle(5),
            _ => return None,
        })
    }
}

/// Spec op `catalog`: the named graph or an error for bad parameters.
pub fn catalog(name: &NamedGraph) -> Result<Graph> {
    name.try_build()
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use NamedGraph::*;
        match self {
            Path(n) => write!(f, "P{n}"),
            Cycle(n) => write!(f, "C{n}"),
            Complete(n) => write!(f, "K{n}"),
            Empty(n) => write!(f, "{n}K1"),
            CompleteMultipartite(parts) => {
                let s: Vec<String> = parts.iter().map(usize::to_string).collect();
                write!(f, "K{}", s.join(","))
            }
            KllMinusMatching(l) => write!(f, "K{l},{l}-M"),
            CoDiamond => f.write_str("co-diamond"),
            TwoK2 => f.write_str("2K2"),
            P3PlusP1 => f.write_str("P3+P1"),
            CoClaw => f.write_str("co-claw"),
            Claw => f.write_str("claw"),
            Paw => f.write_str("paw"),
            Diamond => f.write_str("diamond"),
            House => f.write_str("house"),
            Banner => f.write_str("banner"),
            CoBanner => f.write_str("co-banner"),
            Fork => f.write_str("fork"),
            CoFork => f.write_str("co-fork"),
            GraphF => f.write_str("F"),
            Prism3 => f.write_str("prism"),
            Prism3Star => f.write_str("prism-star"),
            Figure4 => f.write_str("fig4"),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use NamedGraph::*;
        let unknown = || Error::UnknownGraph(s.to_string());
        let lower = s.trim().to_ascii_lowercase();
        let fixed = match lower.as_str() {
            "triangle" => Some(Complete(3)),
            "co-diamond" | "codiamond" => Some(CoDiamond),
            "2k2" => Some(TwoK2),
            "p3+p1" | "co-paw" => Some(P3PlusP1),
            "co-claw" | "coclaw" => Some(CoClaw),
            "claw" => Some(Claw),
            "paw" => Some(Paw),
            "diamond" => Some(Diamond),
            "house" => Some(House),
            "banner" => Some(Banner),
            "co-banner" | "cobanner" => Some(CoBanner),
            "fork" | "chair" => Some(Fork),
            "co-fork" | "cofork" => Some(CoFork),
            "f" | "graph-f" => Some(GraphF),
            "prism" | "prism3" | "3-prism" => Some(Prism3),
            "prism-star" | "prism3-star" | "3-prism-star" => Some(Prism3Star),
            "fig4" | "figure4" => Some(Figure4),
            _ => None,
        };
        if let Some(g) = fixed {
            return Ok(g);
        }
        let num = |t: &str| t.parse::<usize>().map_err(|_| unknown());
        let parsed = if let Some(rest) = lower.strip_suffix("k1") {
            Empty(num(rest)?)
        } else if let Some(rest) = lower.strip_prefix('p') {
            Path(num(rest)?)
        } else if let Some(rest) = lower.strip_prefix('c') {
            Cycle(num(rest)?)
        } else if let Some(rest) = lower.strip_prefix('k') {
            if let Some(body) = rest.strip_suffix("-m") {
                let parts: Vec<usize> = body.split(',').map(num).collect::<Result<_>>()?;
                match parts.as_slice() {
                    [a, b] if a == b => KllMinusMatching(*a),
                    _ => return Err(unknown()),
                }
            } else if rest.contains(',') {
                CompleteMultipartite(rest.split(',').map(num).collect::<Result<_>>()?)
            } else {
                Complete(num(rest)?)
            }
        } else {
            return Err(unknown());
        };
        parsed.try_build()?;
        Ok(parsed)
    }
}

impl From<NamedGraph> for String {
    fn from(g: NamedGraph) -> String {
        g.to_string()
    }
}

impl TryFrom<String> for NamedGraph {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Vertex labels of graph `F`.
pub mod f_labels {
    pub const Z: usize = 0;
    pub const Y: usize = 1;
    pub const X: usize = 2;
    pub const W: usize = 3;
    pub const D: usize = 4;
    pub const C: usize = 5;
    pub const B: usize = 6;
    pub const A: usize = 7;
    pub const NAMES: [&str; 8] = ["z", "y", "x", "w", "d", "c", "b", "a"];
}

/// Vertex labels of the 3-prism star.
pub mod prism_labels {
    pub const V1: usize = 0;
    pub const V2: usize = 1;
    pub const V3: usize = 2;
    pub const X1: usize = 3;
    pub const Y1: usize = 4;
    pub const Z1: usize = 5;
    pub const Y2: usize = 6;
    pub const Z2: usize = 7;
    pub const X2: usize = 8;
    pub const NAMES: [&str; 9] = ["v1", "v2", "v3", "x1", "y1", "z1", "y2", "z2", "x2"];
}

const GRAPH_F_EDGES: [(usize, usize); 12] = {
    use f_labels::*;
    [
        (Z, Y),
        (Z, X),
        (Z, D),
        (Y, W),
        (Y, C),
        (X, W),
        (X, B),
        (W, A),
        (D, C),
        (D, A),
        (C, B),
        (B, A),
    ]
};

const PRISM_EDGES: [(usize, usize); 9] = {
    use prism_labels::*;
    [
        (V1, V2),
        (V1, V3),
        (V2, V3),
        (V1, X1),
        (Y1, V2),
        (V3, Z1),
        (X1, Y1),
        (X1, Z1),
        (Y1, Z1),
    ]
};

const PRISM_STAR_EDGES: [(usize, usize); 18] = {
    use prism_labels::*;
    [
        (V1, V2),
        (V1, V3),
        (V2, V3),
        (V1, X1),
        (Y1, V2),
        (V3, Z1),
        (X1, Y1),
        (X1, Z1),
        (Y1, Z1),
        (Z2, Y2),
        (Z2, X2),
        (Y2, X2),
        (Y2, V2),
        (Y2, X1),
        (Z2, V3),
        (Y1, Z2),
        (Z1, X2),
        (V1, X2),
    ]
};

/// Chords transcribed from the drawing commands of the 16-vertex figure.
/// The figure's circle supplies the rim `i ~ i+1 (mod 16)`, added in
/// [`figure4_edges`]. Pinned by [`FIGURE4_CHECKSUM`].
const FIGURE4_CHORDS: [(usize, usize); 84] = [
    (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (0, 7), (0, 9), (0, 11), (0, 12), (0, 13), (0, 14),
    (1, 3), (1, 4), (1, 5), (1, 7), (1, 8), (1, 10), (1, 12), (1, 13), (1, 14), (1, 15),
    (2, 4), (2, 5), (2, 6), (2, 8), (2, 9), (2, 11), (2, 13), (2, 14), (2, 15),
    (3, 5), (3, 6), (3, 7), (3, 9), (3, 10), (3, 12), (3, 14), (3, 15),
    (4, 6), (4, 7), (4, 8), (4, 10), (4, 11), (4, 13), (4, 14), (4, 15),
    (5, 7), (5, 8), (5, 9), (5, 10), (5, 11), (5, 12), (5, 14),
    (6, 8), (6, 9), (6, 10), (6, 12), (6, 13), (6, 15),
    (7, 9), (7, 10), (7, 11), (7, 13), (7, 14),
    (8, 10), (8, 11), (8, 12), (8, 14), (8, 15),
    (9, 11), (9, 12), (9, 13), (9, 14), (9, 15),
    (10, 12), (10, 13), (10, 14), (10, 15),
    (11, 13), (11, 14), (11, 15),
    (12, 14), (12, 15),
    (13, 15),
];

fn figure4_edges() -> Vec<(usize, usize)> {
    let rim = (0..16).map(|i| (i, (i + 1) % 16));
    FIGURE4_CHORDS.iter().copied().chain(rim).collect()
}

/// [`Graph::edge_checksum`] of the Figure-4 graph.
pub const FIGURE4_CHECKSUM: u64 = 0x43bc_b170_82af_60f8;

const FIGURE4_SEVEN: [Color; 16] = [1, 2, 3, 4, 5, 7, 2, 3, 4, 5, 1, 2, 3, 4, 6, 7];
const FIGURE4_EIGHT: [Color; 16] = [1, 2, 3, 4, 5, 6, 7, 8, 1, 2, 3, 4, 5, 6, 7, 8];

/// The 7-coloring drawn with the Figure-4 graph.
pub fn figure4_seven_coloring() -> Coloring {
    Coloring::new(FIGURE4_SEVEN.to_vec(), 7)
}

/// The frozen 8-coloring drawn with the Figure-4 graph.
pub fn figure4_frozen_coloring() -> Coloring {
    Coloring::new(FIGURE4_EIGHT.to_vec(), 8)
}

/// The frozen `l`-coloring of `K_{l,l} - M`: both vertices of the `i`-th
/// matched pair get color `i + 1`.
pub fn kll_frozen_coloring(l: usize) -> Coloring {
    let colors = (0..2 * l).map(|v| (v % l + 1) as Color).collect();
    Coloring::new(colors, l)
}
