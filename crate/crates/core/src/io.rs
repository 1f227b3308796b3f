//! Text formats for graphs, colorings and paths.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with 0-based
//! endpoints. DIMACS: `p edge n m` and `e u v` lines with 1-based endpoints;
//! `c` lines are comments. In the edge-list format blank lines and lines
//! starting with `#` are skipped.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reconfig::RecoloringPath;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Dimacs,
}

impl FromStr for GraphFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "edgelist" | "edge-list" | "el" => Ok(GraphFormat::EdgeList),
            "dimacs" | "col" => Ok(GraphFormat::Dimacs),
            other => Err(Error::InvalidParameter {
                name: "format".into(),
                reason: format!("unknown graph format `{other}`"),
            }),
        }
    }
}

/// A parsed graph plus non-fatal diagnostics such as duplicate edges.
#[derive(Clone, Debug)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

pub fn detect_format(text: &str) -> GraphFormat {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with('c') || l.starts_with('p') => GraphFormat::Dimacs,
        _ => GraphFormat::EdgeList,
    }
}

pub fn parse_graph(text: &str, format: Option<GraphFormat>) -> Result<ParsedGraph> {
    match format.unwrap_or_else(|| detect_format(text)) {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Dimacs => parse_dimacs(text),
    }
}

pub fn read_graph(path: &Path, format: Option<GraphFormat>) -> Result<ParsedGraph> {
    let text = std::fs::read_to_string(path)?;
    parse_graph(&text, format)
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn number(token: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let token = token.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| parse_err(line, format!("{what} `{token}` is not a non-negative integer")))
}

/// Accumulates edges while checking them against the header.
struct EdgeCollector {
    n: usize,
    edges: Vec<(usize, usize)>,
    seen: std::collections::HashSet<(usize, usize)>,
    warnings: Vec<String>,
}

impl EdgeCollector {
    fn new(n: usize) -> Self {
        EdgeCollector {
            n,
            edges: Vec::new(),
            seen: Default::default(),
            warnings: Vec::new(),
        }
    }

    fn add(&mut self, line: usize, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(parse_err(
                    line,
                    format!("vertex {x} out of range for {} vertices", self.n),
                ));
            }
        }
        if u == v {
            return Err(parse_err(line, format!("self-loop at vertex {u}")));
        }
        if self.seen.insert((u.min(v), u.max(v))) {
            self.edges.push((u, v));
        } else {
            self.warnings
                .push(format!("line {line}: duplicate edge {u} {v} ignored"));
        }
        Ok(())
    }

    fn finish(self, declared: usize, lines: usize) -> Result<ParsedGraph> {
        let mut warnings = self.warnings;
        if lines != declared {
            warnings.push(format!("header declares {declared} edges, found {lines}"));
        }
        Ok(ParsedGraph {
            graph: Graph::new(self.n, &self.edges)?,
            warnings,
        })
    }
}

fn parse_edge_list(text: &str) -> Result<ParsedGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let mut tok = header.split_whitespace();
    let n = number(tok.next(), hline, "vertex count")?;
    let m = number(tok.next(), hline, "edge count")?;
    if tok.next().is_some() {
        return Err(parse_err(hline, "header must be `n m`"));
    }
    let mut edges = EdgeCollector::new(n);
    let mut count = 0;
    for (line, l) in lines {
        let mut tok = l.split_whitespace();
        let u = number(tok.next(), line, "endpoint")?;
        let v = number(tok.next(), line, "endpoint")?;
        if tok.next().is_some() {
            return Err(parse_err(line, "edge line must be `u v`"));
        }
        edges.add(line, u, v)?;
        count += 1;
    }
    edges.finish(m, count)
}

fn parse_dimacs(text: &str) -> Result<ParsedGraph> {
    let mut edges: Option<EdgeCollector> = None;
    let mut declared = 0;
    let mut count = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') {
            continue;
        }
        let mut tok = l.split_whitespace();
        match tok.next() {
            Some("p") => {
                if edges.is_some() {
                    return Err(parse_err(line, "second problem line"));
                }
                match tok.next() {
                    Some("edge") | Some("col") => {}
                    _ => return Err(parse_err(line, "expected `p edge n m`")),
                }
                let n = number(tok.next(), line, "vertex count")?;
                declared = number(tok.next(), line, "edge count")?;
                edges = Some(EdgeCollector::new(n));
            }
            Some("e") => {
                let coll = edges
                    .as_mut()
                    .ok_or_else(|| parse_err(line, "edge before `p edge` line"))?;
                let u = number(tok.next(), line, "endpoint")?;
                let v = number(tok.next(), line, "endpoint")?;
                if u == 0 || v == 0 {
                    return Err(parse_err(line, "DIMACS vertices are 1-based"));
                }
                coll.add(line, u - 1, v - 1)?;
                count += 1;
            }
            Some(other) => {
                return Err(parse_err(line, format!("unexpected line type `{other}`")));
            }
            None => {}
        }
    }
    let coll = edges.ok_or_else(|| parse_err(1, "missing `p edge n m` line"))?;
    coll.finish(declared, count)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => write_edge_list(g),
        GraphFormat::Dimacs => write_dimacs(g),
    }
}

/// Parses either `{"ell": k, "colors": [...]}` or whitespace-separated
/// colors. For the plain form the palette is `ell` if given, otherwise the
/// largest color used.
pub fn parse_coloring(text: &str, ell: Option<usize>) -> Result<Coloring> {
    let trimmed = text.trim_start();
    let mut c = if trimmed.starts_with('{') {
        serde_json::from_str::<Coloring>(trimmed).map_err(|e| parse_err(e.line(), e.to_string()))?
    } else {
        let mut colors = Vec::new();
        for (i, l) in text.lines().enumerate() {
            for t in l.split_whitespace() {
                let c: Color = t
                    .parse()
                    .map_err(|_| parse_err(i + 1, format!("color `{t}` is not an integer")))?;
                colors.push(c);
            }
        }
        Coloring::from_colors(colors)
    };
    if let Some(ell) = ell {
        c.ell = ell;
    }
    Ok(c)
}

pub fn read_coloring(path: &Path, ell: Option<usize>) -> Result<Coloring> {
    parse_coloring(&std::fs::read_to_string(path)?, ell)
}

pub fn write_coloring_text(c: &Coloring) -> String {
    let parts: Vec<String> = c.colors.iter().map(Color::to_string).collect();
    parts.join(" ") + "\n"
}

pub fn write_coloring_json(c: &Coloring) -> String {
    serde_json::to_string(c).expect("coloring serializes")
}

pub fn parse_path(text: &str) -> Result<RecoloringPath> {
    serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))
}

pub fn read_path(path: &Path) -> Result<RecoloringPath> {
    parse_path(&std::fs::read_to_string(path)?)
}

pub fn write_path(p: &RecoloringPath) -> String {
    serde_json::to_string(p).expect("path serializes")
}
