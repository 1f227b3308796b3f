//! The `recolor` command line.
//!
//! Every subcommand prints plain text by default and a stable JSON report
//! with `--json`. Exit statuses: 0 success, 1 other failure, 2 unreadable
//! input, 3 graph outside the requested class (witness printed), 4 no
//! proper coloring with the requested palette.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::{figure4_frozen_coloring, kll_frozen_coloring, NamedGraph};
use crate::coloring::{
    chromatic_number, find_frozen_coloring_budgeted, is_frozen, k_coloring, lex_least_coloring,
    optimal_coloring, Coloring,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{parse_graph, parse_path, read_coloring, write_graph, GraphFormat};
use crate::procedures::{
    connect_via_certificate, good_certificate, recolor_via_certificate, ReductionCertificate,
};
use crate::recognizers::{classify_theorem_with, frozen_family_generator, Class, Evidence, Verdict};
use crate::reconfig::{
    mixing_report, shortest_recoloring_path, verify_path, MixingOptions,
    RecoloringPath, StateSpace, Witness, DEFAULT_BUDGET,
};
use crate::subgraph::is_family_free;

#[derive(Parser, Debug)]
#[command(name = "recolor", version, about = "Vertex-coloring reconfiguration toolkit")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Maximum number of colorings any oracle command may enumerate.
    #[arg(long, global = true, env = "RECOLOR_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Graph file format (edgelist or dimacs); detected when omitted.
    #[arg(long, global = true)]
    format: Option<GraphFormat>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Size, degrees, components, chromatic and clique number.
    Info { graph: PathBuf },
    /// Test for induced copies of the named graphs.
    Free {
        graph: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        family: Vec<NamedGraph>,
    },
    /// Check a coloring for being frozen, or search for a frozen coloring.
    Frozen {
        graph: PathBuf,
        #[arg(long)]
        ell: usize,
        /// Coloring to check; without it a frozen coloring is searched for.
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Search for a frozen coloring (the default without --coloring).
        #[arg(long)]
        search: bool,
    },
    /// Connectivity of R_ell(G) for every ell from chi+1 to ell-max.
    Mixing {
        graph: PathBuf,
        #[arg(long)]
        ell_max: usize,
        /// Skip diameter computation.
        #[arg(long)]
        no_diameter: bool,
    },
    /// Exact diameter of R_ell(G).
    Diameter {
        graph: PathBuf,
        #[arg(long)]
        ell: usize,
    },
    /// A recoloring path between two colorings.
    Path {
        graph: PathBuf,
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        #[arg(long)]
        ell: usize,
        /// Build the path from a reduction certificate instead of searching.
        #[arg(long)]
        constructive: bool,
        /// Also write the path to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find a reduction certificate and replay it.
    Certify {
        graph: PathBuf,
        /// Palette for the replay; defaults to chi+1.
        #[arg(long)]
        ell: Option<usize>,
        /// Start coloring for the replay.
        #[arg(long)]
        from: Option<PathBuf>,
    },
    /// Decide which side of a classification theorem the graph falls on.
    Classify {
        graph: PathBuf,
        /// One of triangle-claw, triangle-co-diamond, triangle-4k1,
        /// 2k2-triangle, 2k2-claw, 2k2-diamond, p5-c5-house-co-banner,
        /// paw-claw, paw-co-diamond, paw-4k1, 2k2-paw.
        #[arg(long)]
        theorem: Class,
    },
    /// Write a catalog graph or a member of the frozen family.
    Generate {
        /// A catalog name (C6, K4,4-M, prism-star, ...), a family
        /// (path, cycle, complete, empty, kll-minus-matching) used with
        /// --param, or frozen-family.
        #[arg(long)]
        name: String,
        #[arg(long)]
        param: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the graph's distinguished coloring here.
        #[arg(long)]
        coloring_out: Option<PathBuf>,
    },
    /// Replay a path file and report whether every step is proper.
    VerifyPath {
        graph: PathBuf,
        #[arg(long)]
        path: PathBuf,
    },
}

/// Parses `args` (program name first), runs the command and returns the
/// exit status. Output goes to stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut ctx = Ctx { json: cli.json, budget: cli.budget, format: cli.format, err };
    let result = dispatch(&cli.command, &mut ctx);
    match result {
        Ok(report) => {
            let _ = out.write_all(report.render(ctx.json).as_bytes());
            report.status
        }
        Err(e) => {
            let status = exit_status(&e);
            let _ = writeln!(ctx.err, "{}", error_text(&e, ctx.json));
            status
        }
    }
}

pub fn exit_status(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::UnknownGraph(_) | Error::InvalidParameter { .. } => 2,
        Error::OutsideClass { .. } | Error::FrozenObstruction { .. } => 3,
        Error::NotColorable(_) => 4,
        _ => 1,
    }
}

fn error_text(e: &Error, json: bool) -> String {
    let mut report = json!({ "error": e.to_string() });
    match e {
        Error::OutsideClass { pattern, embedding } => {
            report["pattern"] = json!(pattern);
            report["embedding"] = json!(embedding.mapping);
        }
        Error::FrozenObstruction { ell, frozen } => {
            report["ell"] = json!(ell);
            report["frozen"] = json!(frozen);
        }
        _ => {}
    }
    if json {
        return report.to_string();
    }
    let mut text = format!("error: {e}");
    if let Error::OutsideClass { embedding, .. } = e {
        let _ = write!(text, "\nwitness vertices: {:?}", embedding.mapping);
    }
    text
}

struct Ctx<'a> {
    json: bool,
    budget: usize,
    format: Option<GraphFormat>,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn graph(&mut self, path: &Path) -> Result<Graph> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let parsed = parse_graph(&text, self.format)?;
        for w in &parsed.warnings {
            let _ = writeln!(self.err, "warning: {}: {w}", path.display());
        }
        Ok(parsed.graph)
    }
}

/// A finished command: the JSON report, its text rendering and the exit
/// status to return.
struct Report {
    json: Value,
    text: String,
    status: i32,
}

impl Report {
    fn new(json: impl Serialize, text: String) -> Report {
        Report { json: serde_json::to_value(json).expect("report serializes"), text, status: 0 }
    }

    fn with_status(mut self, status: i32) -> Report {
        self.status = status;
        self
    }

    fn render(&self, json: bool) -> String {
        if json {
            format!("{}\n", serde_json::to_string_pretty(&self.json).expect("value serializes"))
        } else {
            self.text.clone()
        }
    }
}

fn dispatch(command: &Command, ctx: &mut Ctx) -> Result<Report> {
    match command {
        Command::Info { graph } => info(&ctx.graph(graph)?),
        Command::Free { graph, family } => free(&ctx.graph(graph)?, family),
        Command::Frozen { graph, ell, coloring, search } => {
            let g = ctx.graph(graph)?;
            frozen(&g, *ell, coloring.as_deref(), *search, ctx.budget)
        }
        Command::Mixing { graph, ell_max, no_diameter } => {
            let g = ctx.graph(graph)?;
            mixing(&g, *ell_max, !*no_diameter, ctx.budget)
        }
        Command::Diameter { graph, ell } => diameter(&ctx.graph(graph)?, *ell, ctx.budget),
        Command::Path { graph, from, to, ell, constructive, out } => {
            let g = ctx.graph(graph)?;
            let a = read_coloring(from, Some(*ell))?;
            let b = read_coloring(to, Some(*ell))?;
            path(&g, &a, &b, *constructive, out.as_deref(), ctx.budget)
        }
        Command::Certify { graph, ell, from } => {
            let g = ctx.graph(graph)?;
            certify(&g, *ell, from.as_deref())
        }
        Command::Classify { graph, theorem } => {
            classify(&ctx.graph(graph)?, *theorem, ctx.budget)
        }
        Command::Generate { name, param, out, coloring_out } => generate(
            name,
            *param,
            out.as_deref(),
            coloring_out.as_deref(),
            ctx.format.unwrap_or(GraphFormat::EdgeList),
        ),
        Command::VerifyPath { graph, path } => {
            let g = ctx.graph(graph)?;
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            verify(&g, &parse_path_report(&text)?)
        }
    }
}

fn colors_text(c: &Coloring) -> String {
    c.colors.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

fn info(g: &Graph) -> Result<Report> {
    let chi = chromatic_number(g);
    let omega = g.clique_number();
    let components = g.components();
    let report = json!({
        "n": g.n(),
        "m": g.m(),
        "degrees": g.degrees(),
        "max_degree": g.max_degree(),
        "components": components,
        "chromatic_number": chi,
        "clique_number": omega,
    });
    let text = format!(
        "n: {}\nm: {}\ndegrees: {:?}\nmax degree: {}\ncomponents: {}\nchromatic number: {chi}\nclique number: {omega}\n",
        g.n(),
        g.m(),
        g.degrees(),
        g.max_degree(),
        components.len(),
    );
    Ok(Report::new(report, text))
}

fn free(g: &Graph, family: &[NamedGraph]) -> Result<Report> {
    let names: Vec<String> = family.iter().map(ToString::to_string).collect();
    Ok(match is_family_free(g, family) {
        Ok(()) => Report::new(
            json!({ "family": names, "free": true }),
            format!("free of {}: true\n", names.join(", ")),
        ),
        Err(v) => Report::new(
            json!({
                "family": names,
                "free": false,
                "pattern": v.pattern,
                "embedding": v.embedding.mapping,
            }),
            format!(
                "free of {}: false\ninduced {} on vertices {:?}\n",
                names.join(", "),
                v.pattern,
                v.embedding.mapping
            ),
        )
        .with_status(3),
    })
}

fn frozen(
    g: &Graph,
    ell: usize,
    coloring: Option<&Path>,
    search: bool,
    budget: usize,
) -> Result<Report> {
    let (found, method) = match coloring {
        Some(path) if !search => {
            let c = read_coloring(path, Some(ell))?;
            let frozen = is_frozen(g, &c)?;
            (frozen.then_some(c), "check")
        }
        _ => {
            if k_coloring(g, ell).is_none() {
                return Err(Error::NotColorable(ell));
            }
            // The search node cap reuses the state budget.
            (find_frozen_coloring_budgeted(g, ell, budget as u64)?, "search")
        }
    };
    let mut text = format!("frozen: {}\n", found.is_some());
    if let Some(c) = &found {
        let _ = writeln!(text, "coloring: {}", colors_text(c));
    }
    let report = json!({
        "ell": ell,
        "method": method,
        "frozen": found.is_some(),
        "coloring": found.as_ref().map(|c| &c.colors),
    });
    Ok(Report::new(report, text))
}

fn witness_text(w: &Witness) -> String {
    match w {
        Witness::Frozen { coloring } => format!("frozen coloring {}", colors_text(coloring)),
        Witness::Separated { a, b } => {
            format!("separated colorings {} | {}", colors_text(a), colors_text(b))
        }
    }
}

fn mixing(g: &Graph, ell_max: usize, diameter: bool, budget: usize) -> Result<Report> {
    let report = mixing_report(g, ell_max, MixingOptions { budget, diameter });
    let mut text = format!(
        "chromatic number: {}\nmax degree: {}\n",
        report.chromatic_number, report.max_degree
    );
    for e in &report.entries {
        let state = match e.connected {
            Some(true) => "connected",
            Some(false) => "disconnected",
            None => "unknown",
        };
        let _ = write!(text, "ell={}: {state}", e.ell);
        if let Some(c) = e.colorings {
            let _ = write!(text, ", {c} colorings");
        }
        if let Some(d) = e.diameter {
            let _ = write!(text, ", diameter {d}");
        }
        if e.inferred {
            text.push_str(" (inferred)");
        }
        if let Some(w) = &e.witness {
            let _ = write!(text, ", {}", witness_text(w));
        }
        text.push('\n');
    }
    for note in &report.notes {
        let _ = writeln!(text, "note: {note}");
    }
    Ok(Report::new(&report, text))
}

fn diameter(g: &Graph, ell: usize, budget: usize) -> Result<Report> {
    let space = StateSpace::build(g, ell, budget)?;
    if space.is_empty() {
        return Err(Error::NotColorable(ell));
    }
    let conn = space.connectivity();
    if !conn.connected {
        let w = conn.witness.expect("disconnected spaces carry a witness");
        let text = format!("ell={ell}: disconnected, {}\n", witness_text(&w));
        return Ok(Report::new(
            json!({ "ell": ell, "colorings": space.len(), "connected": false, "witness": w }),
            text,
        ));
    }
    let d = space.diameter()?;
    Ok(Report::new(
        json!({ "ell": ell, "colorings": space.len(), "connected": true, "diameter": d }),
        format!("ell={ell}: diameter {d} over {} colorings\n", space.len()),
    ))
}

/// Accepts a bare path or any report with a `path` field.
fn parse_path_report(text: &str) -> Result<RecoloringPath> {
    if let Ok(Value::Object(map)) = serde_json::from_str::<Value>(text) {
        if let Some(inner) = map.get("path") {
            return serde_json::from_value(inner.clone())
                .map_err(|e| Error::Parse { line: 1, message: e.to_string() });
        }
    }
    parse_path(text)
}

fn path_report(g: &Graph, p: &RecoloringPath, method: &str) -> Result<Report> {
    let stats = verify_path(g, p)?;
    let mut text = format!(
        "method: {method}\nlength: {}\nmax recolorings per vertex: {}\n",
        stats.length, stats.max_count
    );
    for &(v, c) in &p.steps {
        let _ = writeln!(text, "{v} -> {c}");
    }
    let report = json!({
        "method": method,
        "length": stats.length,
        "max_recolorings": stats.max_count,
        "path": p,
    });
    Ok(Report::new(report, text))
}

fn path(
    g: &Graph,
    a: &Coloring,
    b: &Coloring,
    constructive: bool,
    out: Option<&Path>,
    budget: usize,
) -> Result<Report> {
    a.validate(g)?;
    b.validate(g)?;
    let (p, method) = if constructive {
        let cert = good_certificate(g).ok_or_else(|| {
            Error::Precondition("no reduction certificate; rerun without --constructive".into())
        })?;
        (connect_via_certificate(g, &cert, a, b, a.ell)?, "certificate")
    } else {
        let p = shortest_recoloring_path(g, a, b, budget)?.ok_or(Error::Disconnected)?;
        (p, "shortest")
    };
    if let Some(out) = out {
        std::fs::write(out, crate::io::write_path(&p))?;
    }
    path_report(g, &p, method)
}

/// A start coloring far from the certificate target: greedy from the top
/// of the palette, or the lexicographically least coloring if that fails.
fn spread_coloring(g: &Graph, ell: usize) -> Option<Coloring> {
    let mut colors = vec![0; g.n()];
    for v in 0..g.n() {
        let c = (1..=ell)
            .rev()
            .find(|&c| g.neighbors(v).iter().all(|&u| colors[u] != c));
        match c {
            Some(c) => colors[v] = c,
            None => return lex_least_coloring(g, ell),
        }
    }
    Some(Coloring::new(colors, ell))
}

fn certificate_text(cert: &ReductionCertificate, depth: usize, out: &mut String) {
    let step = serde_json::to_value(&cert.step).expect("move serializes");
    let kind = step["type"].as_str().unwrap_or("?").to_string();
    let mut fields: Vec<String> = step
        .as_object()
        .into_iter()
        .flatten()
        .filter(|(k, _)| *k != "type")
        .map(|(k, v)| format!("{k}={v}"))
        .collect();
    fields.sort();
    let _ = writeln!(
        out,
        "{:indent$}- {kind}{}{} (n={}, chi={}{})",
        "",
        if fields.is_empty() { "" } else { " " },
        fields.join(" "),
        cert.n,
        cert.chi,
        if cert.good { ", good" } else { "" },
        indent = 2 * depth
    );
    for child in &cert.children {
        certificate_text(&child.certificate, depth + 1, out);
    }
}

fn certify(g: &Graph, ell: Option<usize>, from: Option<&Path>) -> Result<Report> {
    let cert = good_certificate(g).ok_or_else(|| Error::OutsideClass {
        pattern: "no reduction rule applies".into(),
        embedding: crate::graph::Embedding { mapping: Vec::new() },
    })?;
    let ell = ell.unwrap_or(cert.chi + 1);
    let start = match from {
        Some(path) => read_coloring(path, Some(ell))?,
        None => spread_coloring(g, ell).ok_or(Error::NotColorable(ell))?,
    };
    let replay = recolor_via_certificate(g, &cert, &start, ell)?;
    let stats = verify_path(g, &replay)?;
    let mut text = String::new();
    certificate_text(&cert, 0, &mut text);
    let _ = writeln!(
        text,
        "replay: {} steps from {} to {}, at most {} recolorings per vertex (valid)",
        stats.length,
        colors_text(&start),
        colors_text(&replay.end()),
        stats.max_count
    );
    let report = json!({
        "certificate": cert,
        "replay": {
            "ell": ell,
            "valid": true,
            "length": stats.length,
            "max_recolorings": stats.max_count,
            "path": replay,
        },
    });
    Ok(Report::new(report, text))
}

fn classify(g: &Graph, class: Class, budget: usize) -> Result<Report> {
    let v = classify_theorem_with(g, class, budget)?;
    let text = verdict_text(&v);
    Ok(Report::new(&v, text))
}

fn evidence_text(e: &Evidence) -> String {
    match e {
        Evidence::Certificate(c) => format!(
            "certificate with {} nodes{}",
            c.size(),
            if c.good { ", good" } else { "" }
        ),
        Evidence::Oracle(o) => format!("oracle: connected for ell in {:?}", o.connected_for),
        Evidence::Exceptional(w) => format!(
            "exceptional {}: disconnected at ell={}, {}",
            w.structure,
            w.ell,
            witness_text(&w.disconnection)
        ),
        Evidence::Components(cs) => format!("{} components", cs.len()),
    }
}

fn verdict_text(v: &Verdict) -> String {
    let verdict = serde_json::to_value(v.verdict).expect("verdict serializes");
    let mut text = format!(
        "class: {}\nverdict: {}\n",
        v.class,
        verdict.as_str().unwrap_or_default()
    );
    if let Some(s) = &v.structure {
        let _ = writeln!(text, "structure: {s}");
    }
    let _ = writeln!(text, "witness: {}", evidence_text(&v.evidence));
    for c in v.components() {
        let kind = serde_json::to_value(c.verdict).expect("verdict serializes");
        let _ = writeln!(
            text,
            "  component {:?}: {}{}, {}",
            c.vertices,
            kind.as_str().unwrap_or_default(),
            c.structure.as_ref().map(|s| format!(" ({s})")).unwrap_or_default(),
            evidence_text(&c.evidence)
        );
    }
    text
}

/// The graph and distinguished coloring named by `generate`.
pub fn generated(name: &str, param: Option<usize>) -> Result<(Graph, Coloring)> {
    let key = name.trim().to_ascii_lowercase();
    let need = || Error::InvalidParameter {
        name: "param".into(),
        reason: format!("`{name}` needs --param"),
    };
    let named = match (key.as_str(), param) {
        ("frozen-family", p) => return frozen_family_generator(p.unwrap_or(1)),
        ("path", p) => NamedGraph::Path(p.ok_or_else(need)?),
        ("cycle", p) => NamedGraph::Cycle(p.ok_or_else(need)?),
        ("complete", p) => NamedGraph::Complete(p.ok_or_else(need)?),
        ("empty", p) => NamedGraph::Empty(p.ok_or_else(need)?),
        ("kll-minus-matching", p) => NamedGraph::KllMinusMatching(p.ok_or_else(need)?),
        (_, _) => key.parse()?,
    };
    let g = named.try_build()?;
    let coloring = match named {
        NamedGraph::Figure4 => figure4_frozen_coloring(),
        NamedGraph::KllMinusMatching(l) if l >= 1 => kll_frozen_coloring(l),
        _ => optimal_coloring(&g),
    };
    Ok((g, coloring))
}

fn generate(
    name: &str,
    param: Option<usize>,
    out: Option<&Path>,
    coloring_out: Option<&Path>,
    format: GraphFormat,
) -> Result<Report> {
    let (g, c) = generated(name, param)?;
    let graph_text = write_graph(&g, format);
    if let Some(path) = coloring_out {
        std::fs::write(path, crate::io::write_coloring_json(&c) + "\n")?;
    }
    let text = match out {
        Some(path) => {
            std::fs::write(path, &graph_text)?;
            format!("wrote {} ({} vertices, {} edges)\n", path.display(), g.n(), g.m())
        }
        None => graph_text.clone(),
    };
    let report = json!({
        "name": name,
        "param": param,
        "n": g.n(),
        "m": g.m(),
        "graph": graph_text,
        "coloring": c,
    });
    Ok(Report::new(report, text))
}

fn verify(g: &Graph, p: &RecoloringPath) -> Result<Report> {
    let stats = verify_path(g, p)?;
    let end = p.end();
    let report = json!({
        "valid": true,
        "length": stats.length,
        "max_recolorings": stats.max_count,
        "counts": stats.counts,
        "end": end,
    });
    let text = format!(
        "valid: true\nlength: {}\nmax recolorings per vertex: {}\nend: {}\n",
        stats.length,
        stats.max_count,
        colors_text(&end)
    );
    Ok(Report::new(report, text))
}
