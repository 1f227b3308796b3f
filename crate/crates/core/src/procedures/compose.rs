//! Recoloring disjoint unions and joins from recolorers of their parts.

use std::collections::BTreeSet;

use super::{renaming_walk, require_palette, PathBuilder};
use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reconfig::{verify_path, RecoloringPath};

/// Something that recolors any coloring of a fixed graph to a fixed
/// `chromatic()`-coloring using colors `1..=chromatic()`.
pub trait GoodRecolorer {
    fn chromatic(&self) -> usize;
    fn target(&self) -> Vec<Color>;
    /// Path from `start` (palette `start.ell`) to [`GoodRecolorer::target`].
    fn recolor_to_target(&self, g: &Graph, start: &Coloring) -> Result<RecoloringPath>;
}

/// One part of a decomposition, with its vertices in the parent graph.
pub struct Part<'a> {
    pub vertices: Vec<usize>,
    pub recolorer: &'a dyn GoodRecolorer,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComposeMode {
    DisjointUnion,
    Join,
}

/// The target of the composed graph: part targets side by side for a union,
/// and shifted onto consecutive palettes for a join.
pub fn compose_target(n: usize, mode: ComposeMode, parts: &[Part]) -> Vec<Color> {
    let mut out = vec![0; n];
    let mut offset = 0;
    for part in parts {
        for (&v, c) in part.vertices.iter().zip(part.recolorer.target()) {
            out[v] = c + offset;
        }
        if mode == ComposeMode::Join {
            offset += part.recolorer.chromatic();
        }
    }
    out
}

fn check_structure(g: &Graph, mode: ComposeMode, parts: &[Part]) -> Result<()> {
    let mut seen = vec![false; g.n()];
    for part in parts {
        for &v in &part.vertices {
            if v >= g.n() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Precondition("parts do not partition the vertices".into()));
            }
        }
    }
    if seen.contains(&false) {
        return Err(Error::Precondition("parts do not cover the vertices".into()));
    }
    for (i, p) in parts.iter().enumerate() {
        for q in &parts[i + 1..] {
            let ok = match mode {
                ComposeMode::DisjointUnion => g.is_anticomplete_to(&p.vertices, &q.vertices),
                ComposeMode::Join => g.is_complete_to(&p.vertices, &q.vertices),
            };
            if !ok {
                return Err(Error::Precondition(format!("parts are not a {mode:?}")));
            }
        }
    }
    Ok(())
}

/// Runs a part's recolorer in a compact palette and replays it on the
/// parent through `phi`, which maps compact colors to parent colors.
fn replay_part(
    g: &Graph,
    builder: &mut PathBuilder,
    part: &Part,
    phi: &[Color],
) -> Result<()> {
    let sub = g.induced(&part.vertices);
    let local: Vec<Color> = part
        .vertices
        .iter()
        .map(|&v| {
            let c = builder.color(v);
            phi.iter().position(|&x| x == c).expect("part colors lie in the palette") + 1
        })
        .collect();
    let path = part
        .recolorer
        .recolor_to_target(&sub, &Coloring::new(local, phi.len()))?;
    for &(i, c) in &path.steps {
        builder.set(part.vertices[i], phi[c - 1])?;
    }
    Ok(())
}

/// Bijection from `1..=palette.len()` onto `palette`, sending compact color
/// `c` to `preferred[c-1]` whenever that color is in the palette.
fn palette_map(palette: &BTreeSet<Color>, preferred: &[Color]) -> Vec<Color> {
    let mut phi = vec![0; palette.len()];
    let mut used = BTreeSet::new();
    for (i, &c) in preferred.iter().enumerate() {
        if i < phi.len() && palette.contains(&c) && used.insert(c) {
            phi[i] = c;
        }
    }
    let mut rest = palette.iter().filter(|c| !used.contains(c));
    for slot in phi.iter_mut().filter(|c| **c == 0) {
        *slot = *rest.next().expect("palette sized to the map");
    }
    phi
}

/// Recolors `start` on `g` to [`compose_target`].
///
/// A union runs each part in turn with the full palette. A join first
/// recolors a part that sees at least `chi_i + 1` free colors inside those
/// colors, then the other part, then renames. When one side is a single
/// vertex `s`, the other side is recolored around the color of `s`, `s`
/// moves to its target, and at most one class moves once more, so no vertex
/// exceeds `n_H + 1` recolorings.
pub fn compose(
    g: &Graph,
    mode: ComposeMode,
    parts: &[Part],
    start: &Coloring,
    ell: usize,
) -> Result<RecoloringPath> {
    check_structure(g, mode, parts)?;
    let start = start.with_ell(ell);
    start.validate(g)?;
    let target = compose_target(g.n(), mode, parts);
    let mut b = PathBuilder::new(g, &start);
    match mode {
        ComposeMode::DisjointUnion => {
            for part in parts {
                let phi: Vec<Color> = (1..=ell).collect();
                replay_part(g, &mut b, part, &phi)?;
            }
        }
        ComposeMode::Join => {
            let [p1, p2] = parts else {
                return Err(Error::Precondition("a join needs exactly two parts".into()));
            };
            let chi = p1.recolorer.chromatic() + p2.recolorer.chromatic();
            require_palette(chi + 1, ell)?;
            let desired = |part: &Part| -> Vec<Color> {
                let mut d = vec![0; part.recolorer.chromatic()];
                for (&v, c) in part.vertices.iter().zip(part.recolorer.target()) {
                    d[c - 1] = target[v];
                }
                d
            };
            if p1.vertices.len() == 1 || p2.vertices.len() == 1 {
                let (s, h) = if p2.vertices.len() == 1 { (p2, p1) } else { (p1, p2) };
                let s = s.vertices[0];
                let cs = b.color(s);
                let ts = target[s];
                let mut want = desired(h);
                let clash = want.iter().position(|&c| c == cs);
                if let Some(k) = clash {
                    let taken: Vec<Color> = want.iter().copied().chain([ts]).collect();
                    want[k] = (1..=ell).find(|c| !taken.contains(c)).expect("chi + 1 colors");
                }
                let palette: BTreeSet<Color> = (1..=ell).filter(|&c| c != cs).collect();
                replay_part(g, &mut b, h, &palette_map(&palette, &want))?;
                b.set(s, ts)?;
                if let Some(k) = clash {
                    let parked = want[k];
                    for &v in &h.vertices {
                        if b.color(v) == parked {
                            b.set(v, cs)?;
                        }
                    }
                }
            } else {
                // Colors not currently on `other`.
                let free_for = |other: &Part, b: &PathBuilder| -> BTreeSet<Color> {
                    let used: BTreeSet<Color> = other.vertices.iter().map(|&v| b.color(v)).collect();
                    (1..=ell).filter(|c| !used.contains(c)).collect()
                };
                let order = if free_for(p2, &b).len() > p1.recolorer.chromatic() {
                    [p1, p2]
                } else {
                    [p2, p1]
                };
                for (i, part) in order.iter().enumerate() {
                    let palette = free_for(order[1 - i], &b);
                    if palette.len() <= part.recolorer.chromatic() {
                        return Err(Error::PaletteTooSmall {
                            needed: part.recolorer.chromatic() + 1,
                            ell: palette.len(),
                        });
                    }
                    replay_part(g, &mut b, part, &palette_map(&palette, &desired(part)))?;
                }
                let here = Coloring::new(b.colors().to_vec(), ell);
                let rename = renaming_walk(g, &here, &Coloring::new(target.clone(), ell), ell)?;
                b.extend(&rename)?;
            }
        }
    }
    let path = b.finish();
    verify_path(g, &path)?;
    if path.end().colors != target {
        return Err(Error::CertificateMismatch("composition did not end on the target".into()));
    }
    Ok(path)
}
