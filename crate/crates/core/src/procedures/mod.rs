//! Constructive recoloring schedules.
//!
//! Every public procedure returns a [`RecoloringPath`] that has already been
//! replayed through [`crate::reconfig::verify_path`] and checked against the
//! per-vertex bound its construction promises.

mod bipartite;
mod certificate;
mod clique3;
mod compose;
mod cycle;
mod graph_f;
mod lift;
mod prism_star;
mod renaming;

pub use bipartite::{bipartite_codiamond_connect, bipartite_codiamond_recolor};
pub use clique3::{clique3_recolor, Clique3Layout};
pub use compose::compose_target;
pub use certificate::{
    connect_via_certificate, good_certificate, recolor_via_certificate, Child, Move,
    ReductionCertificate,
};
pub use compose::{compose, ComposeMode, GoodRecolorer, Part};
pub use cycle::{cycle_recolor, cycle_target};
pub use graph_f::{graph_f_recolor, graph_f_target};
pub use lift::{lift_dominated, lift_low_degree};
pub use prism_star::{prism_star_recolor, prism_star_target};
pub use renaming::renaming_walk;

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reconfig::RecoloringPath;

/// Records steps while tracking the current coloring. Each step is checked
/// for properness as it is taken.
#[derive(Clone)]
pub(crate) struct PathBuilder<'a> {
    g: &'a Graph,
    path: RecoloringPath,
    current: Vec<Color>,
}

impl<'a> PathBuilder<'a> {
    pub(crate) fn new(g: &'a Graph, start: &Coloring) -> Self {
        PathBuilder {
            g,
            current: start.colors.clone(),
            path: RecoloringPath::empty(start.clone()),
        }
    }

    pub(crate) fn color(&self, v: usize) -> Color {
        self.current[v]
    }

    pub(crate) fn colors(&self) -> &[Color] {
        &self.current
    }

    /// Number of steps so far that recolored `v`.
    pub(crate) fn count(&self, v: usize) -> usize {
        self.path.steps.iter().filter(|s| s.0 == v).count()
    }

    pub(crate) fn ell(&self) -> usize {
        self.path.start.ell
    }

    /// Whether `v` may take `c` right now.
    pub(crate) fn allowed(&self, v: usize, c: Color) -> bool {
        self.g.neighbors(v).iter().all(|&u| self.current[u] != c)
    }

    /// Recolors `v` with `c`; a no-op when `v` already has `c`.
    pub(crate) fn set(&mut self, v: usize, c: Color) -> Result<()> {
        if self.current[v] == c {
            return Ok(());
        }
        if c == 0 || c > self.ell() {
            return Err(Error::ColorOutOfPalette { vertex: v, color: c, ell: self.ell() });
        }
        if let Some(&neighbor) = self.g.neighbors(v).iter().find(|&&u| self.current[u] == c) {
            return Err(Error::StepConflict {
                step: self.path.steps.len(),
                vertex: v,
                color: c,
                neighbor,
            });
        }
        self.current[v] = c;
        self.path.steps.push((v, c));
        Ok(())
    }

    /// Appends a path on the same graph that starts at the current coloring.
    pub(crate) fn extend(&mut self, p: &RecoloringPath) -> Result<()> {
        for &(v, c) in &p.steps {
            self.set(v, c)?;
        }
        Ok(())
    }

    pub(crate) fn finish(self) -> RecoloringPath {
        self.path
    }
}

/// Rejects palettes below `chi + 1`.
pub(crate) fn require_palette(needed: usize, ell: usize) -> Result<()> {
    if ell < needed {
        Err(Error::PaletteTooSmall { needed, ell })
    } else {
        Ok(())
    }
}

/// Smallest color in `1..=ell` outside `avoid`.
pub(crate) fn smallest_free(ell: usize, avoid: &[Color]) -> Option<Color> {
    (1..=ell).find(|c| !avoid.contains(c))
}
