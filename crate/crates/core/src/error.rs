use thiserror::Error;

use crate::coloring::Color;
use crate::graph::Embedding;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("unknown graph name `{0}`")]
    UnknownGraph(String),

    #[error("invalid parameter for `{name}`: {reason}")]
    InvalidParameter { name: String, reason: String },

    #[error("coloring has {got} entries, graph has {expected} vertices")]
    SizeMismatch { expected: usize, got: usize },

    #[error("color {color} at vertex {vertex} is outside the palette 1..={ell}")]
    ColorOutOfPalette { vertex: usize, color: Color, ell: usize },

    #[error("improper coloring: adjacent vertices {0} and {1} share a color")]
    Improper(usize, usize),

    #[error("graph has no proper {0}-coloring")]
    NotColorable(usize),

    #[error("state budget exceeded: more than {budget} colorings")]
    BudgetExceeded { budget: usize },

    #[error("reconfiguration graph is disconnected")]
    Disconnected,

    #[error("step {step}: vertex {vertex} already has color {color}")]
    NoOpStep { step: usize, vertex: usize, color: Color },

    #[error("step {step}: recoloring vertex {vertex} to {color} makes it clash with neighbor {neighbor}")]
    StepConflict { step: usize, vertex: usize, color: Color, neighbor: usize },

    #[error("palette too small: need at least {needed} colors, have {ell}")]
    PaletteTooSmall { needed: usize, ell: usize },

    #[error("colorings are not partition-isomorphic")]
    NotPartitionIsomorphic,

    #[error("color {0} is not in the source color set")]
    ColorNotInSet(Color),

    #[error("invalid color map: {0}")]
    InvalidColorMap(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("graph is isomorphic to K_{{{ell},{ell}}} minus a perfect matching")]
    FrozenObstruction { ell: usize, frozen: Vec<Color> },

    #[error("certificate does not match graph: {0}")]
    CertificateMismatch(String),

    #[error("graph is outside the class: contains an induced {pattern}")]
    OutsideClass { pattern: String, embedding: Embedding },

    #[error("recolor bound violated: vertex {vertex} recolored {count} times, bound {bound}")]
    BoundViolated { vertex: usize, count: usize, bound: usize },

    #[error("unexpected structure: {0}")]
    Contradiction(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
