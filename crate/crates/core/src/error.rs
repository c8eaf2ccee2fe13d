use thiserror::Error;

use crate::Color;

/// Errors raised while reading the line-oriented text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed input `{content}`")]
    Malformed { line: usize, content: String },
    #[error("missing `p edge <n> <m>` header")]
    MissingHeader,
    #[error("line {line}: duplicate header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("line {line}: vertex {vertex} assigned twice")]
    DuplicateVertex { line: usize, vertex: usize },
    #[error("line {line}: colors must be positive integers")]
    ZeroColor { line: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has girth {girth}, at least 5 is required")]
    GirthTooSmall { girth: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("tree constraint violated: {0}")]
    Constraint(String),

    #[error("color {color} on vertex {vertex} clashes with neighbor {neighbor}")]
    Improper {
        vertex: usize,
        neighbor: usize,
        color: Color,
    },
    #[error("no color up to {bound} is available for vertex {vertex}")]
    PaletteExhausted { vertex: usize, bound: Color },
    #[error("coloring is partial: vertex {vertex} has no color")]
    Partial { vertex: usize },
    #[error("colored vertices do not form a prefix of the tree order")]
    NotPrefix,
    #[error("list of vertex {vertex} has {size} colors, at least {required} are required")]
    UndersizedList {
        vertex: usize,
        size: usize,
        required: usize,
    },
    #[error("coloring covers {found} vertices but the graph has {expected}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("graph has {n} vertices, exceeding the search bound {bound}")]
    SearchBound { n: usize, bound: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("input is the 6-cycle; use the C6 entry point")]
    IsSixCycle,
    #[error("input is not the 6-cycle")]
    NotSixCycle,
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
