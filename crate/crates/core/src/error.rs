use thiserror::Error;

/// Errors raised by poset construction, polytope building and the geometric oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation ({0}, {1}) closes a cycle: the input is not a partial order")]
    CycleInInput(usize, usize),

    #[error("element index {index} out of range 1..={d}")]
    IndexOutOfRange { index: usize, d: usize },

    #[error("poset size {0} is outside the supported range 1..=64")]
    UnsupportedSize(usize),

    #[error("elements {0} and {1} are not comparable with the first below the second")]
    NotComparable(usize, usize),

    #[error("{{{0}, {1}}} is not an edge of the Hasse diagram")]
    NotAnEdge(usize, usize),

    #[error("sequence is not a maximal chain of the hat poset")]
    NotAMaximalChain,

    #[error("invalid walk: {0}")]
    InvalidWalk(String),

    #[error("step signs around the cycle do not sum to zero")]
    NotConsistent,

    #[error("walk is neither an admissible very special cycle nor an admissible special path")]
    WalkNotEligible,

    #[error("constructed hyperplane does not support the polytope")]
    NotSupporting,

    #[error("points do not affinely span the ambient space")]
    DegenerateInput,

    #[error("a supporting hyperplane passes through the origin")]
    OriginOnHyperplane,

    #[error("points have inconsistent dimensions")]
    DimensionMismatch,

    #[error("lattice scan of {0} points exceeds the supported limit")]
    LatticeScanTooLarge(u128),

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("enumeration supports 1..=8 elements, got {0}")]
    EnumerationTooLarge(usize),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("output closed")]
    BrokenPipe,

    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Error::BrokenPipe;
        }
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
