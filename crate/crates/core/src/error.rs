use thiserror::Error;

/// Errors raised by graph construction, word handling and the search routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge endpoint {endpoint} out of range for {n} vertices")]
    EndpointOutOfRange { endpoint: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate vertex id {0}")]
    DuplicateVertex(usize),

    #[error("vertex {0} is not in the graph")]
    UnknownVertex(usize),

    #[error("letters must be distinct, got {0} twice")]
    SameLetter(usize),

    #[error("letter {0} does not occur in the word")]
    LetterAbsent(usize),

    #[error("empty word")]
    EmptyWord,

    #[error("alphabet mismatch: word letters {word:?} vs graph vertices {graph:?}")]
    AlphabetMismatch { word: Vec<usize>, graph: Vec<usize> },

    #[error("orientation is partial: edge ({0}, {1}) is unset")]
    PartialOrientation(usize, usize),

    #[error("orientation has a directed cycle through {0:?}")]
    Cyclic(Vec<usize>),

    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),

    #[error("improper coloring: adjacent vertices {0} and {1} share color {2}")]
    ImproperColoring(usize, usize, u32),

    #[error("vertex {0} has no color")]
    Uncolored(usize),

    #[error("color {color} on vertex {vertex} is outside the allowed range 1..={max}")]
    ColorOutOfRange { vertex: usize, color: u32, max: u32 },

    #[error("resource budget exceeded: {0}")]
    Budget(String),

    #[error("polyomino must be non-empty and edge-connected")]
    BadPolyomino,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("color-4 conflict at vertex {0} matches none of the known configurations")]
    UnclassifiedConflict(usize),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
