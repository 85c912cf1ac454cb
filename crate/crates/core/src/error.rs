use thiserror::Error;

use crate::words::Letter;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,

    #[error("letter {letter} is outside the alphabet a1..a{size}")]
    LetterOutOfRange { letter: Letter, size: usize },

    #[error("cannot parse word {text:?}: {reason}")]
    WordSyntax { text: String, reason: String },

    #[error("letter {letter} has no occurrence number {k} in the word")]
    NoSuchOccurrence { letter: Letter, k: usize },

    #[error("the pattern word must be nonempty")]
    EmptyPattern,

    #[error("the word must be nonempty")]
    EmptyWord,

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("{search} is limited to {cap} vertices, got {vertices} (raise the cap to proceed)")]
    Capacity {
        search: &'static str,
        vertices: usize,
        cap: usize,
    },

    #[error("ordering does not list exactly the vertices of each part")]
    OrderingMismatch,

    #[error("ordering is not a strong ordering of the graph")]
    NotStrongOrdering,

    #[error("expected a word over {expected} letters, got alphabet size {found}")]
    WrongArity { expected: usize, found: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("graph is not a bipartite permutation graph")]
    NotRepresentable,

    #[error("invalid partition {0:?}: parts must be positive and nonempty")]
    InvalidPartition(Vec<usize>),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("invalid enumeration spec: {0}")]
    InvalidSpec(String),

    #[error("graph json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("internal invariant broken: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by search or enumeration caps rather than bad
    /// input.
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. } | Error::InvalidSpec(_))
    }
}
