use thiserror::Error;

/// Every failure the library can report.
///
/// The CLI maps these onto exit codes through [`Error::exit_code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph on {n} vertices exceeds the {max}-vertex limit")]
    OversizeGraph { n: usize, max: usize },
    #[error("vertex {0} is not present")]
    MissingVertex(usize),
    #[error("edge {{{0}, {1}}} is not present")]
    MissingEdge(usize, usize),
    #[error("operation requires a connected graph")]
    DisconnectedInput,

    #[error("graph6: byte {byte:#04x} at offset {offset} is outside 63..=126")]
    BadChar { byte: u8, offset: usize },
    #[error("graph6: input ends before all adjacency bits were read")]
    TruncatedBits,
    #[error("graph6: {0} unexpected trailing byte(s)")]
    TrailingGarbage(usize),

    #[error("cannot compare a vertex deck with an edge deck")]
    KindMismatch,
    #[error("malformed deck: {0}")]
    MalformedDeck(String),
    #[error("pattern on {pattern} vertices is not a proper subgraph of a {n}-vertex graph")]
    NotProperSubgraph { pattern: usize, n: usize },
    #[error("deleted-edge completions disagree on endpoint degrees: {0:?}")]
    AmbiguousEndpoints(Vec<(usize, usize)>),
    #[error("no completion of the edge-card reproduces the edge deck")]
    NoCandidate,

    #[error("the given pair does not separate the graph")]
    NotACut,
    #[error("removing the cut leaves {0} nontrivial components")]
    MultipleNontrivial(usize),

    #[error("hypothesis violation: {0}")]
    HypothesisViolation(String),
    #[error("n = {n} exceeds the configured cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("reconstruction is not unique: {0} non-isomorphic candidates")]
    NonUnique(usize),
    #[error("structural assertion failed: {0}")]
    AssertionFailure(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::HypothesisViolation(_) | Error::NonUnique(_) | Error::AssertionFailure(_) => 2,
            Error::CapExceeded { .. } | Error::OversizeGraph { .. } => 3,
            Error::BadChar { .. }
            | Error::TruncatedBits
            | Error::TrailingGarbage(_)
            | Error::MalformedDeck(_)
            | Error::Parse(_) => 4,
            _ => 1,
        }
    }

    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::OversizeGraph { .. } => "OversizeGraph",
            Error::MissingVertex(_) => "MissingVertex",
            Error::MissingEdge(..) => "MissingEdge",
            Error::DisconnectedInput => "DisconnectedInput",
            Error::BadChar { .. } => "BadChar",
            Error::TruncatedBits => "TruncatedBits",
            Error::TrailingGarbage(_) => "TrailingGarbage",
            Error::KindMismatch => "KindMismatch",
            Error::MalformedDeck(_) => "MalformedDeck",
            Error::NotProperSubgraph { .. } => "NotProperSubgraph",
            Error::AmbiguousEndpoints(_) => "AmbiguousEndpoints",
            Error::NoCandidate => "NoCandidate",
            Error::NotACut => "NotACut",
            Error::MultipleNontrivial(_) => "MultipleNontrivial",
            Error::HypothesisViolation(_) => "HypothesisViolation",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::NonUnique(_) => "NonUnique",
            Error::AssertionFailure(_) => "AssertionFailure",
            Error::Parse(_) => "Parse",
        }
    }
}
