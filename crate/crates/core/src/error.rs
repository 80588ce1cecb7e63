use thiserror::Error;

/// Errors raised by skeleton construction and the supporting geometry.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("generator points coincide")]
    DegenerateGenerators,
    #[error("input points coincide: {0} and {1}")]
    DuplicatePoints(usize, usize),
    #[error("all input points are collinear")]
    CollinearInput,
    #[error("operation requires at least {needed} sites, got {got}")]
    TooFewSites { needed: usize, got: usize },
    #[error("unsupported metric for this operation: {0}")]
    UnsupportedMetric(String),
    #[error("invalid metric parameter: {0}")]
    InvalidMetric(String),
    #[error("invalid beta: {0}")]
    InvalidBeta(String),
    #[error("invalid candidate edge ({0}, {1})")]
    InvalidCandidates(usize, usize),
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("beta {beta} out of range: {reason}")]
    BetaOutOfRange { beta: f64, reason: String },
    #[error("no cycle through site pairs {0:?}; validity bound undefined")]
    NoCycle(Vec<(usize, usize)>),
    #[error("grid resolution {0} is below the minimum of 2")]
    ResolutionTooSmall(usize),
    #[error("segments {0} and {1} intersect")]
    IntersectingSegments(usize, usize),
    #[error("segment {0} has zero length")]
    DegenerateSegment(usize),
    #[error("nothing to render")]
    EmptyScene,
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
