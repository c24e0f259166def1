use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("singular matrix (rank {rank} of {size})")]
    Singular { rank: usize, size: usize },
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("not a pseudomanifold: {} ridge(s) not in exactly two facets", .ridges.len())]
    NotPseudomanifold { ridges: Vec<Vec<usize>> },
    #[error("angle {0}: only multiples of pi/4 are supported")]
    UnsupportedAngle(String),
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("points span only {rank} of {dim} dimensions")]
    RankDeficient { rank: usize, dim: usize },
    #[error("origin is not interior to the hull; polar is undefined")]
    Polarity,
    #[error("realization inconsistent with Gale evenness: {0}")]
    RealizationMismatch(String),
    #[error("incidence error: {0}")]
    Incidence(String),
    #[error("characteristic map does not cover facet {0}")]
    Coverage(usize),
    #[error("vector for facet {facet} is not primitive")]
    NonPrimitive { facet: usize },
    #[error("vertex {vertex}: determinant {det} is not a unit")]
    Unimodularity { vertex: String, det: String },
    #[error("normalization failed: {0}")]
    Normalization(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}
