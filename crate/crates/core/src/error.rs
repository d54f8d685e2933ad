use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {0} outside supported range 1..=64")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("missing edge {{{0}, {1}}}")]
    MissingEdge(usize, usize),
    #[error("codegree requires two distinct vertices, got {0} twice")]
    IdenticalVertices(usize),
    #[error("need at least {min} vertices, got {got}")]
    TooFewVertices { min: usize, got: usize },
    #[error("at most {max} vertices supported here, got {got}")]
    TooManyVertices { max: usize, got: usize },
    #[error("graph is not planar")]
    NotPlanar,
    #[error("graph is disconnected; a sphere embedding needs a connected graph")]
    Disconnected,
    #[error("graph is not maximal planar")]
    NotMaximalPlanar,
    #[error("embedding is not a triangulation")]
    NotTriangulation,
    #[error("rotation at vertex {0} is not a permutation of its neighborhood")]
    BadRotation(usize),
    #[error("rotation system is not a sphere embedding (Euler count {faces} faces, expected {expected})")]
    NotSphere { faces: usize, expected: usize },
    #[error("illegal flip of edge {{{0}, {1}}}")]
    IllegalFlip(usize, usize),
    #[error("stacking step {step}: face index {index} out of range ({faces} faces)")]
    StackingIndex {
        step: usize,
        index: usize,
        faces: usize,
    },
    #[error("stacking sequence has {got} entries, expected {expected}")]
    StackingLength { got: usize, expected: usize },
    #[error("vertex {vertex} has degree {degree}, expected {expected}")]
    WrongDegree {
        vertex: usize,
        degree: usize,
        expected: usize,
    },
    #[error("pattern parameter k={k} not allowed: {reason}")]
    BadPatternParameter { k: usize, reason: &'static str },
    #[error("path length k={0} outside supported range 2..=6")]
    PathLength(usize),
    #[error("{formula} is undefined at {argument}: requires {constraint}")]
    FormulaDomain {
        formula: &'static str,
        argument: String,
        constraint: &'static str,
    },
    #[error("count does not fit in 64 bits")]
    CountOverflow,
    #[error("unknown pattern {0:?}")]
    UnknownPattern(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
