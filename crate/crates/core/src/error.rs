use thiserror::Error;

/// Everything that can go wrong while building or checking a structure.
///
/// Several variants (`TheoremViolation`, `SeparationConnectivityViolation`,
/// `ClaimViolation`, `HopBoundViolation`, `GadgetSearchFailed`) mark broken
/// internal guarantees rather than bad input. They are surfaced as errors so a
/// caller can report them, but they should never fire.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("points {first} and {second} coincide")]
    DuplicatePoint { first: usize, second: usize },

    #[error("point {index} has a non-finite coordinate")]
    NonFiniteCoordinate { index: usize },

    #[error("wedge {index} is not anchored at its point")]
    ApexMismatch { index: usize },

    #[error("expected {expected} wedges, got {actual}")]
    WedgeCountMismatch { expected: usize, actual: usize },

    #[error("need at least {needed} points, got {actual}")]
    TooFewPoints { needed: usize, actual: usize },

    #[error("at most {limit} points supported, got {actual}")]
    TooManyPoints { limit: usize, actual: usize },

    #[error("vertex index {index} out of range for {len} vertices")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("no quadruplet orientation passed connectivity and coverage")]
    GadgetSearchFailed,

    #[error("gadget postcondition failed: {0}")]
    GadgetInvariant(String),

    #[error("no mutual edge between triplet groups {first} and {second}")]
    TheoremViolation { first: usize, second: usize },

    #[error("no mutual edge between {context}")]
    SeparationConnectivityViolation { context: String },

    #[error("unit disk graph is not connected")]
    DisconnectedUdg,

    #[error("component {component} of size < 3 has a neighbour outside size-3 components")]
    ClaimViolation { component: usize },

    #[error("invalid component partition: {0}")]
    PartitionInvalid(String),

    #[error("UDG edge ({u}, {v}) needs {hops:?} hops, bound is {bound}")]
    HopBoundViolation {
        u: usize,
        v: usize,
        hops: Option<usize>,
        bound: usize,
    },

    #[error("edge ({u}, {v}) has length {length}, bound is {bound}")]
    EdgeTooLong {
        u: usize,
        v: usize,
        length: f64,
        bound: f64,
    },

    #[error("grid graph is not two-colourable")]
    NotBipartiteLayout,

    #[error("grid vertex {vertex} has degree {degree}, at most 3 allowed")]
    DegreeTooHigh { vertex: usize, degree: usize },

    #[error("grid graph is not connected")]
    DisconnectedGrid,

    #[error("grid vertex {index} is not a lattice point")]
    NotOnLattice { index: usize },

    #[error("no augmentation of the top vertex avoids extra unit edges")]
    HexAugmentationBlocked,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
