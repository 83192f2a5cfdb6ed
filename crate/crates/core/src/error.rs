use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("coefficient {index} differs from its mirror coefficient {mirror} (symmetry degree {degree})")]
    SymmetryViolation { index: usize, mirror: usize, degree: usize },

    #[error("polynomial of degree {degree} exceeds the symmetry degree {bound}")]
    DegreeExceeded { degree: usize, bound: usize },

    #[error("malformed face: vertex {vertex} appears more than once")]
    MalformedFace { vertex: usize },

    #[error("complexes are not vertex-disjoint: vertex {vertex} is shared")]
    NotDisjoint { vertex: usize },

    #[error("vertex {vertex} has no color")]
    IncompleteColoring { vertex: usize },

    #[error("color {color} used twice in face {face:?}")]
    ColoringViolation { face: Vec<usize>, color: usize },

    #[error("color {color} is outside 1..={colors}")]
    ColorOutOfRange { color: usize, colors: usize },

    #[error("not a permutation of 1..={n}: {word:?}")]
    InvalidPermutation { n: usize, word: Vec<usize> },

    #[error("{what} = {value} exceeds the cap {cap}")]
    CapacityExceeded { what: &'static str, value: usize, cap: usize },

    #[error("index j = {j} is out of range for n = {n}")]
    IndexOutOfRange { n: usize, j: usize },

    #[error("rank {rank} is out of range: {reason}")]
    RankOutOfRange { rank: u64, reason: &'static str },

    #[error("there are no {modulus}-colored {size}-subsets")]
    NoColoredSubsets { modulus: usize, size: usize },

    #[error("{elements:?} is not a {modulus}-colored subset")]
    InvalidColoredSubset { elements: Vec<u64>, modulus: usize },

    #[error("cannot compare subsets of sizes {left} and {right}")]
    CardinalityMismatch { left: usize, right: usize },

    #[error("family is not downward closed: face {face:?} lacks the subset {missing:?}")]
    NotClosed { face: Vec<usize>, missing: Vec<usize> },

    #[error("face enumeration exceeded the limit of {limit} faces")]
    FaceLimitExceeded { limit: usize },

    #[error("invalid vector: {0}")]
    InvalidVector(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("vertex {vertex} collides with the reserved ids 1..={reserved}; relabel the complex first")]
    RelabelRequired { vertex: usize, reserved: usize },

    #[error("closure test failed for gamma = {gamma}: face {face:?} lacks {missing:?}")]
    TheoremRefuted { gamma: String, face: Vec<u64>, missing: Vec<u64> },
}
