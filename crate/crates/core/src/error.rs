//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced by ring construction and analysis.
///
/// `Violation` is special: it reports a broken internal consistency check
/// (a relation that is provable for valid inputs). It never indicates bad
/// input; it indicates a bug in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("{0} is not prime")]
    NonPrime(u64),

    #[error("polynomial {poly:?} is reducible over F_{p} (divisible by {divisor:?})")]
    Reducible {
        p: u64,
        poly: Vec<u64>,
        divisor: Vec<u64>,
    },

    #[error("ring size {size} exceeds the enumeration bound {bound}")]
    SizeExceeded { size: u128, bound: u128 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("cayley table is not a group: {0}")]
    NotAGroup(String),

    #[error("structure constants do not define a unital associative algebra: {0}")]
    InvalidAlgebra(String),

    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),

    #[error("element {b} does not witness noncentrality of idempotent {e}")]
    NotAWitness { e: usize, b: usize },

    #[error("element {0} does not square to zero")]
    NotSquareZero(usize),

    #[error("idempotents {e1} and {e2} are not {kind}-equivalent")]
    NotEquivalent { e1: usize, e2: usize, kind: String },

    #[error("vertex {0} is out of range")]
    BadVertex(usize),

    #[error("map is not a graph automorphism: adjacency of ({from},{to}) differs from ({image_from},{image_to})")]
    NotGraphAutomorphism {
        from: usize,
        to: usize,
        image_from: usize,
        image_to: usize,
    },

    #[error("{0} is not an F_q-algebra")]
    NotAlgebra(String),

    #[error("invalid ring spec: {0}")]
    InvalidSpec(String),

    #[error("consistency violation in {context}: {detail}")]
    Violation { context: &'static str, detail: String },
}
