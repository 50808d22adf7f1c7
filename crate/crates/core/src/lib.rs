//! Finite multirings/hyperfields, pre-special and special groups, reduced
//! K-theory, truncated inductive graded rings and Witt rings, all represented
//! as explicit tables over small carriers and verified by exhaustive checking.
//!
//! Every structure in this crate is immutable after construction and every
//! operation is a pure function, so values can be shared freely across
//! threads.

pub mod gf2;
pub mod verdict;
pub mod hyperfield;
pub mod igr;
pub mod ktheory;
pub mod pool;
pub mod sgroup;
pub mod witt;

use thiserror::Error;

/// Hard cap on carrier size: axiom checking is cubic (and worse) in the
/// number of elements and set-valued rows are stored as `u64` masks.
pub const MAX_CARRIER: usize = 64;

/// Default truncation level for graded towers.
pub const DEFAULT_TRUNCATION: usize = 4;

/// Default cap on the number of symbol tuples per K-theory level.
pub const DEFAULT_TUPLE_CAP: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("carrier has {0} elements, maximum is {max}", max = MAX_CARRIER)]
    CarrierTooLarge(usize),
    #[error("parameter {0} must be prime")]
    NotPrime(usize),
    #[error("invalid parameter: {0}")]
    BadParam(String),
    #[error("{0} is not a hyperfield")]
    NotHyperfield(String),
    #[error("{0} is not hyperbolic")]
    NotHyperbolic(String),
    #[error("{0} is not a pre-special hyperfield")]
    NotPreSpecial(String),
    #[error("{0} is not a special group")]
    NotSpecialGroup(String),
    #[error("subset is not multiplicatively admissible: {0}")]
    BadSubset(String),
    #[error("map is not a morphism: {0}")]
    NotMorphism(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("truncation mismatch: expected {expected}, got {got}")]
    TruncationMismatch { expected: usize, got: usize },
    #[error("tuple cap exceeded: level needs {needed} tuples, cap is {cap}")]
    CapExceeded { needed: usize, cap: usize },
    #[error("tower is not generated by level 1")]
    NotLevelOneGenerated,
    #[error("tower is not in the hyperbolic subcategory")]
    NotIgrH,
    #[error("tower is not in the K-theoretic subcategory")]
    NotIgrPlus,
    #[error("no stabilization witness within truncation: {0}")]
    NoStabilization(String),
    #[error("membership query undecided at bound {bound}: {query}")]
    Undecided { query: String, bound: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
