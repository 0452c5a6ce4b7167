use thiserror::Error;

use crate::lattice::Monomial;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("node {node} outside 1..={n}")]
    NodeOutOfRange { node: i64, n: i64 },
    #[error("operation requires root-of-unity mode")]
    RequiresRootOfUnity,
    #[error("operation requires generic-q mode")]
    RequiresGenericQ,
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("move not applicable at column {column}: {reason}")]
    MoveNotApplicable { column: i64, reason: String },
    #[error("translation {delta} is not a multiple of {period}")]
    BadTranslation { delta: i64, period: i64 },
    #[error("monomial {0} is not dominant")]
    NotDominant(Monomial),
    #[error("monomial {0} mixes parity classes")]
    MixedParity(Monomial),
    #[error("points do not form a snake")]
    NotASnake,
    #[error("parity mismatch: |j-i| and |v-k| differ mod 2")]
    ParityMismatch,
    #[error("correction recursion exceeded depth {0}")]
    Nontermination(usize),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("KR degree {z} outside 1..={ell}")]
    KrDegree { z: i64, ell: i64 },
    #[error("no implemented family covers {0}")]
    UnsupportedFamily(Monomial),
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
