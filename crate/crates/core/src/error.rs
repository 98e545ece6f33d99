use thiserror::Error;

use crate::rootsys::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inadmissible rank {rank} for type {family}; admissible: {admissible}")]
    InadmissibleRank {
        family: Family,
        rank: usize,
        admissible: &'static str,
    },
    #[error("unknown root system family {0:?}; expected one of A, B, C, D, E, F, G")]
    UnknownFamily(String),
    #[error("dimension mismatch: expected a vector of length {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("{0:?} is not a root of this system")]
    NotARoot(Vec<i64>),
    #[error("single root length: {0} has no short roots")]
    SingleRootLength(String),
    #[error("highest weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("node {node} is out of range 1..={rank}")]
    NodeOutOfRange { node: usize, rank: usize },
    #[error("unknown real form {name:?}: {reason}; grammar: {grammar}")]
    UnknownRealForm {
        name: String,
        reason: String,
        grammar: &'static str,
    },
    #[error("type mismatch: real form is of type {real_form}, parabolic is of type {parabolic}")]
    TypeMismatch {
        real_form: String,
        parabolic: String,
    },
    #[error("{0} is not of hermitian type")]
    NotHermitian(String),
    #[error("painting semantics unavailable for the non-inner form {0}")]
    NotInner(String),
    #[error("{0} is not an enlargement pair in the registry")]
    NotInRegistry(String),
    #[error("no branching row for {0}")]
    NoBranchingRow(String),
    #[error("a product needs at least one factor")]
    EmptyProduct,
}
