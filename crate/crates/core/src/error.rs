use thiserror::Error;

use crate::kernel::HFSet;

/// Which operand of a binary construction a failure refers to.
///
/// For compositions and embeddings `Left` is the forward map (the one applied
/// first, `A -> B`) and `Right` the map coming back or applied second.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Left => f.write_str("left"),
            Side::Right => f.write_str("right"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("enumeration would produce {requested} elements, limit is {limit}")]
    LimitExceeded { requested: u128, limit: usize },
    #[error("not a relation between the given carriers")]
    NotARelation,
    #[error("set is not a subset of the source carrier")]
    NotASubset,
    #[error("{0} operand is not a total function between the given carriers")]
    NotAFunction(Side),
    #[error("not a partial function between the given carriers")]
    NotAPFunc,
    #[error("{0} is not in the domain of the function")]
    NotInDomain(HFSet),
    #[error("{0} is not a member of the carrier")]
    NotAMember(HFSet),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} map is not an embedding")]
    NotAnEmbedding(Side),
    #[error("{side} inverse law fails at {point}")]
    NotInverse { side: Side, point: HFSet },
    #[error("unbound variable `{0}`")]
    UnboundVar(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
