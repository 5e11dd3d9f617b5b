use thiserror::Error;

/// Every failure mode of the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table entry ({row},{col}) = {value} is outside 0..{n}")]
    NotClosed {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },
    #[error("table is not {n}x{n}")]
    MalformedTable { n: usize },
    #[error("element {identity} is not a two-sided identity")]
    NoIdentity { identity: usize },
    #[error("row or column {index} of the table is not a permutation (repeated value {value})")]
    NotLatin { index: usize, value: usize },
    #[error("operation is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("invariant factor {value} at position {index} is smaller than 2")]
    InvalidInvariant { index: usize, value: u64 },
    #[error("a ring needs at least one invariant factor")]
    EmptyInvariants,
    #[error("structure constant ({i},{j}) has additive order {order}, which does not divide gcd = {gcd}")]
    IncompatibleOrder {
        i: usize,
        j: usize,
        order: u64,
        gcd: u64,
    },
    #[error("malformed coefficient vector: {0}")]
    MalformedVector(String),
    #[error("order {order} exceeds the cap of {cap}")]
    OrderOverflow { order: u128, cap: u128 },
    #[error("subgroup is not normal: conjugating {member} by {by} leaves it")]
    NotNormal { member: usize, by: usize },
    #[error("mask is not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("group is not abelian: {a} and {b} do not commute")]
    NotAbelian { a: usize, b: usize },
    #[error("ring is not nilpotent")]
    NotNilpotent,
    #[error("group is not nilpotent of class at most 2")]
    NotClass2,
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("invalid family parameters: {0}")]
    ParamError(String),
    #[error("family order {order} exceeds the cap of {cap}")]
    CapExceeded { order: u128, cap: u128 },
    #[error("search space has {candidates} candidates, budget is {budget}")]
    BudgetExceeded { candidates: u128, budget: u128 },
    #[error("cannot take the spectrum of an empty family")]
    EmptyFamily,
    #[error("invalid document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
