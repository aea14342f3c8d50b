use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("column {column}: {reason} (at `{token}`)")]
    Parse {
        column: usize,
        token: String,
        reason: String,
    },

    #[error("not a permutation: {0}")]
    NotBijective(String),

    #[error("degree must be at least 1")]
    ZeroDegree,

    #[error("at least one generator is required")]
    NoGenerators,

    #[error("group enumeration exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("{0} is not an element of the parent group")]
    NotInGroup(String),

    #[error("subgroups belong to different parent groups")]
    MixedParents,

    #[error("{p} does not divide the group order {order}")]
    PrimeNotDividing { p: u64, order: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{family} parameter {value} outside {min}..={max}")]
    OutOfBounds {
        family: &'static str,
        value: u64,
        min: u64,
        max: u64,
    },

    #[error("tuple size {0} unsupported (expected 2 or 3)")]
    TupleSize(usize),

    #[error(
        "factorization budget of {budget} multiplications exceeded \
         ({used} used, {systems_tried} of {systems_total} systems tried, {successes} successes)"
    )]
    BudgetExceeded {
        budget: u64,
        used: u64,
        systems_tried: u64,
        systems_total: u64,
        successes: u64,
    },

    #[error("line {line}, column {column}: {message}")]
    GroupFile {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("catalog line {line}: {message}")]
    Catalog { line: usize, message: String },

    #[error("{path}: {message}")]
    Io { path: String, message: String },

    #[error("unknown group name `{0}`")]
    UnknownGroup(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Enumeration caps and search budgets, as opposed to bad input.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::CapExceeded { .. } | Error::BudgetExceeded { .. }
        )
    }
}
