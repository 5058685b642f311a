use thiserror::Error;

use crate::monideal::MonomialIdeal;

/// Errors raised by the algebra routines.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, got {found}")]
    Dimension { expected: usize, found: usize },

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("generator {index} is not homogeneous")]
    NotHomogeneous { index: usize },

    #[error("the linear change of coordinates is singular")]
    SingularChange,

    #[error("operation unsupported in characteristic {0}")]
    UnsupportedCharacteristic(u64),

    #[error("no initial ideal occurred more than once in {} trials", .0.len())]
    GinAmbiguous(Vec<MonomialIdeal>),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("oracle input too large: {multidegrees} multidegrees exceed the cap of {cap}")]
    OracleTooLarge { multidegrees: u128, cap: u128 },

    #[error("the quotient by the unit ideal is zero")]
    UnitIdeal,

    #[error("the ideal must be nonzero")]
    ZeroIdeal,

    #[error("sequence x_n, ..., x_1 is not filter regular: annihilator module {row} has infinite length")]
    NotFilterRegular { row: usize },

    #[error("the forms do not form a system of parameters: quotient has dimension {dimension}")]
    NotSystemOfParameters { dimension: i64 },

    #[error("expected {expected} linear forms (the Krull dimension), got {found}")]
    ReductionSpec { expected: usize, found: usize },

    #[error("no candidate reduction was a system of parameters within a budget of {0}")]
    SearchFailure(usize),

    #[error("invalid involutive basis: {0}")]
    InvalidBasis(String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("unknown variable '{name}' at line {line}, column {column}")]
    UnknownVariable { name: String, line: usize, column: usize },

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
