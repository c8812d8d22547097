use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter out of domain: {0}")]
    ParameterDomain(String),
    #[error("division by zero in GF(2^{degree})")]
    DivisionByZero { degree: u32 },
    #[error("{what} = {value} outside table range 0..={bound}")]
    Range { what: &'static str, value: u64, bound: u64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("closed formula unsupported for q0 = {q0} (needs q0 >= 4); use the semigroup oracle")]
    UnsupportedRange { q0: u64 },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("structural check failed: {0}")]
    Defect(String),
    #[error("reduction input has pole order {norm}, above the growth limit {limit}")]
    GrowthLimit { norm: u64, limit: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
