use thiserror::Error;

/// Errors surfaced by ring construction, parsing, and ideal-level operations.
#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("operands live in different rings")]
    RingMismatch,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown variable `{name}` at byte {pos}")]
    UnknownVariable { name: String, pos: usize },

    #[error("variable `{name}` has no image under the substitution map")]
    UnmappedVariable { name: String },

    #[error("polynomial is not a member of the ideal")]
    NotMember,

    #[error("reduction step budget of {budget} exhausted")]
    StepBudgetExceeded { budget: u64 },

    #[error("coefficient exceeded the {limit_bits}-bit growth guard")]
    CoefficientBlowup { limit_bits: u64 },

    #[error("saturation did not stabilize within {cap} quotient steps")]
    SaturationCapExceeded { cap: u32 },

    #[error("ideal is the unit ideal; operation requires a proper ideal")]
    NotProper,

    #[error("quotient by the zero polynomial")]
    ZeroDivisor,

    #[error("the required {dprime}-th roots of unity are not realizable in this field")]
    RootsUnavailable { dprime: u32 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid label: {0}")]
    InvalidLabel(String),

    #[error("ideal file error: {0}")]
    File(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
