use alloc::string::String;

/// Errors raised by the exact kernel and the identity checks.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,
    #[error("exp requires zero constant term")]
    NonZeroConstantTerm,
    #[error("pole")]
    Pole,
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("cell ({row},{col}) lies outside the shape")]
    CellOutsideShape { row: usize, col: usize },
    #[error("cell ({row},{col}) is not an addable corner")]
    NotAddable { row: usize, col: usize },
    #[error("cell ({row},{col}) is not a removable corner")]
    NotRemovable { row: usize, col: usize },
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),
    #[error("value {value} out of range 1..={max}")]
    OutOfRange { value: usize, max: usize },
    #[error("w(0) is a pole of the weight")]
    ZeroWeightArgument,
    #[error("requires distinct values")]
    NotDistinct,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// An exact computation contradicted a proven identity.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;
