use rs_core::CoreError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("modulus must be a positive integer")]
    ZeroModulus,

    #[error("moduli must be coprime, got p={p}, q={q}")]
    NotCoprime { p: u64, q: u64 },

    /// The product identity is stated for ordered moduli `p > q >= 1`.
    #[error("expected p > q >= 1, got p={p}, q={q}")]
    OrderViolation { p: u64, q: u64 },

    #[error("product modulus p*q overflows 64 bits")]
    ModulusOverflow,

    #[error(transparent)]
    Core(#[from] CoreError),
}
