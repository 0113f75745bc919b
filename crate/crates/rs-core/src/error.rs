use thiserror::Error;

/// Errors reported by the exact-arithmetic layer.
///
/// Overflow is always an explicit error: values are 64-bit signed and a
/// silent wraparound would corrupt the exactness guarantees downstream
/// code relies on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    /// An argument that must be a positive integer was zero.
    #[error("argument must be a positive integer, got 0")]
    ZeroValue,

    /// A prime-only operation was handed a composite (or 0/1).
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// Prime-power operations require an exponent of at least 1.
    #[error("prime-power exponent must be at least 1")]
    ZeroExponent,

    /// An intermediate value left the signed 64-bit range.
    #[error("64-bit overflow while computing {0}")]
    Overflow(&'static str),
}
