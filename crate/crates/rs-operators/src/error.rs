use rs_core::CoreError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperatorError {
    /// Kernels are only defined for moduli of at least 2.
    #[error("kernel modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),

    /// Second-derivative kernels require an odd modulus; even moduli act as
    /// first derivatives under every shift.
    #[error("second-derivative kernel requires an odd modulus, got {0}")]
    EvenModulus(u64),

    /// Signals must hold at least one sample.
    #[error("signal must contain at least one sample")]
    EmptySignal,

    /// Signals must be finite real values.
    #[error("signal sample at index {0} is not finite")]
    NonFiniteSample(usize),

    /// The verifiers need enough interior room to observe the pure
    /// convolution away from boundary effects.
    #[error("signal of {got} samples is too short for modulus {q}: need at least {required}")]
    SignalTooShort { q: u64, got: usize, required: usize },

    #[error(transparent)]
    Core(#[from] CoreError),
}
