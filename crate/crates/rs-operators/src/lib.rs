//! Derivative operators built from Ramanujan sums.
//!
//! One period of `c_q(n)` used as FIR taps behaves as a first derivative:
//! zero on constants, responsive at step onsets, a nonzero constant along
//! ramps. Recentering the same period by `(q-1)/2` (odd `q`) produces a
//! symmetric zero-sum window that behaves as a second derivative: it also
//! annihilates ramps, and maps quadratics to a constant.
//!
//! [`RamanujanKernel`] builds either variant, [`Signal`] carries samples
//! plus a boundary-extension policy, and [`verify_first_derivative`] /
//! [`verify_second_derivative`] check the derivative properties on generated
//! signals, reporting structured results.

mod error;
mod kernel;
mod signal;
pub mod suite;
mod verify;

pub use error::OperatorError;
pub use kernel::{KernelVariant, RamanujanKernel};
pub use signal::{Boundary, Signal};
pub use verify::{
    ramp_constant, verify_first_derivative, verify_second_derivative, Check, VerificationReport,
    CONVOLUTION_TOLERANCE, RAMP_TOLERANCE,
};
