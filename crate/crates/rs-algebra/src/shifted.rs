//! Shifted Ramanujan sequences `c_q(n - alpha)`.

use rs_core::sum_fast;

use crate::error::AlgebraError;

/// A Ramanujan sequence delayed by `alpha`: evaluates `c_q(n - alpha)`.
///
/// The shift is stored reduced modulo `q`; the underlying sequence is
/// `q`-periodic, so nothing is lost.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftedSequence {
    q: u64,
    alpha: u64,
}

impl ShiftedSequence {
    pub fn new(q: u64, alpha: i64) -> Result<Self, AlgebraError> {
        if q == 0 {
            return Err(AlgebraError::ZeroModulus);
        }
        Ok(ShiftedSequence {
            q,
            alpha: alpha.rem_euclid(q as i64) as u64,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The reduced shift, in `0..q`.
    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    /// `c_q(n - alpha)`.
    pub fn eval(&self, n: i64) -> Result<i64, AlgebraError> {
        // Reduce before subtracting so extreme n cannot wrap.
        let reduced = n.rem_euclid(self.q as i64) - self.alpha as i64;
        Ok(sum_fast(self.q, reduced)?)
    }
}
