//! Convolution kernels built from one period of a Ramanujan sum.

use std::ops::Range;

use rs_core::period_table;

use crate::error::OperatorError;
use crate::signal::Signal;

/// Which derivative a kernel realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelVariant {
    /// One period of `c_q(n)` applied causally: zero on constants, nonzero
    /// at step onsets, a nonzero constant along ramps.
    FirstDerivative,
    /// The same period recentered by `(q-1)/2` (odd `q` only): symmetric,
    /// zero-sum, and additionally zero along constant-slope ramps.
    SecondDerivative,
}

/// An integer FIR kernel of length `q` with an output-alignment anchor.
///
/// Applying the kernel computes
/// `out[n] = sum_k taps[k] * x(n + anchor - k)`,
/// so `anchor = 0` is the plain causal convolution and `anchor = (q-1)/2`
/// centers the (symmetric) second-derivative window on its input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamanujanKernel {
    q: u64,
    taps: Vec<i64>,
    variant: KernelVariant,
    anchor: i64,
}

impl RamanujanKernel {
    /// First-derivative kernel: taps are one period of `c_q(n)` as is.
    pub fn first(q: u64) -> Result<Self, OperatorError> {
        if q < 2 {
            return Err(OperatorError::ModulusTooSmall(q));
        }
        let taps = period_table(q)?.into_values();
        Ok(RamanujanKernel {
            q,
            taps,
            variant: KernelVariant::FirstDerivative,
            anchor: 0,
        })
    }

    /// Second-derivative kernel: `taps[i] = c_q(i - (q-1)/2)`, odd `q >= 3`.
    pub fn second(q: u64) -> Result<Self, OperatorError> {
        if q < 2 {
            return Err(OperatorError::ModulusTooSmall(q));
        }
        if q.is_multiple_of(2) {
            return Err(OperatorError::EvenModulus(q));
        }
        let period = period_table(q)?;
        let shift = (q - 1) / 2;
        let taps = (0..q)
            .map(|i| period.values()[((i + q - shift) % q) as usize])
            .collect();
        Ok(RamanujanKernel {
            q,
            taps,
            variant: KernelVariant::SecondDerivative,
            anchor: shift as i64,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn taps(&self) -> &[i64] {
        &self.taps
    }

    pub fn variant(&self) -> KernelVariant {
        self.variant
    }

    /// Output-alignment offset: 0 (causal) or `(q-1)/2` (centered).
    pub fn anchor(&self) -> i64 {
        self.anchor
    }

    /// Filter a signal. The output has the input's length and boundary
    /// policy; samples past the ends are read through that policy.
    pub fn apply(&self, signal: &Signal) -> Signal {
        let len = signal.len() as i64;
        let mut out = Vec::with_capacity(signal.len());
        for n in 0..len {
            let mut acc = 0.0;
            for (k, &tap) in self.taps.iter().enumerate() {
                acc += tap as f64 * signal.extended(n + self.anchor - k as i64);
            }
            out.push(acc);
        }
        Signal::from_output(out, signal.boundary())
    }

    /// Output indices of a length-`len` signal computed purely from real
    /// samples, with no boundary extension consulted: output `n` reads
    /// inputs `n + anchor - (q-1) ..= n + anchor`.
    pub fn interior(&self, len: usize) -> Range<usize> {
        let start = self.q as i64 - 1 - self.anchor;
        let end = len as i64 - 1 - self.anchor; // inclusive
        if end < start {
            return 0..0;
        }
        debug_assert!(start >= 0);
        start as usize..(end + 1) as usize
    }
}
