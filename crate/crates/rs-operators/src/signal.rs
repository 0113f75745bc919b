//! Finite real-valued sample sequences with a boundary-extension policy.

use crate::error::OperatorError;

/// How samples beyond the ends of a signal are read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Boundary {
    /// Out-of-range reads are 0.
    ZeroPad,
    /// Out-of-range reads clamp to the nearest edge sample. The default:
    /// it keeps constant signals constant under extension, so derivative
    /// responses stay zero right up to the edges.
    #[default]
    Replicate,
    /// Indices wrap modulo the signal length.
    PeriodicWrap,
}

/// A finite real-valued signal.
///
/// Always holds at least one sample and every sample is finite.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    samples: Vec<f64>,
    boundary: Boundary,
}

impl Signal {
    /// A signal with the default [`Boundary::Replicate`] extension.
    pub fn new(samples: Vec<f64>) -> Result<Self, OperatorError> {
        Self::with_boundary(samples, Boundary::default())
    }

    pub fn with_boundary(samples: Vec<f64>, boundary: Boundary) -> Result<Self, OperatorError> {
        if samples.is_empty() {
            return Err(OperatorError::EmptySignal);
        }
        if let Some(bad) = samples.iter().position(|v| !v.is_finite()) {
            return Err(OperatorError::NonFiniteSample(bad));
        }
        Ok(Signal { samples, boundary })
    }

    pub(crate) fn from_output(samples: Vec<f64>, boundary: Boundary) -> Self {
        debug_assert!(!samples.is_empty());
        debug_assert!(samples.iter().all(|v| v.is_finite()));
        Signal { samples, boundary }
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<f64> {
        self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the constructor rejects empty sample lists
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    /// Return a copy reading its ends through a different policy.
    pub fn rebound(&self, boundary: Boundary) -> Self {
        Signal {
            samples: self.samples.clone(),
            boundary,
        }
    }

    /// Read the sample at `index`, extending past the ends according to the
    /// boundary policy.
    pub fn extended(&self, index: i64) -> f64 {
        let len = self.samples.len() as i64;
        let resolved = match self.boundary {
            Boundary::ZeroPad => {
                if index < 0 || index >= len {
                    return 0.0;
                }
                index
            }
            Boundary::Replicate => index.clamp(0, len - 1),
            Boundary::PeriodicWrap => index.rem_euclid(len),
        };
        self.samples[resolved as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_non_finite() {
        assert_eq!(Signal::new(vec![]), Err(OperatorError::EmptySignal));
        assert_eq!(
            Signal::new(vec![1.0, f64::NAN]),
            Err(OperatorError::NonFiniteSample(1))
        );
        assert_eq!(
            Signal::new(vec![f64::INFINITY]),
            Err(OperatorError::NonFiniteSample(0))
        );
    }

    #[test]
    fn zero_pad_extension() {
        let s = Signal::with_boundary(vec![1.0, 2.0, 3.0], Boundary::ZeroPad).unwrap();
        assert_eq!(s.extended(-1), 0.0);
        assert_eq!(s.extended(0), 1.0);
        assert_eq!(s.extended(2), 3.0);
        assert_eq!(s.extended(3), 0.0);
    }

    #[test]
    fn replicate_extension() {
        let s = Signal::new(vec![1.0, 2.0, 3.0]).unwrap();
        assert_eq!(s.extended(-5), 1.0);
        assert_eq!(s.extended(1), 2.0);
        assert_eq!(s.extended(7), 3.0);
    }

    #[test]
    fn periodic_extension() {
        let s = Signal::with_boundary(vec![1.0, 2.0, 3.0], Boundary::PeriodicWrap).unwrap();
        assert_eq!(s.extended(-1), 3.0);
        assert_eq!(s.extended(3), 1.0);
        assert_eq!(s.extended(4), 2.0);
        assert_eq!(s.extended(-3), 1.0);
    }
}
