//! One full period of a Ramanujan sum as an exact integer table.

use crate::error::CoreError;
use crate::factor::factorize;
use crate::fast::sum_fast_factored;

/// One period of `c_q(n)`: `values[n] == c_q(n)` for `n` in `0..q`.
///
/// The table always satisfies `values[0] == totient(q)`, and for `q > 1` it
/// sums to zero and is symmetric (`values[n] == values[q - n]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamanujanPeriod {
    q: u64,
    values: Vec<i64>,
}

impl RamanujanPeriod {
    /// The modulus.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// The period values, indexed by `n` in `0..q`.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `c_q(n)` for any integer `n`, read from the table modulo `q`.
    pub fn at(&self, n: i64) -> i64 {
        self.values[n.rem_euclid(self.q as i64) as usize]
    }

    pub fn into_values(self) -> Vec<i64> {
        self.values
    }
}

/// Tabulate one full period of `c_q(n)` via the factorized fast path,
/// factorizing `q` once.
pub fn period_table(q: u64) -> Result<RamanujanPeriod, CoreError> {
    let factorization = factorize(q)?;
    let values = (0..q)
        .map(|n| sum_fast_factored(&factorization, n as i64))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RamanujanPeriod { q, values })
}
