//! Products of shifted Ramanujan sequences.
//!
//! For coprime moduli, `c_p(n - a1) * c_q(n - a2)` is itself one period of
//! `c_pq` under a delay. Matching the complex-exponential expansions term by
//! term forces the delay `s` to satisfy `s = a1 (mod p)` and `s = a2 (mod q)`
//! simultaneously, so the predicted shift is that unique residue mod `pq`
//! (when the two shifts are equal it collapses to their common value).
//! [`check_product`] never assumes this: it recomputes the product by brute
//! force and reports the first disagreement, if any.

use rs_core::{gcd, mod_inverse, period_table, RamanujanPeriod};

use crate::error::AlgebraError;

/// One period of a predicted product sequence: `values[n] = c_pq(n - shift)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductResult {
    modulus: u64,
    shift: u64,
    values: Vec<i64>,
}

impl ProductResult {
    /// The combined modulus `p * q`.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The predicted delay, reduced mod `p * q`.
    pub fn shift(&self) -> u64 {
        self.shift
    }

    /// `values[n] = c_pq(n - shift)` for `n` in `0..pq`.
    pub fn values(&self) -> &[i64] {
        &self.values
    }
}

/// Outcome of brute-forcing a product against its prediction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductCheck {
    pub equal: bool,
    /// First differing index, when any.
    pub counterexample: Option<ProductMismatch>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductMismatch {
    pub n: u64,
    pub product: i64,
    pub predicted: i64,
}

fn validate(p: u64, q: u64) -> Result<u64, AlgebraError> {
    if q == 0 {
        return Err(AlgebraError::ZeroModulus);
    }
    if p <= q {
        return Err(AlgebraError::OrderViolation { p, q });
    }
    if gcd(p, q) != 1 {
        return Err(AlgebraError::NotCoprime { p, q });
    }
    p.checked_mul(q).ok_or(AlgebraError::ModulusOverflow)
}

/// The unique residue mod `pq` congruent to `a1` mod `p` and `a2` mod `q`.
fn combined_shift(p: u64, a1: u64, q: u64, a2: u64) -> u64 {
    let inv = mod_inverse(p % q, q).expect("p and q are coprime");
    // s = a1 + p * t with t chosen so that s = a2 (mod q).
    let t = (a2 + q - a1 % q) % q * inv % q;
    a1 + p * t
}

/// Predict the product `c_p(n - alpha1) * c_q(n - alpha2)` as one period of
/// a shifted `c_pq`, for coprime `p > q >= 1`.
///
/// Shifts are reduced (`alpha1` mod `p`, `alpha2` mod `q`) before combining;
/// equal reduced shifts yield that shift itself.
pub fn predict_product(
    p: u64,
    q: u64,
    alpha1: i64,
    alpha2: i64,
) -> Result<ProductResult, AlgebraError> {
    let modulus = validate(p, q)?;
    let a1 = alpha1.rem_euclid(p as i64) as u64;
    let a2 = alpha2.rem_euclid(q as i64) as u64;
    let shift = combined_shift(p, a1, q, a2);
    debug_assert_eq!(shift % p, a1);
    debug_assert_eq!(shift % q, a2);
    let table = period_table(modulus)?;
    let values = (0..modulus)
        .map(|n| table.at(n as i64 - shift as i64))
        .collect();
    Ok(ProductResult {
        modulus,
        shift,
        values,
    })
}

/// Brute-force one period of `c_p(n - alpha1) * c_q(n - alpha2)`.
pub fn shifted_product_period(
    p: u64,
    q: u64,
    alpha1: i64,
    alpha2: i64,
) -> Result<Vec<i64>, AlgebraError> {
    let modulus = validate(p, q)?;
    let table_p = period_table(p)?;
    let table_q = period_table(q)?;
    Ok((0..modulus as i64)
        .map(|n| table_p.at(n - alpha1) * table_q.at(n - alpha2))
        .collect())
}

/// Compare the brute-force product against [`predict_product`] over a full
/// period. Disagreement is a result, not an error.
pub fn check_product(
    p: u64,
    q: u64,
    alpha1: i64,
    alpha2: i64,
) -> Result<ProductCheck, AlgebraError> {
    let predicted = predict_product(p, q, alpha1, alpha2)?;
    let product = shifted_product_period(p, q, alpha1, alpha2)?;
    for (n, (&got, &expected)) in product.iter().zip(predicted.values()).enumerate() {
        if got != expected {
            return Ok(ProductCheck {
                equal: false,
                counterexample: Some(ProductMismatch {
                    n: n as u64,
                    product: got,
                    predicted: expected,
                }),
            });
        }
    }
    Ok(ProductCheck {
        equal: true,
        counterexample: None,
    })
}

/// Find the delay `s` (if any) such that `values[n] == table.at(n - s)` for
/// every `n`, given `values` spanning exactly one period of the table's
/// modulus.
///
/// A true shifted copy attains the table's peak `c_q(0) = phi(q)` exactly at
/// `n = s`, so only peak positions need a full scan.
pub fn find_cyclic_shift(values: &[i64], table: &RamanujanPeriod) -> Option<u64> {
    let modulus = table.q();
    if values.len() as u64 != modulus {
        return None;
    }
    let peak = table.values()[0];
    for (candidate, &value) in values.iter().enumerate() {
        if value != peak {
            continue;
        }
        let matches = (0..modulus as i64).all(|n| values[n as usize] == table.at(n - candidate as i64));
        if matches {
            return Some(candidate as u64);
        }
    }
    None
}
