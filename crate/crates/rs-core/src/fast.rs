//! Fast exact evaluation of Ramanujan sums.
//!
//! Pure integer arithmetic throughout: a closed form at prime moduli, a
//! divisibility branch lifting primes to prime powers (higher-order sums are
//! interpolated copies of lower-order ones), and multiplicative composition
//! over the prime factorization for everything else.

use crate::arith::is_prime;
use crate::error::CoreError;
use crate::factor::{factorize, Factorization};

/// `c_p(n)` for prime `p`: `p - 1` when `p | n`, else `-1`.
pub fn sum_prime(p: u64, n: i64) -> Result<i64, CoreError> {
    if !is_prime(p) {
        return Err(CoreError::NotPrime(p));
    }
    let p = i64::try_from(p).map_err(|_| CoreError::Overflow("prime modulus"))?;
    Ok(if n.rem_euclid(p) == 0 { p - 1 } else { -1 })
}

/// `c_{p^l}(n)` for prime `p` and `l >= 1`.
///
/// Equals `p^(l-1) * c_p(n / p^(l-1))` when `p^(l-1)` divides `n`, and 0
/// otherwise: the inner geometric sum vanishes unless the divisibility
/// condition holds.
pub fn sum_prime_power(p: u64, l: u32, n: i64) -> Result<i64, CoreError> {
    if l == 0 {
        return Err(CoreError::ZeroExponent);
    }
    if !is_prime(p) {
        return Err(CoreError::NotPrime(p));
    }
    let p = i64::try_from(p).map_err(|_| CoreError::Overflow("prime modulus"))?;
    if l == 1 {
        return Ok(if n.rem_euclid(p) == 0 { p - 1 } else { -1 });
    }
    let stride = p
        .checked_pow(l - 1)
        .ok_or(CoreError::Overflow("p^(l-1)"))?;
    let modulus = stride.checked_mul(p).ok_or(CoreError::Overflow("p^l"))?;
    let n = n.rem_euclid(modulus);
    if n % stride != 0 {
        return Ok(0);
    }
    let inner = if (n / stride) % p == 0 { p - 1 } else { -1 };
    stride
        .checked_mul(inner)
        .ok_or(CoreError::Overflow("p^(l-1) * c_p"))
}

/// `c_q(n)` over an existing factorization of `q`: the product of the
/// prime-power sums. An empty factorization (q = 1) yields 1.
pub fn sum_fast_factored(factorization: &Factorization, n: i64) -> Result<i64, CoreError> {
    let mut acc = 1i64;
    for &(p, r) in factorization.factors() {
        let term = sum_prime_power(p, r, n)?;
        if term == 0 {
            return Ok(0);
        }
        acc = acc
            .checked_mul(term)
            .ok_or(CoreError::Overflow("prime-power product"))?;
    }
    Ok(acc)
}

/// `c_q(n)` by factorizing `q` and composing the prime-power sums.
pub fn sum_fast(q: u64, n: i64) -> Result<i64, CoreError> {
    sum_fast_factored(&factorize(q)?, n)
}
