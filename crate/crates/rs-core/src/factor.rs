//! Integer factorization by trial division.

use crate::arith::is_prime;
use crate::error::CoreError;

/// A positive integer together with its prime factorization.
///
/// Factors are stored as `(prime, exponent)` pairs with strictly increasing
/// primes and every exponent at least 1; their product reconstructs `n`.
/// `Factorization` of 1 has an empty factor list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// The factored value.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(prime, exponent)` pairs in increasing prime order.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Euler's totient of `n`, computed as the product of `p^(r-1) * (p-1)`.
    pub fn totient(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, r)| p.pow(r - 1) * (p - 1))
            .product()
    }
}

/// Factorize `n` by trial division up to its square root.
///
/// Rejects `n == 0`; `factorize(1)` yields an empty factor list.
pub fn factorize(n: u64) -> Result<Factorization, CoreError> {
    if n == 0 {
        return Err(CoreError::ZeroValue);
    }
    let mut rest = n;
    let mut factors: Vec<(u64, u32)> = Vec::new();
    let mut strip = |p: u64, rest: &mut u64| {
        let mut exp = 0u32;
        while (*rest).is_multiple_of(p) {
            *rest /= p;
            exp += 1;
        }
        if exp > 0 {
            factors.push((p, exp));
        }
    };
    strip(2, &mut rest);
    strip(3, &mut rest);
    let mut d = 5u64;
    while d * d <= rest {
        strip(d, &mut rest);
        strip(d + 2, &mut rest);
        d += 6;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    debug_assert!(factors.windows(2).all(|w| w[0].0 < w[1].0));
    debug_assert!(factors.iter().all(|&(p, _)| is_prime(p)));
    Ok(Factorization { n, factors })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero() {
        assert_eq!(factorize(0), Err(CoreError::ZeroValue));
    }

    #[test]
    fn one_has_empty_factor_list() {
        let f = factorize(1).unwrap();
        assert_eq!(f.n(), 1);
        assert!(f.factors().is_empty());
        assert_eq!(f.totient(), 1);
    }

    #[test]
    fn twelve() {
        let f = factorize(12).unwrap();
        assert_eq!(f.factors(), [(2, 2), (3, 1)]);
        assert_eq!(f.totient(), 4);
    }

    #[test]
    fn prime_97_survives_trial_division() {
        // Independent check: no d in 2..=9 divides 97, and 9*9 > 97,
        // so trial division up to sqrt(97) must leave 97 intact.
        assert!((2..=9u64).all(|d| 97 % d != 0));
        let f = factorize(97).unwrap();
        assert_eq!(f.factors(), [(97, 1)]);
    }

    #[test]
    fn reconstructs_n_and_orders_primes() {
        for n in 1..2_000u64 {
            let f = factorize(n).unwrap();
            let product: u64 = f.factors().iter().map(|&(p, r)| p.pow(r)).product();
            assert_eq!(product, n);
            assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
            assert!(f.factors().iter().all(|&(p, _)| is_prime(p)));
            assert!(f.factors().iter().all(|&(_, r)| r >= 1));
        }
    }

    #[test]
    fn totient_matches_coprime_count() {
        for n in 1..500u64 {
            let by_count = (1..=n).filter(|&k| crate::arith::gcd(k, n) == 1).count() as u64;
            assert_eq!(factorize(n).unwrap().totient(), by_count, "n={n}");
        }
    }

    #[test]
    fn primorial_510510() {
        let f = factorize(510_510).unwrap();
        assert_eq!(
            f.factors(),
            [(2, 1), (3, 1), (5, 1), (7, 1), (11, 1), (13, 1), (17, 1)]
        );
    }
}
