//! Exact arithmetic for Ramanujan sums.
//!
//! The sum `c_q(n)` adds the `n`-th powers of the primitive `q`-th roots of
//! unity; it is always an integer and is `q`-periodic in `n`. This crate
//! computes it two independent ways:
//!
//! - [`sum_oracle`] evaluates the defining complex-exponential sum directly
//!   (O(q) per point) and collapses it back to an exact integer;
//! - [`sum_fast`] factorizes `q` and composes exact closed forms: `p - 1` or
//!   `-1` at primes ([`sum_prime`]), a divisibility branch lifting primes to
//!   prime powers ([`sum_prime_power`]), and multiplicativity across coprime
//!   factors.
//!
//! [`period_table`] tabulates one full period, and [`suite`] bundles the
//! invariant sweeps (oracle equivalence, periodicity, symmetry, zero mean,
//! totient anchor, multiplicativity) used by tests and the CLI.
//!
//! Everything is a pure function over 64-bit integers; any intermediate that
//! would leave the signed 64-bit range is reported as an error, never
//! silently wrapped.

mod arith;
mod error;
mod factor;
mod fast;
mod oracle;
mod period;
pub mod suite;

pub use arith::{gcd, is_prime, mod_inverse};
pub use error::CoreError;
pub use factor::{factorize, Factorization};
pub use fast::{sum_fast, sum_fast_factored, sum_prime, sum_prime_power};
pub use oracle::{sum_oracle, ORACLE_TOLERANCE};
pub use period::{period_table, RamanujanPeriod};
