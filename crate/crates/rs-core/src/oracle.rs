//! Brute-force evaluation of Ramanujan sums from their definition.

use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::arith::gcd;

/// Tolerance on the imaginary residue and on the distance to the nearest
/// integer when collapsing the complex sum back to an exact value. Double
/// precision keeps both residues orders of magnitude below this for every
/// modulus up to 10^5.
pub const ORACLE_TOLERANCE: f64 = 1e-6;

/// Ramanujan sum `c_q(n)` evaluated directly as the sum of `e^(j*2*pi*k*n/q)`
/// over all `k` in `1..=q` coprime to `q`.
///
/// `n` may be any integer; it is reduced modulo `q` first (the sums are
/// q-periodic). Runs in O(q) time; this is the oracle the fast factorized
/// path is checked against, not the way to compute large tables.
///
/// Panics if `q == 0`, or if the rounding residue exceeds
/// [`ORACLE_TOLERANCE`] (which would signal a numeric bug, not a user error).
pub fn sum_oracle(q: u64, n: i64) -> i64 {
    assert!(q >= 1, "modulus must be a positive integer");
    let n = n.rem_euclid(q as i64) as u64;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 1..=q {
        if gcd(k, q) == 1 {
            // Reduce k*n mod q before forming the angle; keeps the argument
            // in [0, 2*pi) where sin/cos lose no precision.
            let residue = (k as u128 * n as u128 % q as u128) as f64;
            acc += Complex64::from_polar(1.0, TAU * residue / q as f64);
        }
    }
    let rounded = acc.re.round();
    assert!(
        acc.im.abs() < ORACLE_TOLERANCE,
        "imaginary residue {:e} exceeds tolerance evaluating c_{q}({n})",
        acc.im
    );
    assert!(
        (acc.re - rounded).abs() < ORACLE_TOLERANCE,
        "rounding residue {:e} exceeds tolerance evaluating c_{q}({n})",
        (acc.re - rounded).abs()
    );
    rounded as i64
}
