//! Exhaustive sweeps over the product identities.

use rs_core::period_table;
use rs_core::suite::SuiteOutcome;

use crate::product::{find_cyclic_shift, predict_product, shifted_product_period};

fn coprime_ordered_pairs(product_max: u64) -> impl Iterator<Item = (u64, u64)> {
    (2..=product_max).flat_map(move |p| {
        (1..p)
            .take_while(move |q| p * q <= product_max)
            .filter(move |&q| rs_core::gcd(p, q) == 1)
            .map(move |q| (p, q))
    })
}

/// Plain multiplicativity, exhaustively: `c_p(n) * c_q(n) == c_pq(n)` for
/// every coprime pair `p > q >= 1` with `pq <= product_max` and every `n`.
pub fn multiplicativity_exhaustive(product_max: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("multiplicativity-exhaustive");
    for (p, q) in coprime_ordered_pairs(product_max) {
        let table_p = period_table(p).expect("within i64 range");
        let table_q = period_table(q).expect("within i64 range");
        let table_pq = period_table(p * q).expect("within i64 range");
        for n in 0..(p * q) as i64 {
            let product = table_p.at(n) * table_q.at(n);
            let combined = table_pq.at(n);
            outcome.check(product == combined, || {
                format!("p={p} q={q} n={n}: product={product}, c_pq={combined}")
            });
        }
    }
    outcome
}

/// The generalized identity, exhaustively over every shift pair: the
/// brute-force product of two shifted sequences must be some cyclic shift of
/// `c_pq`, and [`predict_product`] must name that exact shift.
pub fn shifted_product_sweep(product_max: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("shifted-product-sweep");
    for (p, q) in coprime_ordered_pairs(product_max) {
        let table_pq = period_table(p * q).expect("within i64 range");
        for a1 in 0..p as i64 {
            for a2 in 0..q as i64 {
                let brute = shifted_product_period(p, q, a1, a2).expect("valid pair");
                let found = find_cyclic_shift(&brute, &table_pq);
                outcome.check(found.is_some(), || {
                    format!("p={p} q={q} a1={a1} a2={a2}: product is not a shift of c_{}", p * q)
                });
                let predicted = predict_product(p, q, a1, a2).expect("valid pair").shift();
                outcome.check(found == Some(predicted), || {
                    format!(
                        "p={p} q={q} a1={a1} a2={a2}: predicted shift {predicted}, brute force {found:?}"
                    )
                });
            }
        }
    }
    outcome
}

/// Predictions only depend on the shifts modulo their moduli.
pub fn shift_reduction(product_max: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("shift-reduction");
    for (p, q) in coprime_ordered_pairs(product_max) {
        for a1 in 0..p as i64 {
            for a2 in 0..q as i64 {
                let base = predict_product(p, q, a1, a2).expect("valid pair");
                let wrapped =
                    predict_product(p, q, a1 + p as i64, a2 - q as i64).expect("valid pair");
                outcome.check(base == wrapped, || {
                    format!("p={p} q={q} a1={a1} a2={a2}: wrapped shifts changed the prediction")
                });
            }
        }
    }
    outcome
}

/// The sweeps the CLI `verify` command runs for this crate, bounded so that
/// every checked product modulus stays at or below `q_max`.
pub fn run_all(q_max: u64) -> Vec<SuiteOutcome> {
    vec![
        multiplicativity_exhaustive(q_max),
        shifted_product_sweep(q_max.min(600)),
        shift_reduction(q_max.min(60)),
    ]
}
