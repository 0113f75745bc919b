//! Exhaustive identity sweeps at the scales the crate guarantees.

use rs_algebra::suite;

#[test]
fn multiplicativity_exhaustive_to_2500() {
    let outcome = suite::multiplicativity_exhaustive(2500);
    assert!(outcome.passed(), "witnesses: {:?}", outcome.witnesses);
}

#[test]
fn shifted_products_exhaustive_to_600() {
    let outcome = suite::shifted_product_sweep(600);
    assert!(outcome.passed(), "witnesses: {:?}", outcome.witnesses);
}

#[test]
fn shift_reduction_to_60() {
    let outcome = suite::shift_reduction(60);
    assert!(outcome.passed(), "witnesses: {:?}", outcome.witnesses);
}
