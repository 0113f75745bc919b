//! Multiplicative structure of shifted Ramanujan sequences.
//!
//! `c_pq(n) = c_p(n) * c_q(n)` for coprime moduli, and the identity survives
//! shifting: the product of two delayed sequences is again one period of
//! `c_pq` under a delay determined by the two shifts. [`predict_product`]
//! names that delay, [`check_product`] re-derives the product by brute force
//! and compares, and [`suite`] sweeps both exhaustively.

mod error;
mod product;
mod shifted;
pub mod suite;

pub use error::AlgebraError;
pub use product::{
    check_product, find_cyclic_shift, predict_product, shifted_product_period, ProductCheck,
    ProductMismatch, ProductResult,
};
pub use shifted::ShiftedSequence;
