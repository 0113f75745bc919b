use proptest::prelude::*;
use rs_core::{gcd, period_table, sum_fast, sum_oracle};

proptest! {
    #[test]
    fn periodicity(q in 1..400u64, n in -1_000_000_000i64..1_000_000_000i64) {
        let reduced = n.rem_euclid(q as i64);
        prop_assert_eq!(sum_fast(q, n).unwrap(), sum_fast(q, reduced).unwrap());
    }

    #[test]
    fn fast_matches_oracle_at_random_points(q in 1..800u64, n in -5000i64..5000i64) {
        prop_assert_eq!(sum_fast(q, n).unwrap(), sum_oracle(q, n));
    }

    #[test]
    fn multiplicativity_on_coprime_pairs(p in 2..60u64, q in 1..60u64, n in -500i64..500i64) {
        prop_assume!(gcd(p, q) == 1);
        let product = sum_fast(p, n).unwrap() * sum_fast(q, n).unwrap();
        prop_assert_eq!(product, sum_fast(p * q, n).unwrap());
    }

    #[test]
    fn period_symmetry(q in 2..400u64, offset in 1..10_000usize) {
        let table = period_table(q).unwrap();
        let n = 1 + offset % (q as usize - 1).max(1);
        if n < q as usize {
            prop_assert_eq!(table.values()[n], table.values()[q as usize - n]);
        }
    }
}
