//! Wall-clock comparison of the two Ramanujan sum routes.
//!
//! The naive route evaluates the defining complex sum (O(q) per point); the
//! fast route factorizes and composes exact prime-power closed forms. Both
//! are timed over the same point set with a monotonic clock, median of three
//! repetitions, one warm-up pass excluded from timing. The warm-up pass
//! doubles as the exactness check: any value disagreement aborts the record.
//! Correctness precedes speed; timings are reported, never asserted.

use std::hint::black_box;
use std::time::Instant;

use rs_core::{sum_fast, sum_oracle, CoreError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BenchError {
    #[error("benchmark modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),

    #[error("samples_per_q must be at least 1")]
    NoSamples,

    /// The two routes disagreed; the record is aborted.
    #[error("value mismatch at c_{q}({n}): naive={naive}, fast={fast}")]
    Mismatch { q: u64, n: i64, naive: i64, fast: i64 },

    #[error(transparent)]
    Core(#[from] CoreError),
}

/// Timing record for one modulus. Records are only produced with
/// `exact == true`; a disagreement is an error, not a record.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub q: u64,
    /// Number of points evaluated per repetition.
    pub n_evaluated: usize,
    /// Median wall time over the point set, naive route.
    pub naive_ns: u128,
    /// Median wall time over the point set, fast route.
    pub fast_ns: u128,
    /// `naive_ns / fast_ns`.
    pub speedup: f64,
    pub exact: bool,
}

/// The evaluation points for modulus `q`: the full period when it fits in
/// `samples_per_q`, otherwise that many evenly spaced points.
fn point_set(q: u64, samples_per_q: usize) -> Vec<i64> {
    if q <= samples_per_q as u64 {
        (0..q as i64).collect()
    } else {
        (0..samples_per_q)
            .map(|i| (i as u64 * q / samples_per_q as u64) as i64)
            .collect()
    }
}

fn median_of_three(mut reps: [u128; 3]) -> u128 {
    reps.sort_unstable();
    reps[1]
}

fn time_sweep(points: &[i64], mut eval: impl FnMut(i64) -> i64) -> u128 {
    let start = Instant::now();
    for &n in points {
        black_box(eval(black_box(n)));
    }
    start.elapsed().as_nanos()
}

/// Time both routes over the same points for each modulus in `q_list`.
///
/// Requires every modulus to be at least 2 and `samples_per_q >= 1`.
/// Runs single-threaded so timings stay comparable.
pub fn bench_compare(q_list: &[u64], samples_per_q: usize) -> Result<Vec<BenchRecord>, BenchError> {
    if samples_per_q == 0 {
        return Err(BenchError::NoSamples);
    }
    let mut records = Vec::with_capacity(q_list.len());
    for &q in q_list {
        if q < 2 {
            return Err(BenchError::ModulusTooSmall(q));
        }
        let points = point_set(q, samples_per_q);

        // Warm-up pass, also the exactness gate.
        for &n in &points {
            let naive = sum_oracle(q, n);
            let fast = sum_fast(q, n)?;
            if naive != fast {
                return Err(BenchError::Mismatch { q, n, naive, fast });
            }
        }

        let naive_ns = median_of_three([
            time_sweep(&points, |n| sum_oracle(q, n)),
            time_sweep(&points, |n| sum_oracle(q, n)),
            time_sweep(&points, |n| sum_oracle(q, n)),
        ]);
        let fast_ns = median_of_three([
            time_sweep(&points, |n| sum_fast(q, n).expect("checked in warm-up")),
            time_sweep(&points, |n| sum_fast(q, n).expect("checked in warm-up")),
            time_sweep(&points, |n| sum_fast(q, n).expect("checked in warm-up")),
        ]);

        records.push(BenchRecord {
            q,
            n_evaluated: points.len(),
            naive_ns,
            fast_ns,
            speedup: naive_ns as f64 / fast_ns.max(1) as f64,
            exact: true,
        });
    }
    Ok(records)
}

/// Render records as CSV with the stable header
/// `q,n_evaluated,naive_ns,fast_ns,speedup,exact`.
pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from("q,n_evaluated,naive_ns,fast_ns,speedup,exact\n");
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{:.3},{}\n",
            r.q, r.n_evaluated, r.naive_ns, r.fast_ns, r.speedup, r.exact
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_set_full_period_when_small() {
        assert_eq!(point_set(5, 8), [0, 1, 2, 3, 4]);
    }

    #[test]
    fn point_set_evenly_spaced_when_large() {
        let points = point_set(1000, 10);
        assert_eq!(points, [0, 100, 200, 300, 400, 500, 600, 700, 800, 900]);
    }

    #[test]
    fn point_set_strictly_increasing() {
        for q in [17u64, 100, 12345] {
            let points = point_set(q, 16);
            assert!(points.windows(2).all(|w| w[0] < w[1]), "q={q}");
        }
    }

    #[test]
    fn records_are_exact_for_small_moduli() {
        let records = bench_compare(&[4, 9, 30], 16).unwrap();
        assert_eq!(records.len(), 3);
        for r in &records {
            assert!(r.exact);
            assert!(r.n_evaluated >= 1);
            assert!(r.speedup > 0.0);
        }
    }

    #[test]
    fn invalid_inputs_rejected() {
        assert_eq!(bench_compare(&[1], 8), Err(BenchError::ModulusTooSmall(1)));
        assert_eq!(bench_compare(&[4], 0), Err(BenchError::NoSamples));
    }

    #[test]
    fn csv_layout() {
        let records = vec![BenchRecord {
            q: 4,
            n_evaluated: 4,
            naive_ns: 2000,
            fast_ns: 500,
            speedup: 4.0,
            exact: true,
        }];
        let csv = to_csv(&records);
        let mut lines = csv.lines();
        assert_eq!(
            lines.next(),
            Some("q,n_evaluated,naive_ns,fast_ns,speedup,exact")
        );
        assert_eq!(lines.next(), Some("4,4,2000,500,4.000,true"));
        assert_eq!(lines.next(), None);
    }
}
