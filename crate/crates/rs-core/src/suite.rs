//! Exhaustive and sampled invariant sweeps over the sum routines.
//!
//! Each sweep compares independent computation routes (fast path vs. the
//! defining oracle, tables vs. gcd counts) and reports a structured outcome
//! instead of panicking, so the CLI can tabulate results and tests can
//! assert on them. All sampling is seeded; identical arguments produce
//! identical outcomes.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::arith::gcd;
use crate::factor::factorize;
use crate::fast::{sum_fast, sum_fast_factored, sum_prime_power};
use crate::oracle::sum_oracle;
use crate::period::period_table;

/// Cap on stored failure descriptions; the count in `failures` is exact.
pub const MAX_WITNESSES: usize = 8;

/// Result of one invariant sweep.
#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    /// Short kebab-case sweep name.
    pub name: String,
    /// Number of individual comparisons performed.
    pub cases: usize,
    /// Number of failed comparisons.
    pub failures: usize,
    /// Descriptions of the first few failures.
    pub witnesses: Vec<String>,
}

impl SuiteOutcome {
    pub fn new(name: impl Into<String>) -> Self {
        SuiteOutcome {
            name: name.into(),
            cases: 0,
            failures: 0,
            witnesses: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Record one comparison; `witness` is only rendered on failure.
    pub fn check(&mut self, pass: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !pass {
            self.failures += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }
}

/// Fast path equals the oracle on full periods for every `q` up to `q_max`.
pub fn oracle_equivalence(q_max: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("oracle-equivalence");
    for q in 1..=q_max {
        let factorization = factorize(q).expect("q >= 1");
        for n in 0..q as i64 {
            let fast = sum_fast_factored(&factorization, n).expect("within i64 range");
            let oracle = sum_oracle(q, n);
            outcome.check(fast == oracle, || {
                format!("c_{q}({n}): fast={fast} oracle={oracle}")
            });
        }
    }
    outcome
}

/// Fast path equals the oracle at sampled points for random moduli in
/// `q_min..=q_max`.
pub fn oracle_equivalence_sampled(
    q_min: u64,
    q_max: u64,
    moduli: usize,
    points_per_q: usize,
    seed: u64,
) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("oracle-equivalence-sampled");
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..moduli {
        let q = rng.random_range(q_min..=q_max);
        let factorization = factorize(q).expect("q >= 1");
        for _ in 0..points_per_q {
            let n = rng.random_range(-2 * q as i64..=2 * q as i64);
            let fast = sum_fast_factored(&factorization, n).expect("within i64 range");
            let oracle = sum_oracle(q, n);
            outcome.check(fast == oracle, || {
                format!("c_{q}({n}): fast={fast} oracle={oracle}")
            });
        }
    }
    outcome
}

/// `c_q(n) == c_q(n mod q)` at random points, negative `n` included.
pub fn periodicity(q_max: u64, samples: usize, seed: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("periodicity");
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..samples {
        let q = rng.random_range(1..=q_max);
        let n = rng.random_range(-1_000_000_000_000i64..=1_000_000_000_000i64);
        let reduced = n.rem_euclid(q as i64);
        let direct = sum_fast(q, n).expect("within i64 range");
        let wrapped = sum_fast(q, reduced).expect("within i64 range");
        outcome.check(direct == wrapped, || {
            format!("c_{q}({n})={direct} but c_{q}({reduced})={wrapped}")
        });
    }
    outcome
}

/// Period symmetry `c_q(n) == c_q(q - n)` for every `q` in `2..=q_max`.
pub fn symmetry(q_max: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("period-symmetry");
    for q in 2..=q_max {
        let table = period_table(q).expect("within i64 range");
        let values = table.values();
        for n in 1..q as usize {
            outcome.check(values[n] == values[q as usize - n], || {
                format!(
                    "c_{q}({n})={} != c_{q}({})={}",
                    values[n],
                    q as usize - n,
                    values[q as usize - n]
                )
            });
        }
    }
    outcome
}

/// Periods sum to zero for every `q` in `2..=q_max`.
pub fn zero_mean(q_max: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("zero-mean");
    for q in 2..=q_max {
        let sum: i64 = period_table(q).expect("within i64 range").values().iter().sum();
        outcome.check(sum == 0, || format!("period of c_{q} sums to {sum}"));
    }
    outcome
}

/// `c_q(0)` equals the totient, counted directly from gcd's definition.
pub fn totient_anchor(q_max: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("totient-anchor");
    for q in 1..=q_max {
        let at_zero = sum_fast(q, 0).expect("within i64 range");
        let counted = (1..=q).filter(|&k| gcd(k, q) == 1).count() as i64;
        outcome.check(at_zero == counted, || {
            format!("c_{q}(0)={at_zero} but phi({q})={counted}")
        });
    }
    outcome
}

/// `c_p(n) * c_q(n) == c_pq(n)` for all coprime pairs `q < p <= pair_max`
/// over full periods.
pub fn multiplicativity(pair_max: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("multiplicativity");
    for p in 2..=pair_max {
        for q in 1..p {
            if gcd(p, q) != 1 {
                continue;
            }
            let table_p = period_table(p).expect("within i64 range");
            let table_q = period_table(q).expect("within i64 range");
            let table_pq = period_table(p * q).expect("within i64 range");
            for n in 0..(p * q) as i64 {
                let product = table_p.at(n) * table_q.at(n);
                let combined = table_pq.at(n);
                outcome.check(product == combined, || {
                    format!("c_{p}({n})*c_{q}({n})={product} != c_{}({n})={combined}", p * q)
                });
            }
        }
    }
    outcome
}

/// Prime-power lifting equals the oracle for every prime power up to
/// `limit`: full periods up to `full_period_limit`, a structured-plus-random
/// point set above it.
pub fn prime_power_equivalence(
    limit: u64,
    full_period_limit: u64,
    sample_points: usize,
    seed: u64,
) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("prime-power-vs-oracle");
    let mut rng = StdRng::seed_from_u64(seed);
    for p in 2..=limit {
        if !crate::arith::is_prime(p) {
            continue;
        }
        let mut modulus = p;
        let mut level = 1u32;
        while modulus <= limit {
            let stride = modulus / p; // p^(l-1)
            let ns: Vec<i64> = if modulus <= full_period_limit {
                (0..modulus as i64).collect()
            } else {
                let mut ns = vec![
                    0,
                    1,
                    -1,
                    modulus as i64 - 1,
                    stride as i64,
                    -(stride as i64),
                    2 * stride as i64,
                ];
                ns.extend((0..sample_points).map(|_| rng.random_range(0..modulus as i64)));
                ns
            };
            for n in ns {
                let lifted = sum_prime_power(p, level, n).expect("within i64 range");
                let oracle = sum_oracle(modulus, n);
                outcome.check(lifted == oracle, || {
                    format!("c_{modulus}({n}): prime-power={lifted} oracle={oracle}")
                });
            }
            level += 1;
            match modulus.checked_mul(p) {
                Some(next) => modulus = next,
                None => break,
            }
        }
    }
    outcome
}

/// The sweeps the CLI `verify` command runs for this crate, bounded by
/// `q_max`.
pub fn run_all(q_max: u64) -> Vec<SuiteOutcome> {
    vec![
        oracle_equivalence(q_max),
        periodicity(q_max, 256, 0x5eed_c0de),
        symmetry(q_max),
        zero_mean(q_max),
        totient_anchor(q_max),
        multiplicativity(q_max.min(50)),
        prime_power_equivalence(q_max, q_max.min(512), 16, 0x5eed_c0de),
    ]
}
