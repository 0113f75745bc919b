//! Invariant sweeps over kernels and the operators they define.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use rs_core::suite::SuiteOutcome;

use crate::kernel::RamanujanKernel;
use crate::signal::{Boundary, Signal};
use crate::verify::{ramp_constant, verify_first_derivative, verify_second_derivative};

/// Taps of every kernel sum to zero, both variants, up to `q_max`.
pub fn zero_sum_taps(q_max: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("kernel-zero-sum");
    for q in 2..=q_max {
        let first: i64 = RamanujanKernel::first(q).expect("q >= 2").taps().iter().sum();
        outcome.check(first == 0, || format!("first q={q}: taps sum to {first}"));
        if q % 2 == 1 {
            let second: i64 = RamanujanKernel::second(q).expect("odd q").taps().iter().sum();
            outcome.check(second == 0, || format!("second q={q}: taps sum to {second}"));
        }
    }
    outcome
}

/// Second-derivative kernels read the same forwards and backwards.
pub fn palindrome_taps(q_max: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("kernel-palindrome");
    for q in (3..=q_max).step_by(2) {
        let kernel = RamanujanKernel::second(q).expect("odd q");
        let taps = kernel.taps();
        for i in 0..taps.len() {
            outcome.check(taps[i] == taps[taps.len() - 1 - i], || {
                format!("q={q}: taps[{i}]={} != taps[{}]={}", taps[i], taps.len() - 1 - i, taps[taps.len() - 1 - i])
            });
        }
    }
    outcome
}

fn random_boundary(rng: &mut StdRng) -> Boundary {
    match rng.random_range(0..3) {
        0 => Boundary::ZeroPad,
        1 => Boundary::Replicate,
        _ => Boundary::PeriodicWrap,
    }
}

fn random_kernel(rng: &mut StdRng, q_max: u64) -> RamanujanKernel {
    if rng.random_bool(0.5) {
        RamanujanKernel::first(rng.random_range(2..=q_max)).expect("q >= 2")
    } else {
        let q = 2 * rng.random_range(1..=(q_max - 1) / 2) + 1;
        RamanujanKernel::second(q).expect("odd q")
    }
}

/// Applying a kernel commutes with linear combinations of signals.
pub fn linearity(q_max: u64, trials: usize, seed: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("linearity");
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..trials {
        let kernel = random_kernel(&mut rng, q_max.max(3));
        let boundary = random_boundary(&mut rng);
        let len = rng.random_range(kernel.q() as usize..5 * kernel.q() as usize);
        let a: f64 = rng.random_range(-3.0..3.0);
        let b: f64 = rng.random_range(-3.0..3.0);
        let x: Vec<f64> = (0..len).map(|_| rng.random_range(-10.0..10.0)).collect();
        let y: Vec<f64> = (0..len).map(|_| rng.random_range(-10.0..10.0)).collect();
        let combined: Vec<f64> = x.iter().zip(&y).map(|(xv, yv)| a * xv + b * yv).collect();

        let out_combined = kernel.apply(&Signal::with_boundary(combined, boundary).expect("finite"));
        let out_x = kernel.apply(&Signal::with_boundary(x, boundary).expect("finite"));
        let out_y = kernel.apply(&Signal::with_boundary(y, boundary).expect("finite"));
        for n in 0..len {
            let recombined = a * out_x.samples()[n] + b * out_y.samples()[n];
            let diff = (out_combined.samples()[n] - recombined).abs();
            outcome.check(diff <= 1e-9, || {
                format!("q={} n={n}: |{} - {recombined}| = {diff:e}", kernel.q(), out_combined.samples()[n])
            });
        }
    }
    outcome
}

/// On periodic boundaries, filtering a cyclically shifted signal equals
/// cyclically shifting the filtered signal. The comparison is exact: taps and the
/// generated samples are integers.
pub fn shift_invariance(q_max: u64, trials: usize, seed: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("shift-invariance");
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..trials {
        let kernel = random_kernel(&mut rng, q_max.max(3));
        let len = rng.random_range(kernel.q() as usize..4 * kernel.q() as usize).max(2);
        let shift = rng.random_range(0..len);
        let x: Vec<f64> = (0..len).map(|_| rng.random_range(-9..=9) as f64).collect();
        let rotated: Vec<f64> = (0..len).map(|i| x[(i + len - shift) % len]).collect();

        let out = kernel.apply(&Signal::with_boundary(x, Boundary::PeriodicWrap).expect("finite"));
        let out_rotated =
            kernel.apply(&Signal::with_boundary(rotated, Boundary::PeriodicWrap).expect("finite"));
        for n in 0..len {
            let expected = out.samples()[(n + len - shift) % len];
            let actual = out_rotated.samples()[n];
            outcome.check(actual == expected, || {
                format!("q={} len={len} shift={shift} n={n}: {actual} != {expected}", kernel.q())
            });
        }
    }
    outcome
}

/// The negated first moment of every first-derivative kernel equals the
/// closed-form ramp constant.
pub fn first_moment(q_max: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("first-moment");
    for q in 2..=q_max {
        let kernel = RamanujanKernel::first(q).expect("q >= 2");
        let moment: i64 = kernel
            .taps()
            .iter()
            .enumerate()
            .map(|(l, &tap)| -(l as i64) * tap)
            .sum();
        let closed_form = ramp_constant(q);
        let diff = (moment as f64 - closed_form).abs();
        outcome.check(diff <= 1e-6, || {
            format!("q={q}: -sum(l*taps[l])={moment} vs closed form {closed_form}")
        });
    }
    outcome
}

/// Second-derivative kernels annihilate affine signals exactly on the
/// interior.
pub fn affine_annihilation(q_max: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("affine-annihilation");
    for q in (3..=q_max).step_by(2) {
        let kernel = RamanujanKernel::second(q).expect("odd q");
        let len = 3 * q as usize;
        for (a, b) in [(1i64, 0i64), (3, -7), (-2, 11)] {
            let samples = (0..len).map(|n| (a * n as i64 + b) as f64).collect();
            let out = kernel.apply(&Signal::new(samples).expect("finite"));
            for n in kernel.interior(len) {
                let value = out.samples()[n];
                outcome.check(value == 0.0, || {
                    format!("q={q} a={a} b={b} n={n}: {value}")
                });
            }
        }
    }
    outcome
}

/// All first-derivative property reports pass, q up to `q_max`, signals of
/// 8q samples.
pub fn first_derivative_properties(q_max: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("first-derivative-properties");
    for q in 2..=q_max {
        let report = verify_first_derivative(q, 8 * q as usize).expect("valid q and length");
        for check in &report.checks {
            outcome.check(check.pass, || {
                format!("q={q} {}: observed {:?}, expected {}", check.name, check.observed, check.expected)
            });
        }
    }
    outcome
}

/// All second-derivative property reports pass, odd q up to `q_max`.
pub fn second_derivative_properties(q_max: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("second-derivative-properties");
    for q in (3..=q_max).step_by(2) {
        let report = verify_second_derivative(q, 8 * q as usize).expect("valid q and length");
        for check in &report.checks {
            outcome.check(check.pass, || {
                format!("q={q} {}: observed {:?}, expected {}", check.name, check.observed, check.expected)
            });
        }
    }
    outcome
}

/// The sweeps the CLI `verify` command runs for this crate. The property
/// verifiers are capped near the acceptance ranges; their cost grows
/// quadratically in `q`.
pub fn run_all(q_max: u64) -> Vec<SuiteOutcome> {
    vec![
        zero_sum_taps(q_max),
        palindrome_taps(q_max),
        linearity(q_max.min(64), 48, 0x5eed_c0de),
        shift_invariance(q_max.min(64), 48, 0x5eed_c0de),
        first_moment(q_max.min(200)),
        affine_annihilation(q_max.min(199)),
        first_derivative_properties(q_max.min(64)),
        second_derivative_properties(q_max.min(63)),
    ]
}
