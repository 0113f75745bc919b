//! Command-line front end for the Ramanujan sum toolkit.
//!
//! Output is plain text with stable formatting: space-separated values on
//! one line for short tables, one value per line for signal data. No color,
//! no progress reporting; everything here is meant to be scripted and
//! diffed.
//!
//! Exit codes: 0 on success, 1 when a verification produced failures,
//! 2 for usage errors (with a one-line diagnostic on stderr).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rs_algebra::{check_product, predict_product, shifted_product_period};
use rs_core::suite::SuiteOutcome;
use rs_core::{period_table, sum_fast, sum_oracle};
use rs_operators::{Boundary, RamanujanKernel};
use rs_signal_io::{format_real, read_signal, write_signal, write_table};

#[derive(Parser)]
#[command(
    name = "rs-cli",
    version,
    about = "Ramanujan sums, derivative kernels, and identity verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate c_q(n) exactly, or print one full period
    Sum {
        /// Modulus (q >= 1)
        #[arg(long)]
        q: u64,
        /// Point to evaluate; omit to print the full period
        #[arg(long, allow_negative_numbers = true)]
        n: Option<i64>,
        /// Computation route
        #[arg(long, value_enum, default_value_t = Method::Fast)]
        method: Method,
    },
    /// Print or write the taps of a derivative kernel
    Kernel {
        /// Modulus (q >= 2; odd for the second-derivative variant)
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum)]
        variant: Variant,
        /// Write taps to a file (one per line) instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Filter a signal file through a derivative kernel
    Apply {
        /// Modulus (q >= 2; odd for the second-derivative variant)
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum)]
        variant: Variant,
        /// Input signal file: one sample per line or comma-separated
        #[arg(long = "in")]
        input: PathBuf,
        /// Write the filtered signal to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// How samples past the signal ends are read
        #[arg(long, value_enum, default_value_t = BoundaryArg::Replicate)]
        boundary: BoundaryArg,
    },
    /// Predict the product of two shifted sequences and check it by brute force
    Product {
        /// Larger modulus (coprime to q, p > q)
        #[arg(long)]
        p: u64,
        /// Smaller modulus (q >= 1)
        #[arg(long)]
        q: u64,
        /// Shift applied to the mod-p sequence
        #[arg(long, allow_negative_numbers = true)]
        a1: i64,
        /// Shift applied to the mod-q sequence
        #[arg(long, allow_negative_numbers = true)]
        a2: i64,
    },
    /// Run the library invariant suites and print a summary table
    Verify {
        /// Bound on the moduli the sweeps cover
        #[arg(long = "q-max", default_value_t = 200)]
        q_max: u64,
    },
    /// Time naive vs factorized evaluation over structured moduli
    Bench {
        /// Largest modulus to include
        #[arg(long = "q-max")]
        q_max: u64,
        /// Points evaluated per modulus (full period if it fits)
        #[arg(long, default_value_t = 64)]
        samples: usize,
        /// Also write the records as CSV
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Naive,
    Fast,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    First,
    Second,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundaryArg {
    Replicate,
    Zero,
    Wrap,
}

impl From<BoundaryArg> for Boundary {
    fn from(arg: BoundaryArg) -> Boundary {
        match arg {
            BoundaryArg::Replicate => Boundary::Replicate,
            BoundaryArg::Zero => Boundary::ZeroPad,
            BoundaryArg::Wrap => Boundary::PeriodicWrap,
        }
    }
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe (`rs-cli bench | head`), like any other
    // line-oriented tool, instead of panicking mid-write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Sum { q, n, method } => cmd_sum(q, n, method),
        Command::Kernel { q, variant, out } => cmd_kernel(q, variant, out),
        Command::Apply {
            q,
            variant,
            input,
            out,
            boundary,
        } => cmd_apply(q, variant, input, out, boundary),
        Command::Product { p, q, a1, a2 } => cmd_product(p, q, a1, a2),
        Command::Verify { q_max } => cmd_verify(q_max),
        Command::Bench {
            q_max,
            samples,
            csv,
        } => cmd_bench(q_max, samples, csv),
    }
}

fn join_values(values: &[i64]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_sum(q: u64, n: Option<i64>, method: Method) -> Result<ExitCode, String> {
    if q == 0 {
        return Err("--q must be at least 1".into());
    }
    let naive = |n: i64| sum_oracle(q, n);
    let fast = |n: i64| sum_fast(q, n).map_err(|e| e.to_string());

    let (naive_values, fast_values): (Vec<i64>, Vec<i64>) = match n {
        Some(n) => (
            if method != Method::Fast { vec![naive(n)] } else { vec![] },
            if method != Method::Naive { vec![fast(n)?] } else { vec![] },
        ),
        None => (
            if method != Method::Fast {
                (0..q as i64).map(naive).collect()
            } else {
                vec![]
            },
            if method != Method::Naive {
                period_table(q).map_err(|e| e.to_string())?.into_values()
            } else {
                vec![]
            },
        ),
    };

    match method {
        Method::Naive => println!("{}", join_values(&naive_values)),
        Method::Fast => println!("{}", join_values(&fast_values)),
        Method::Both => {
            let matched = naive_values == fast_values;
            println!("naive: {}", join_values(&naive_values));
            println!("fast: {}", join_values(&fast_values));
            println!("match: {matched}");
            if !matched {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn build_kernel(q: u64, variant: Variant) -> Result<RamanujanKernel, String> {
    let kernel = match variant {
        Variant::First => RamanujanKernel::first(q),
        Variant::Second => RamanujanKernel::second(q),
    };
    kernel.map_err(|e| e.to_string())
}

fn cmd_kernel(q: u64, variant: Variant, out: Option<PathBuf>) -> Result<ExitCode, String> {
    let kernel = build_kernel(q, variant)?;
    match out {
        Some(path) => write_table(kernel.taps(), &path).map_err(|e| e.to_string())?,
        None => println!("{}", join_values(kernel.taps())),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_apply(
    q: u64,
    variant: Variant,
    input: PathBuf,
    out: Option<PathBuf>,
    boundary: BoundaryArg,
) -> Result<ExitCode, String> {
    let kernel = build_kernel(q, variant)?;
    let signal = read_signal(&input)
        .map_err(|e| e.to_string())?
        .rebound(boundary.into());
    let filtered = kernel.apply(&signal);
    match out {
        Some(path) => write_signal(&filtered, &path).map_err(|e| e.to_string())?,
        None => {
            for &sample in filtered.samples() {
                println!("{}", format_real(sample));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_product(p: u64, q: u64, a1: i64, a2: i64) -> Result<ExitCode, String> {
    let predicted = predict_product(p, q, a1, a2).map_err(|e| e.to_string())?;
    let brute = shifted_product_period(p, q, a1, a2).map_err(|e| e.to_string())?;
    let check = check_product(p, q, a1, a2).map_err(|e| e.to_string())?;

    println!("predicted shift: {}", predicted.shift());
    println!("predicted period: {}", join_values(predicted.values()));
    println!("brute-force period: {}", join_values(&brute));
    match check.counterexample {
        None => {
            println!("verdict: equal");
            Ok(ExitCode::SUCCESS)
        }
        Some(mismatch) => {
            println!(
                "verdict: mismatch at n={}: product={}, predicted={}",
                mismatch.n, mismatch.product, mismatch.predicted
            );
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_verify(q_max: u64) -> Result<ExitCode, String> {
    if q_max < 2 {
        return Err("--q-max must be at least 2".into());
    }
    let mut suites: Vec<(&str, SuiteOutcome)> = Vec::new();
    suites.extend(rs_core::suite::run_all(q_max).into_iter().map(|o| ("rs-core", o)));
    suites.extend(
        rs_operators::suite::run_all(q_max)
            .into_iter()
            .map(|o| ("rs-operators", o)),
    );
    suites.extend(
        rs_algebra::suite::run_all(q_max)
            .into_iter()
            .map(|o| ("rs-algebra", o)),
    );

    println!("{:<45} {:>9} {:>9}  status", "suite", "cases", "failures");
    let mut total_cases = 0usize;
    let mut total_failures = 0usize;
    for (crate_name, outcome) in &suites {
        let status = if outcome.passed() { "PASS" } else { "FAIL" };
        println!(
            "{:<45} {:>9} {:>9}  {}",
            format!("{crate_name}/{}", outcome.name),
            outcome.cases,
            outcome.failures,
            status
        );
        total_cases += outcome.cases;
        total_failures += outcome.failures;
    }
    for (crate_name, outcome) in &suites {
        for witness in &outcome.witnesses {
            println!("witness {crate_name}/{}: {witness}", outcome.name);
        }
    }
    let status = if total_failures == 0 { "PASS" } else { "FAIL" };
    println!(
        "result: {status} ({} suites, {total_cases} cases, {total_failures} failures)",
        suites.len()
    );
    Ok(if total_failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// Deterministic moduli selection: prime powers, primorials, the largest
/// prime, and the bound itself, all capped by `q_max`.
fn bench_moduli(q_max: u64) -> Vec<u64> {
    let mut list = Vec::new();
    let mut push = |q: u64| {
        if q >= 2 && q <= q_max && !list.contains(&q) {
            list.push(q);
        }
    };
    let mut power = 4u64;
    while power <= q_max {
        push(power);
        power *= 2;
    }
    let mut power = 9u64;
    while power <= q_max {
        push(power);
        power *= 3;
    }
    for primorial in [6u64, 30, 210, 2310, 30030, 510510] {
        push(primorial);
    }
    if let Some(prime) = (2..=q_max).rev().find(|&n| rs_core::is_prime(n)) {
        push(prime);
    }
    push(q_max);
    list.sort_unstable();
    list
}

fn cmd_bench(q_max: u64, samples: usize, csv: Option<PathBuf>) -> Result<ExitCode, String> {
    if q_max < 2 {
        return Err("--q-max must be at least 2".into());
    }
    if samples == 0 {
        return Err("--samples must be at least 1".into());
    }
    let moduli = bench_moduli(q_max);
    let records = rs_bench::bench_compare(&moduli, samples).map_err(|e| e.to_string())?;

    // The CSV is the durable artifact; write it before stdout can cut the
    // run short through a closed pipe.
    if let Some(path) = csv {
        std::fs::write(&path, rs_bench::to_csv(&records))
            .map_err(|e| format!("{}: {e}", path.display()))?;
    }
    println!(
        "{:>8} {:>8} {:>12} {:>12} {:>10}  exact",
        "q", "points", "naive_ns", "fast_ns", "speedup"
    );
    for r in &records {
        println!(
            "{:>8} {:>8} {:>12} {:>12} {:>10.3}  {}",
            r.q, r.n_evaluated, r.naive_ns, r.fast_ns, r.speedup, r.exact
        );
    }
    Ok(ExitCode::SUCCESS)
}
