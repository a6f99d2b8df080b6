//! `bench`: iteration and corner-read counts over a sweep of sizes.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::Args;

use crate::generator::{generate_pair, GenSpec, Regime};
use crate::tangents::Variant;

use super::{run_variant, within_bounds, CmdResult, Outcome, EXIT_BOUND_VIOLATION, EXIT_OK};

pub const CSV_HEADER: &str =
    "operation,n0,n1,rep,outcome,iterations,corner_reads,updates,iteration_bound,read_bound,wall_time_ns";

#[derive(Debug, Args)]
pub(crate) struct BenchArgs {
    /// Comma-separated sizes: integers, powers `2^k`, or ranges `2^a..2^b`
    /// of consecutive powers of two. Both polygons get `n` corners.
    #[arg(long, default_value = "2^4..2^14")]
    sizes: String,
    #[arg(long, default_value = "disjoint-hulls")]
    regime: String,
    /// Timed repetitions of each run on the same instance.
    #[arg(long, default_value_t = 1)]
    reps: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output path for the CSV; standard output when absent.
    #[arg(long)]
    csv: Option<PathBuf>,
}

fn parse_size(token: &str) -> Result<usize, String> {
    let bad = || format!("invalid size '{token}'");
    match token.split_once('^') {
        Some(("2", k)) => {
            let k: u32 = k.parse().map_err(|_| bad())?;
            1usize.checked_shl(k).filter(|_| k < 31).ok_or_else(bad)
        }
        Some(_) => Err(bad()),
        None => token.parse().map_err(|_| bad()),
    }
}

/// Expands the `--sizes` syntax.
pub fn parse_sizes(spec: &str) -> Result<Vec<usize>, String> {
    let mut out = Vec::new();
    for token in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if let Some((lo, hi)) = token.split_once("..") {
            let (mut lo, hi) = (parse_size(lo)?, parse_size(hi)?);
            if !lo.is_power_of_two() || !hi.is_power_of_two() || lo > hi {
                return Err(format!("range '{token}' must run between powers of two, low to high"));
            }
            while lo <= hi {
                out.push(lo);
                lo *= 2;
            }
        } else {
            out.push(parse_size(token)?);
        }
    }
    if out.is_empty() {
        return Err("no sizes given".into());
    }
    if let Some(&n) = out.iter().find(|&&n| n < 3) {
        return Err(format!("size {n} < 3"));
    }
    Ok(out)
}

pub(crate) fn cmd_bench(args: &BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let sizes = parse_sizes(&args.sizes)?;
    let regime: Regime = args.regime.parse().map_err(|e: crate::generator::GenError| e.to_string())?;
    if args.reps == 0 {
        return Err("--reps must be at least 1".into());
    }

    let mut csv = String::new();
    csv.push_str(CSV_HEADER);
    csv.push('\n');
    let mut violations = 0usize;
    let mut total_reads: Vec<(usize, u64)> = Vec::new();

    for &n in &sizes {
        let mut reads_at_n = 0;
        let spec = GenSpec::new(args.seed, n, n, regime);
        let (p0, p1) = generate_pair(&spec).map_err(|e| format!("n = {n}: {e}"))?;
        for rep in 0..args.reps {
            for variant in Variant::ALL {
                let start = Instant::now();
                let outcome = run_variant(&p0, &p1, variant, None);
                let elapsed = start.elapsed().as_nanos();
                let stats = outcome.stats();
                let kind = variant.kind();
                if !within_bounds(variant, n, n, &outcome) {
                    violations += 1;
                    let _ = writeln!(
                        err,
                        "BOUND VIOLATION: {} n0={n} n1={n} iterations={} (bound {}) reads={} (bound {})",
                        variant.as_str(),
                        stats.iterations,
                        kind.iteration_bound(n, n),
                        stats.corner_reads,
                        kind.read_bound(n, n)
                    );
                }
                if rep == 0 {
                    reads_at_n += stats.corner_reads + outcome.precheck().map_or(0, |p| p.corner_reads);
                }
                let status = match outcome {
                    Outcome::Tangent { .. } => "tangent",
                    Outcome::NotSeparable { .. } => "not_separable",
                    Outcome::Uncertain { .. } => "precondition_uncertain",
                };
                csv.push_str(&format!(
                    "{},{n},{n},{rep},{status},{},{},{},{},{},{elapsed}\n",
                    variant.as_str(),
                    stats.iterations,
                    stats.corner_reads,
                    stats.updates,
                    kind.iteration_bound(n, n),
                    kind.read_bound(n, n),
                ));
            }
        }
        total_reads.push((n, reads_at_n));
    }

    for (na, nb, ratio) in growth_ratios(&total_reads) {
        let _ = writeln!(err, "corner_reads growth {na} -> {nb}: {ratio:.3}");
    }
    super::write_output(args.csv.as_deref(), &csv, out)?;
    if violations > 0 {
        let _ = writeln!(err, "error: {violations} bound violation(s)");
        return Ok(EXIT_BOUND_VIOLATION);
    }
    Ok(EXIT_OK)
}

/// Ratios of total corner reads between consecutive sizes `n >= 2^10`
/// that double.
pub fn growth_ratios(total_reads: &[(usize, u64)]) -> Vec<(usize, usize, f64)> {
    total_reads
        .windows(2)
        .filter(|w| w[1].0 == 2 * w[0].0 && w[0].0 >= 1 << 10)
        .map(|w| (w[0].0, w[1].0, w[1].1 as f64 / w[0].1 as f64))
        .collect()
}
