//! Command-line driver. Every subcommand runs one pipeline deterministically
//! (all randomness comes from --seed) and emits a versioned JSON report plus
//! a human-readable summary on stdout.
//!
//! Exit codes: 0 success, 1 usage error, 2 a verified claim failed
//! (a computed value disagreed with its stated expectation), 3 a budget was
//! exhausted before completion.

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};
use cuboids_core::report::{ClaimStatus, Report, RunConfig};
use std::collections::BTreeMap;
use std::path::PathBuf;

mod commands;

#[derive(Parser)]
#[command(
    name = "cuboids",
    about = "Exact computer algebra for the surfaces parametrizing cuboids",
    version
)]
struct Cli {
    /// Seed for all randomness (identical seed => byte-identical report).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Reduction-step budget for local standard-basis runs.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    budget_steps: u64,
    /// Truncation-order cap for the jet oracle.
    #[arg(long, global = true, default_value_t = 40)]
    jet_cap: u32,
    /// Primes for sampling/corroboration passes (comma separated).
    #[arg(long, global = true, value_delimiter = ',')]
    primes: Vec<u64>,
    /// Report output path (stdout JSON suppressed when given).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Euler formula variant: as-printed | mu-minus-sign | sign-plus-mu.
    #[arg(long, global = true, default_value = "as-printed")]
    variant: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Groebner basis of the ideal in a polynomial file.
    Gb {
        /// Input: first line declares variables (most significant first),
        /// then one polynomial per line.
        file: PathBuf,
        /// Monomial order: lex or grevlex.
        #[arg(long, default_value = "grevlex")]
        order: String,
    },
    /// Verify the hyperplane-section basis claim across all charts.
    Lemma21 {
        #[arg(long, default_value_t = 2)]
        alpha: i64,
        #[arg(long, default_value_t = 3)]
        beta: i64,
        #[arg(long, default_value_t = 5)]
        gamma: i64,
        #[arg(long, default_value_t = 7)]
        delta: i64,
        /// Random (A,B) specializations per prime.
        #[arg(long, default_value_t = 3)]
        trials: u32,
        /// Also check with genuine rational-function parameters.
        #[arg(long, default_value_t = true)]
        params: bool,
        /// Square-root tower specialization trials per prime.
        #[arg(long, default_value_t = 25)]
        tower_trials: u32,
    },
    /// Singular census of a built-in surface (upsilon or V).
    Census {
        variety: String,
        /// Skip the symbolic point re-verification.
        #[arg(long, default_value_t = false)]
        no_verify: bool,
        /// Skip the ordinary-double-point classification.
        #[arg(long, default_value_t = false)]
        no_odp: bool,
    },
    /// Milnor number of a built-in polynomial (h-upsilon, h-v) or a file.
    Milnor { input: String },
    /// Euler-characteristic pipeline for upsilon (k) or V (k').
    Euler {
        variety: String,
        /// Skip the calibration table.
        #[arg(long, default_value_t = false)]
        no_calibrate: bool,
    },
    /// Symbolic and sampled verification of the parametrizing map.
    PhiCheck {
        #[arg(long, default_value_t = 500)]
        samples: u32,
    },
    /// Assemble the fundamental-group report.
    Pi1Report {
        /// Skip the expensive Euler runs (k and k' reported as budgeted).
        #[arg(long, default_value_t = false)]
        skip_euler: bool,
    },
    /// Exhaustive primitive face-cuboid search up to an edge bound.
    FaceSearch {
        #[arg(long)]
        bound: u64,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    let mut args = BTreeMap::new();
    let subcommand = match &cli.command {
        Command::Gb { file, order } => {
            args.insert("file".into(), file.display().to_string());
            args.insert("order".into(), order.clone());
            "gb"
        }
        Command::Lemma21 { alpha, beta, gamma, delta, trials, params, tower_trials } => {
            args.insert("alpha".into(), alpha.to_string());
            args.insert("beta".into(), beta.to_string());
            args.insert("gamma".into(), gamma.to_string());
            args.insert("delta".into(), delta.to_string());
            args.insert("trials".into(), trials.to_string());
            args.insert("params".into(), params.to_string());
            args.insert("tower_trials".into(), tower_trials.to_string());
            "lemma21"
        }
        Command::Census { variety, no_verify, no_odp } => {
            args.insert("variety".into(), variety.clone());
            args.insert("no_verify".into(), no_verify.to_string());
            args.insert("no_odp".into(), no_odp.to_string());
            "census"
        }
        Command::Milnor { input } => {
            args.insert("input".into(), input.clone());
            "milnor"
        }
        Command::Euler { variety, no_calibrate } => {
            args.insert("variety".into(), variety.clone());
            args.insert("no_calibrate".into(), no_calibrate.to_string());
            "euler"
        }
        Command::PhiCheck { samples } => {
            args.insert("samples".into(), samples.to_string());
            "phi-check"
        }
        Command::Pi1Report { skip_euler } => {
            args.insert("skip_euler".into(), skip_euler.to_string());
            "pi1-report"
        }
        Command::FaceSearch { bound } => {
            args.insert("bound".into(), bound.to_string());
            "face-search"
        }
    };

    let config = RunConfig {
        subcommand: subcommand.to_string(),
        args,
        seed: cli.seed,
        budget_steps: cli.budget_steps,
        jet_cap: cli.jet_cap,
        primes: cli.primes.clone(),
        variant: cli.variant.clone(),
    };
    let mut report = Report::new(config);

    match &cli.command {
        Command::Gb { file, order } => commands::gb(&mut report, file, order)?,
        Command::Lemma21 { alpha, beta, gamma, delta, trials, params, tower_trials } => {
            commands::lemma21(
                &mut report,
                &cli,
                (*alpha, *beta, *gamma, *delta),
                *trials,
                *params,
                *tower_trials,
            )?
        }
        Command::Census { variety, no_verify, no_odp } => {
            commands::census(&mut report, &cli, variety, *no_verify, *no_odp)?
        }
        Command::Milnor { input } => commands::milnor(&mut report, &cli, input)?,
        Command::Euler { variety, no_calibrate } => {
            commands::euler(&mut report, &cli, variety, *no_calibrate)?
        }
        Command::PhiCheck { samples } => commands::phi_check(&mut report, &cli, *samples)?,
        Command::Pi1Report { skip_euler } => commands::pi1_report(&mut report, &cli, *skip_euler)?,
        Command::FaceSearch { bound } => commands::face_search(&mut report, *bound)?,
    }

    // human-readable summary
    println!("{} report: {} claims", report.config.subcommand, report.claims.len());
    for c in &report.claims {
        let status = match c.status {
            ClaimStatus::Pass => "PASS",
            ClaimStatus::Fail => "FAIL",
            ClaimStatus::Budget => "BUDGET",
            ClaimStatus::Info => "INFO",
        };
        println!("  [{status}] {}: {}", c.id, c.reference);
    }

    let json = report.to_json();
    match &cli.out {
        Some(path) => {
            std::fs::write(path, &json).with_context(|| format!("writing {}", path.display()))?;
            println!("report written to {}", path.display());
        }
        None => print!("{json}"),
    }

    if report.any_failed() {
        return Ok(2);
    }
    if report.any_budget() {
        return Ok(3);
    }
    Ok(0)
}

fn default_primes(cli_primes: &[u64], fallback: &[u64]) -> Vec<u64> {
    if cli_primes.is_empty() {
        fallback.to_vec()
    } else {
        cli_primes.to_vec()
    }
}

type QRing = cuboids_core::poly::RingRc<cuboids_core::scalar::QQ>;
type QPoly = cuboids_core::poly::Poly<cuboids_core::scalar::QQ>;

/// First nonempty line declares variables (most significant first); each
/// following nonempty line is one polynomial. `#` starts a comment line.
fn parse_poly_file(path: &std::path::Path, order: &str) -> Result<(QRing, Vec<QPoly>)> {
    use cuboids_core::poly::{parse_poly, MonomialOrder, PolyRing};
    use cuboids_core::scalar::QQ;
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut lines =
        text.lines().filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let header = lines.next().ok_or_else(|| anyhow!("empty polynomial file"))?;
    let vars: Vec<&str> = header.split_whitespace().collect();
    if vars.is_empty() {
        return Err(anyhow!("first line must declare variables"));
    }
    let ranking: Vec<usize> = (0..vars.len()).collect();
    let ord = match order {
        "lex" => MonomialOrder::Lex { ranking },
        "grevlex" => MonomialOrder::GrevLex { ranking },
        other => return Err(anyhow!("unknown order `{other}` (use lex or grevlex)")),
    };
    let ring = PolyRing::new(QQ, &vars, ord).map_err(|e| anyhow!("{e}"))?;
    let mut polys = Vec::new();
    for line in lines {
        let p = parse_poly(line, &ring).map_err(|e| anyhow!("parsing `{line}`: {e}"))?;
        polys.push(p);
    }
    Ok((ring, polys))
}
