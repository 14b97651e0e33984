use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use monodromic::cli::commands::{fourier, mellin, parse_algebra, reduce, trace_table};
use monodromic::cli::{pretty, run_all, run_check, CheckId, Params, Profile};
use monodromic::Error;

/// Exact computations with difference operators, Mellin transforms,
/// finite-field trace functions and cyclic group algebras.
#[derive(Parser)]
#[command(name = "monodromic", version)]
struct Cli {
    /// Human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of an operator expression.
    Reduce {
        #[arg(long, default_value = "weyl", value_parser = ["weyl", "shift", "laurent"])]
        algebra: String,
        #[arg(long, default_value_t = 1)]
        rank: usize,
        expr: String,
    },
    /// Mellin image (`x -> T`, `x dx -> s`) of a Laurent-Weyl operator.
    Mellin { expr: String },
    /// Weyl Fourier automorphism `x -> -dx`, `dx -> x`.
    Fourier {
        #[arg(long, default_value_t = 1)]
        rank: usize,
        /// Scale the result to a monic relation.
        #[arg(long)]
        normalize: bool,
        expr: String,
    },
    /// Trace function values on F_q.
    Trace {
        #[arg(long)]
        q: u32,
        /// B, I0:n or psi.
        #[arg(long)]
        object: String,
    },
    /// Run one named check.
    Verify {
        check: String,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        chi: Option<String>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        window: Option<i64>,
        #[arg(long)]
        ell: Option<u64>,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        nprime: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Run every check over a parameter grid.
    VerifyAll {
        #[arg(long, default_value = "quick", value_parser = ["quick", "full"])]
        profile: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// List check names with the statements they exercise.
    List,
}

/// Usage and input errors; 0, 1 and 2 are check verdicts.
const EXIT_ERROR: u8 = 3;

fn emit<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable output"));
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Reduce { algebra, rank, expr } => {
            let out = reduce(parse_algebra(&algebra, rank)?, &expr)?;
            if cli.pretty {
                println!("{}", out.output);
            } else {
                emit(&out);
            }
        }
        Command::Mellin { expr } => {
            let out = mellin(&expr)?;
            if cli.pretty {
                println!("{}", out.output);
            } else {
                emit(&out);
            }
        }
        Command::Fourier { rank, normalize, expr } => {
            let out = fourier(rank, &expr, normalize)?;
            if cli.pretty {
                println!("{}", out.output);
            } else {
                emit(&out);
            }
        }
        Command::Trace { q, object } => {
            let t = trace_table(q, &object)?;
            if cli.pretty {
                print!("{}", pretty::table(("x", &format!("t_{}(x)", t.object)), &t.values));
            } else {
                emit(&t);
            }
        }
        Command::Verify { check, q, d, chi, n, window, ell, r, nprime, seed, samples, degree } => {
            let id: CheckId = check.parse()?;
            let chi = chi.as_deref().map(Params::parse_chi).transpose()?;
            let params = Params { q, d, chi, n, window, ell, r, nprime, seed, samples, degree };
            let report = run_check(id, &params)?;
            if cli.pretty {
                print!("{}", pretty::report(&report));
            } else {
                emit(&report);
            }
            return Ok(report.verdict.exit_code() as u8);
        }
        Command::VerifyAll { profile, seed } => {
            let agg = run_all(profile.parse::<Profile>()?, seed);
            if cli.pretty {
                print!("{}", pretty::aggregate(&agg));
            } else {
                emit(&agg);
            }
            return Ok(if agg.passed { 0 } else { 1 });
        }
        Command::List => {
            let rows: Vec<(String, String)> =
                CheckId::ALL.iter().map(|c| (c.name().to_string(), c.citation().to_string())).collect();
            print!("{}", pretty::table(("check", "statement"), &rows));
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
