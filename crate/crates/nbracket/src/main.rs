use std::num::NonZeroU64;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use nbracket::commands::{self, Outcome};
use nbracket::{record, CliError, Format, MethodArg, RunConfig, Threads};
use nbracket_core::expand::DEFAULT_TERM_BUDGET;
use nbracket_core::ParseOptions;

/// Expand Nambu N-brackets and verify their identities exactly.
#[derive(Parser, Debug)]
#[command(name = "nbracket", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for oracle enumeration: a positive integer or `auto`.
    #[arg(long, global = true, default_value = "auto")]
    threads: Threads,

    /// Maximum number of words an expansion may generate.
    #[arg(long, global = true, default_value_t = NonZeroU64::new(DEFAULT_TERM_BUDGET).unwrap())]
    budget: NonZeroU64,

    /// Append verify reports to this newline-delimited JSON log.
    #[arg(long, global = true, value_name = "PATH")]
    record: Option<PathBuf>,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Lowercase letters to read as fixed generators.
    #[arg(long, global = true, default_value = "")]
    fixed: String,

    /// Uppercase letters to read as antisymmetrized generators.
    #[arg(long, global = true, default_value = "")]
    anti: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand an expression into signed words.
    Expand { expr: String },
    /// Reduce an expression modulo antisymmetrization of the lowercase family.
    Reduce {
        expr: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Check an identity: even, odd-reduce, bremner, sums or decomp.
    Verify {
        identity: String,
        param: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Time the oracle against the fast path at half-order L.
    Bench { l: u32 },
    /// Compare oracle and fast path on random expressions.
    Selfcheck {
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long, default_value_t = 1_000_000)]
        max_words: u128,
    },
}

fn selfcheck(cases: usize, max_words: u128, config: &RunConfig) -> Outcome {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(config.seed);
    let r = nbracket::random::oracle_fast_check(&mut rng, cases, max_words);
    let mut text = format!("{} cases, {} mismatches (seed {})\n", r.cases, r.mismatches.len(), config.seed);
    for m in &r.mismatches {
        text.push_str(&format!("  {m}\n"));
    }
    Outcome { text, exit_code: i32::from(!r.mismatches.is_empty()), record: None }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let config = RunConfig {
        term_budget: cli.budget,
        threads: cli.threads,
        format: cli.format,
        seed: cli.seed,
        parse: ParseOptions { fixed: cli.fixed.chars().collect(), anti: cli.anti.chars().collect() },
    };
    let outcome = match cli.command {
        Command::Expand { expr } => commands::expand(&expr, &config)?,
        Command::Reduce { expr, method } => commands::reduce(&expr, method.into(), &config)?,
        Command::Verify { identity, param, method } => commands::verify(&identity, param, method.into(), &config)?,
        Command::Bench { l } => commands::bench(l, &config)?,
        Command::Selfcheck { cases, max_words } => selfcheck(cases, max_words, &config),
    };
    if let (Some(path), Some(entry)) = (&cli.record, &outcome.record) {
        record::append(path, entry)?;
    }
    Ok(outcome)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
