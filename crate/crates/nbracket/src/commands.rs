//! Subcommand bodies. Each returns the rendered output and exit code so the
//! binary stays a thin wrapper.

use std::time::Instant;

use nbracket_core::identities::{IdentityId, IdentityReport, Status, Verifier};
use nbracket_core::lang::parse_with;
use nbracket_core::{BracketExpr, Method};
use serde_json::Value;

use crate::config::{Format, RunConfig};
use crate::error::CliError;
use crate::{bench, json, output};

#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub exit_code: i32,
    /// Machine form for the results log, when the command produces a report.
    pub record: Option<Value>,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, exit_code: 0, record: None }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn parse(expr: &str, config: &RunConfig) -> Result<BracketExpr, CliError> {
    Ok(parse_with(expr, &config.parse)?)
}

pub fn expand(expr: &str, config: &RunConfig) -> Result<Outcome, CliError> {
    let e = parse(expr, config)?;
    let element = config.expander().expand_expr(&e)?;
    Ok(Outcome::ok(match config.format {
        Format::Text => output::expansion_text(&element),
        Format::Json => pretty(&json::expansion(&e, &element)),
        Format::Latex => output::expansion_latex(&e, &element),
    }))
}

pub fn reduce(expr: &str, method: Method, config: &RunConfig) -> Result<Outcome, CliError> {
    let e = parse(expr, config)?;
    e.validate_multilinear().map_err(|err| CliError::Invalid(format!("expression is not multilinear: {err}")))?;
    let runner = config.runner()?;
    let run =config.expander().profile(&e, method, &runner)?;
    Ok(Outcome::ok(match config.format {
        Format::Text => output::reduction_text(&e, &run),
        Format::Json => pretty(&json::reduction(&e, &run)),
        Format::Latex => output::reduction_latex(&e, &run),
    }))
}

/// Runs one verifier and times it.
pub fn run_verifier(
    identity: IdentityId,
    param: u32,
    method: Method,
    config: &RunConfig,
) -> Result<(IdentityReport, u128), CliError> {
    let runner = config.runner()?;
    let verifier = Verifier { expander: config.expander(), method, runner: &runner };
    let start = Instant::now();
    let report = verifier.verify(identity, param)?;
    Ok((report, start.elapsed().as_millis()))
}

pub fn verify(identity: &str, param: u32, method: Method, config: &RunConfig) -> Result<Outcome, CliError> {
    let id = IdentityId::from_name(identity).ok_or_else(|| CliError::Unsupported(format!("unknown identity {identity:?}")))?;
    let (report, elapsed_ms) = run_verifier(id, param, method, config)?;
    let value = json::report(&report, elapsed_ms);
    let text = match config.format {
        Format::Text => output::report_text(&report, elapsed_ms),
        Format::Json => pretty(&value),
        Format::Latex => output::report_latex(&report),
    };
    let exit_code = match report.status {
        Status::Verified => 0,
        Status::Violated => 1,
    };
    Ok(Outcome { text, exit_code, record: Some(value) })
}

pub fn bench(l: u32, config: &RunConfig) -> Result<Outcome, CliError> {
    let rows = bench::bench(l, config)?;
    Ok(Outcome::ok(match config.format {
        Format::Json => pretty(&bench::to_json(l, &rows)),
        _ => bench::table(l, &rows),
    }))
}
