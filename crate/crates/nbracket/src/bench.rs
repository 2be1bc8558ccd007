//! Oracle versus fast path timings on the nested Bremner shape.

use std::fmt::Write;
use std::time::Instant;

use nbracket_core::expand::{supplant_all, BlockRunner, ProfileRun, Sequential};
use nbracket_core::identities::shapes::bremner_side2;
use nbracket_core::{AntisymElement, ExpandError};
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::error::CliError;

#[derive(Clone, Debug)]
pub struct BenchRow {
    pub label: String,
    pub threads: usize,
    pub words: u128,
    pub seconds: f64,
    pub peak_classes: usize,
    /// Time of the single-partition oracle run divided by this row's time.
    pub speedup: Option<f64>,
    pub note: String,
}

impl BenchRow {
    pub fn words_per_second(&self) -> f64 {
        if self.seconds > 0.0 {
            self.words as f64 / self.seconds
        } else {
            f64::INFINITY
        }
    }
}

fn timed(f: impl FnOnce() -> Result<ProfileRun, ExpandError>) -> Result<(ProfileRun, f64), ExpandError> {
    let start = Instant::now();
    let run = f()?;
    Ok((run, start.elapsed().as_secs_f64()))
}

fn row(label: &str, threads: usize, run: &ProfileRun, seconds: f64, note: String) -> BenchRow {
    BenchRow {
        label: label.into(),
        threads,
        words: run.words,
        seconds,
        peak_classes: run.peak_classes,
        speedup: None,
        note,
    }
}

/// Runs the oracle with one partition and with the configured pool, then
/// the fast path. When the plain oracle exceeds the budget, the supplanted
/// oracle (inner all-antisymmetrized bracket replaced by a product) is
/// timed instead.
pub fn bench(l: u32, config: &RunConfig) -> Result<Vec<BenchRow>, CliError> {
    if l == 0 {
        return Err(CliError::Unsupported("L must be at least 1".into()));
    }
    let x = config.expander();
    let pool = config.runner()?;
    let e = bremner_side2(l);
    let mut rows = Vec::new();
    let mut reference: Option<AntisymElement> = None;
    let mut check = |run: &ProfileRun| match &reference {
        None => {
            reference = Some(run.profile.clone());
            "ok".to_string()
        }
        Some(p) if *p == run.profile => "agrees".to_string(),
        Some(_) => "MISMATCH".to_string(),
    };

    let oracle = |runner: &dyn BlockRunner| timed(|| x.oracle_run(&e, runner));
    match oracle(&Sequential) {
        Ok((run, t)) => {
            rows.push(row("oracle", 1, &run, t, check(&run)));
            let (run, t) = oracle(&pool)?;
            rows.push(row("oracle", pool.threads(), &run, t, check(&run)));
        }
        Err(err @ ExpandError::BudgetExceeded { .. }) => {
            rows.push(BenchRow {
                label: "oracle".into(),
                threads: 1,
                words: 0,
                seconds: 0.0,
                peak_classes: 0,
                speedup: None,
                note: format!("refused: {err}"),
            });
            let scaled = supplant_all(&e).map_err(|e| CliError::Unsupported(e.to_string()))?;
            if let Ok((run, t)) = timed(|| x.oracle_run_scaled(&scaled, &Sequential)) {
                rows.push(row("supplanted oracle", 1, &run, t, check(&run)));
                let (run, t) = timed(|| x.oracle_run_scaled(&scaled, &pool))?;
                rows.push(row("supplanted oracle", pool.threads(), &run, t, check(&run)));
            }
        }
        Err(err) => return Err(err.into()),
    }
    let (run, t) = timed(|| x.fast_run(&e))?;
    rows.push(row("fast path", 1, &run, t, check(&run)));

    if let Some(base) = rows.iter().find(|r| r.threads == 1 && r.words > 0 && r.label != "fast path").map(|r| r.seconds) {
        for r in rows.iter_mut().filter(|r| r.words > 0) {
            r.speedup = Some(base / r.seconds.max(1e-9));
        }
    }
    Ok(rows)
}

pub fn table(l: u32, rows: &[BenchRow]) -> String {
    let mut s = format!("bench L={l}: {}\n", bremner_side2(l));
    writeln!(s, "{:<18} {:>7} {:>14} {:>10} {:>14} {:>6} {:>8}  note", "path", "threads", "words", "seconds", "words/s", "peak", "speedup")
        .unwrap();
    for r in rows {
        let speedup = r.speedup.map_or("-".to_string(), |v| format!("{v:.2}x"));
        writeln!(
            s,
            "{:<18} {:>7} {:>14} {:>10.4} {:>14.0} {:>6} {:>8}  {}",
            r.label,
            r.threads,
            r.words,
            r.seconds,
            r.words_per_second(),
            r.peak_classes,
            speedup,
            r.note
        )
        .unwrap();
    }
    s
}

pub fn to_json(l: u32, rows: &[BenchRow]) -> Value {
    json!({
        "bench": { "L": l, "expression": bremner_side2(l).to_string() },
        "rows": rows.iter().map(|r| json!({
            "path": r.label,
            "threads": r.threads,
            "words": r.words.to_string().parse::<serde_json::Number>().unwrap(),
            "seconds": r.seconds,
            "words_per_second": if r.seconds > 0.0 { json!(r.words_per_second()) } else { Value::Null },
            "peak_classes": r.peak_classes,
            "speedup": r.speedup,
            "note": r.note,
        })).collect::<Vec<_>>(),
    })
}
