//! Results log: one JSON report per line, appended.

use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use serde_json::Value;

/// Appends `report` with a `recorded_at` field (seconds since the Unix epoch).
pub fn append(path: &Path, report: &Value) -> io::Result<()> {
    let mut entry = report.clone();
    if let Value::Object(m) = &mut entry {
        let now = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
        m.insert("recorded_at".into(), now.into());
    }
    let mut line = serde_json::to_string(&entry)?;
    line.push('\n');
    OpenOptions::new().create(true).append(true).open(path)?.write_all(line.as_bytes())
}

pub fn read(path: &Path) -> io::Result<Vec<Value>> {
    BufReader::new(File::open(path)?)
        .lines()
        .filter(|l| !matches!(l, Ok(s) if s.trim().is_empty()))
        .map(|l| Ok(serde_json::from_str(&l?)?))
        .collect()
}
