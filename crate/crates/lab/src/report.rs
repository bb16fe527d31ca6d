//! Verification reports: one CSV row per check plus a JSON summary.
//!
//! Every row stores `measured`, `bound` and `tolerance` with round-trip
//! precision, so its status can be recomputed from the file alone.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use anyhow::Context;
use dirichlet_hp::CheckStatus;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const CSV_FILE: &str = "report.csv";
pub const SUMMARY_FILE: &str = "summary.json";
pub const COLUMNS: [&str; 7] = [
    "suite",
    "check",
    "inputs_digest",
    "measured",
    "bound",
    "tolerance",
    "status",
];

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub suite: String,
    pub check: String,
    pub inputs_digest: String,
    pub measured: f64,
    pub bound: f64,
    pub tolerance: f64,
    pub status: CheckStatus,
}

impl Row {
    pub fn new(
        suite: &str,
        check: impl Into<String>,
        digest: String,
        measured: f64,
        bound: f64,
        tolerance: f64,
    ) -> Self {
        Self {
            suite: suite.to_string(),
            check: check.into(),
            inputs_digest: digest,
            measured,
            bound,
            tolerance,
            status: CheckStatus::classify(measured, bound, tolerance),
        }
    }
}

/// First 16 hex digits of the SHA-256 of `parts` joined by `|`.
pub fn digest(parts: &[&str]) -> String {
    let mut h = Sha256::new();
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            h.update(b"|");
        }
        h.update(p.as_bytes());
    }
    hex::encode(h.finalize())[..16].to_string()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    pub rows: Vec<Row>,
}

impl Report {
    pub fn extend(&mut self, rows: impl IntoIterator<Item = Row>) {
        self.rows.extend(rows);
    }

    pub fn summary(&self) -> BTreeMap<String, Counts> {
        let mut out: BTreeMap<String, Counts> = BTreeMap::new();
        for r in &self.rows {
            let c = out.entry(r.suite.clone()).or_default();
            match r.status {
                CheckStatus::Pass => c.pass += 1,
                CheckStatus::Fail => c.fail += 1,
                CheckStatus::Inconclusive => c.inconclusive += 1,
            }
        }
        out
    }

    pub fn has_failures(&self) -> bool {
        self.rows.iter().any(|r| r.status == CheckStatus::Fail)
    }

    pub fn write_csv<W: std::io::Write>(&self, out: W) -> anyhow::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(COLUMNS)?;
        for r in &self.rows {
            w.write_record([
                r.suite.as_str(),
                r.check.as_str(),
                r.inputs_digest.as_str(),
                &r.measured.to_string(),
                &r.bound.to_string(),
                &r.tolerance.to_string(),
                r.status.as_str(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn summary_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.summary()).expect("summary serializes");
        s.push('\n');
        s
    }

    /// Writes `report.csv` and `summary.json` into `dir`, creating it if needed.
    pub fn emit(&self, dir: &Path) -> anyhow::Result<(PathBuf, PathBuf)> {
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let csv_path = dir.join(CSV_FILE);
        let json_path = dir.join(SUMMARY_FILE);
        let file = std::fs::File::create(&csv_path).with_context(|| format!("writing {}", csv_path.display()))?;
        self.write_csv(std::io::BufWriter::new(file))
            .with_context(|| format!("writing {}", csv_path.display()))?;
        std::fs::write(&json_path, self.summary_json()).with_context(|| format!("writing {}", json_path.display()))?;
        Ok((csv_path, json_path))
    }

    pub fn read_csv<R: std::io::Read>(input: R) -> anyhow::Result<Vec<(Row, CheckStatus)>> {
        let mut rdr = csv::Reader::from_reader(input);
        let headers = rdr.headers()?.clone();
        anyhow::ensure!(
            headers.iter().eq(COLUMNS.iter().copied()),
            "unexpected columns: {:?}",
            headers
        );
        let mut out = Vec::new();
        for (i, rec) in rdr.records().enumerate() {
            let rec = rec?;
            let num = |k: usize| -> anyhow::Result<f64> {
                rec[k]
                    .parse::<f64>()
                    .with_context(|| format!("row {}: bad {} `{}`", i + 1, COLUMNS[k], &rec[k]))
            };
            let stored =
                CheckStatus::parse(&rec[6]).with_context(|| format!("row {}: bad status `{}`", i + 1, &rec[6]))?;
            let row = Row::new(&rec[0], &rec[1], rec[2].to_string(), num(3)?, num(4)?, num(5)?);
            out.push((row, stored));
        }
        Ok(out)
    }
}

/// Result of re-deriving every status in a stored CSV.
#[derive(Debug, Clone, PartialEq)]
pub struct Audit {
    pub rows: usize,
    pub mismatches: Vec<usize>,
    pub counts: Counts,
}

pub fn audit<R: std::io::Read>(input: R) -> anyhow::Result<Audit> {
    let rows = Report::read_csv(input)?;
    let mut counts = Counts::default();
    let mut mismatches = Vec::new();
    for (i, (row, stored)) in rows.iter().enumerate() {
        if row.status != *stored {
            mismatches.push(i + 1);
        }
        match stored {
            CheckStatus::Pass => counts.pass += 1,
            CheckStatus::Fail => counts.fail += 1,
            CheckStatus::Inconclusive => counts.inconclusive += 1,
        }
    }
    Ok(Audit {
        rows: rows.len(),
        mismatches,
        counts,
    })
}
