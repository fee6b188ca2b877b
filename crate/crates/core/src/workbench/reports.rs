//! Line-delimited JSON report files.

use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::verify::{VerificationReport, VERSION};

/// A persisted report: the report fields plus version and timestamp.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    #[serde(flatten)]
    pub report: VerificationReport,
    pub version: String,
    pub timestamp: String,
}

impl ReportRecord {
    pub fn new(report: VerificationReport, timestamp: &str) -> Self {
        ReportRecord {
            report,
            version: VERSION.to_string(),
            timestamp: timestamp.to_string(),
        }
    }
}

pub fn now() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true)
}

pub fn write_records<W: Write>(records: &[ReportRecord], out: W) -> Result<()> {
    let mut w = BufWriter::new(out);
    for r in records {
        serde_json::to_writer(&mut w, r)?;
        w.write_all(b"\n")?;
    }
    w.flush()?;
    Ok(())
}

/// Writes one record per line, all stamped with the current time.
pub fn persist_reports(reports: &[VerificationReport], path: &Path) -> Result<()> {
    let ts = now();
    let records: Vec<ReportRecord> = reports.iter().cloned().map(|r| ReportRecord::new(r, &ts)).collect();
    write_records(&records, std::fs::File::create(path)?)
}

pub fn parse_records(text: &str) -> Result<Vec<ReportRecord>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|e| Error::Parse {
                line: i + 1,
                msg: e.to_string(),
            })
        })
        .collect()
}

pub fn load_records(path: &Path) -> Result<Vec<ReportRecord>> {
    let mut text = String::new();
    for line in BufReader::new(std::fs::File::open(path)?).lines() {
        text.push_str(&line?);
        text.push('\n');
    }
    parse_records(&text)
}

pub fn load_reports(path: &Path) -> Result<Vec<VerificationReport>> {
    Ok(load_records(path)?.into_iter().map(|r| r.report).collect())
}
