//! The JSON report document.
//!
//! Schema `bhopf-report/1`:
//!
//! ```text
//! {
//!   "schema": "bhopf-report/1",
//!   "artifact_version": "<crate version>",
//!   "grammar_version": "<expression grammar version>",
//!   "warnings": ["..."],
//!   "summary": { "total", "passed", "failed", "skipped", "diagnostic" },
//!   "reports": [ { "scenario", "suite", "point", "params", <CheckReport fields> } ]
//! }
//! ```
//!
//! Non-finite residuals serialize as `null`. Only `wall_time_ms` differs
//! between two runs of the same config.

use std::path::Path;

use boson_hopf::Status;
use serde::Serialize;

use crate::runner::{Record, RunOutput};
use crate::CliError;

pub const SCHEMA: &str = "bhopf-report/1";

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub diagnostic: usize,
}

impl Summary {
    pub fn of(records: &[Record]) -> Self {
        let mut s = Summary { total: records.len(), ..Default::default() };
        for r in records {
            if r.report.diagnostic {
                s.diagnostic += 1;
                continue;
            }
            match r.report.status {
                Status::Pass => s.passed += 1,
                Status::Fail => s.failed += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s
    }
}

#[derive(Debug, Serialize)]
pub struct Document<'a> {
    pub schema: &'static str,
    pub artifact_version: &'static str,
    pub grammar_version: &'static str,
    pub warnings: &'a [String],
    pub summary: Summary,
    pub reports: &'a [Record],
}

impl<'a> Document<'a> {
    pub fn new(out: &'a RunOutput) -> Self {
        Document {
            schema: SCHEMA,
            artifact_version: env!("CARGO_PKG_VERSION"),
            grammar_version: boson_hopf::expr::GRAMMAR_VERSION,
            warnings: &out.warnings,
            summary: Summary::of(&out.records),
            reports: &out.records,
        }
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        let mut s = serde_json::to_string_pretty(self).map_err(|e| CliError::Output(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }

    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        std::fs::write(path, self.to_json()?).map_err(|e| CliError::Output(format!("{}: {e}", path.display())))
    }
}
