//! Check records and their text/JSON serialization.

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ReportRecord {
    #[serde(rename = "check-id")]
    pub check_id: String,
    pub location: String,
    pub status: Status,
    pub witness: String,
    /// Milliseconds; `None` when timing is suppressed for reproducible output.
    #[serde(rename = "wall-time-ms")]
    pub wall_time_ms: Option<f64>,
}

impl ReportRecord {
    /// Runs `f` and records its outcome: `Ok(witness)` passes, `Err(witness)` fails.
    pub fn run(id: impl Into<String>, location: impl Into<String>, f: impl FnOnce() -> Result<String, String>) -> Self {
        let start = Instant::now();
        let out = f();
        let ms = start.elapsed().as_secs_f64() * 1e3;
        let (status, witness) = match out {
            Ok(w) => (Status::Pass, w),
            Err(w) => (Status::Fail, w),
        };
        ReportRecord { check_id: id.into(), location: location.into(), status, witness, wall_time_ms: Some(ms) }
    }

    pub fn skipped(id: impl Into<String>, location: impl Into<String>, why: impl Into<String>) -> Self {
        ReportRecord {
            check_id: id.into(),
            location: location.into(),
            status: Status::Skipped,
            witness: why.into(),
            wall_time_ms: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn without_timing(mut self) -> Self {
        self.wall_time_ms = None;
        self
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

impl fmt::Display for ReportRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {} ({})", self.status, self.check_id, self.location)?;
        if let Some(ms) = self.wall_time_ms {
            write!(f, " {ms:.1}ms")?;
        }
        if !self.witness.is_empty() {
            write!(f, ": {}", self.witness)?;
        }
        Ok(())
    }
}

/// `Ok` with an empty witness when `lhs == rhs`, else the residual text.
pub fn expect_eq<T: PartialEq + fmt::Display>(
    lhs: &T,
    rhs: &T,
    residual: impl FnOnce() -> String,
) -> Result<String, String> {
    if lhs == rhs {
        Ok(String::new())
    } else {
        Err(format!("lhs = {lhs}; rhs = {rhs}; residual = {}", residual()))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(records: &[ReportRecord]) -> Self {
        let mut s = Summary::default();
        for r in records {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} passed, {} failed, {} skipped", self.pass, self.fail, self.skipped)
    }
}
