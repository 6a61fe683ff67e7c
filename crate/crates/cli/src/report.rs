//! The versioned report document.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

pub const REPORT_SCHEMA: &str = "cocontra-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JobReport {
    pub id: String,
    pub command: String,
    pub status: Status,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub counts: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Wall-clock time; only present with `--timing`, since it breaks
    /// byte-for-byte reproducibility.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub schema: String,
    pub field: String,
    pub oracle: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub jobs: Vec<JobReport>,
    pub summary: Summary,
}

impl RunReport {
    pub fn new(field: String, oracle: bool, seed: Option<u64>, jobs: Vec<JobReport>) -> Self {
        let mut summary = Summary::default();
        for j in &jobs {
            match j.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Error => summary.error += 1,
            }
        }
        RunReport {
            schema: REPORT_SCHEMA.into(),
            field,
            oracle,
            seed,
            jobs,
            summary,
        }
    }

    /// 0 when every job passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail == 0 && self.summary.error == 0 {
            0
        } else {
            1
        }
    }
}
