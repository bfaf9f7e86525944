//! Report records, one per requested check.

use crate::scene::Verdict;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub check: String,
    pub label: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Verdict>,
    /// Whether the record counts as a success for the exit code.
    pub ok: bool,
    pub details: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl Record {
    /// With an expectation the verdict must match it; without one, only
    /// `fail` and `error` count against the run.
    pub fn judge(verdict: Verdict, expected: Option<Verdict>) -> bool {
        match expected {
            Some(e) => e == verdict,
            None => !matches!(verdict, Verdict::Fail | Verdict::Error),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub records: usize,
    pub ok: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub scene: String,
    pub version: u32,
    pub seed: u64,
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl Report {
    pub fn new(scene: String, seed: u64, records: Vec<Record>) -> Self {
        let ok = records.iter().filter(|r| r.ok).count();
        Report {
            scene,
            version: crate::scene::SCENE_VERSION,
            seed,
            summary: Summary {
                records: records.len(),
                ok,
                failed: records.len() - ok,
            },
            records,
        }
    }

    pub fn all_ok(&self) -> bool {
        self.summary.failed == 0
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
