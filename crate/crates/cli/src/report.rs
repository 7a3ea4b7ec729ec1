use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::witness::WitnessFile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Fail => 1,
            Verdict::Pass | Verdict::Inconclusive => 0,
        }
    }

    pub fn from_bool(pass: bool) -> Self {
        if pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

/// Everything a command reports. Apart from `duration_ms`, re-running the
/// same command line reproduces it exactly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub command: Vec<String>,
    pub version: String,
    pub seed: u64,
    pub threads: Option<usize>,
    pub parameters: Value,
    pub verdict: Verdict,
    pub summary: String,
    pub result: Value,
    pub witnesses: Vec<WitnessFile>,
    pub witness_files: Vec<String>,
    pub duration_ms: u64,
}

impl ExperimentReport {
    /// The report with its timing zeroed, for reproducibility comparisons.
    pub fn without_timing(&self) -> Self {
        ExperimentReport { duration_ms: 0, ..self.clone() }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// Two columns, `path,value`, one row per JSON leaf.
    pub fn to_csv(&self) -> anyhow::Result<String> {
        let value = serde_json::to_value(self)?;
        let mut rows = Vec::new();
        flatten("", &value, &mut rows);
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["path", "value"])?;
        for (path, v) in rows {
            w.write_record([path, v])?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                flatten(&join(k), x, out);
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), x, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        Value::Null => out.push((prefix.to_string(), String::new())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}
