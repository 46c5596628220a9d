//! The structured report document emitted by `verify-paper`.
//!
//! The document has two top-level sections. `report` is deterministic byte
//! for byte for a given (level, version): fixed check ordering, sorted JSON
//! keys, no timestamps. `footer` carries the per-check runtimes and is the
//! only part allowed to differ between runs; golden comparisons strip it.

use serde::Serialize;
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Measurements the claims do not assert at this scale.
    ReportedOnly,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub check_id: String,
    pub claim: String,
    pub status: Status,
    pub payload: Value,
    #[serde(skip)]
    pub runtime_ms: u128,
}

impl CheckRecord {
    pub fn asserted_pass(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub level: String,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn all_asserted_pass(&self) -> bool {
        self.checks.iter().all(|c| c.asserted_pass())
    }

    /// The deterministic section.
    pub fn report_value(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "tool": "kronfold",
            "version": env!("CARGO_PKG_VERSION"),
            "level": self.level,
            "all_asserted_pass": self.all_asserted_pass(),
            "checks": self.checks.iter().map(|c| json!({
                "check_id": c.check_id,
                "claim": c.claim,
                "status": c.status,
                "payload": c.payload,
            })).collect::<Vec<_>>(),
        })
    }

    /// The full document: deterministic section plus runtime footer.
    pub fn document(&self) -> Value {
        let mut runtimes = Map::new();
        let mut total: u128 = 0;
        for c in &self.checks {
            runtimes.insert(c.check_id.clone(), json!(c.runtime_ms as u64));
            total += c.runtime_ms;
        }
        json!({
            "report": self.report_value(),
            "footer": {
                "runtime_ms": Value::Object(runtimes),
                "total_runtime_ms": total as u64,
            },
        })
    }
}

/// Runs one check body, capturing its runtime.
pub fn run_check(
    check_id: &str,
    claim: &str,
    body: impl FnOnce() -> (Status, Value),
) -> CheckRecord {
    let start = std::time::Instant::now();
    let (status, payload) = body();
    CheckRecord {
        check_id: check_id.to_string(),
        claim: claim.to_string(),
        status,
        payload,
        runtime_ms: start.elapsed().as_millis(),
    }
}
