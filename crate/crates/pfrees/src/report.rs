//! Per-claim report lines.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::formats::SCHEMA;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    BudgetExceeded,
    Error,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::BudgetExceeded => "BUDGET_EXCEEDED",
            Status::Error => "ERROR",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub schema: u32,
    pub id: String,
    pub status: Status,
    pub wall_ms: u64,
    pub budget_s: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate_path: Option<String>,
    pub witness: Value,
}

impl ClaimReport {
    pub fn new(id: &str, status: Status, wall_ms: u64, budget_s: f64, witness: Value) -> Self {
        ClaimReport { schema: SCHEMA, id: id.to_string(), status, wall_ms, budget_s, certificate_path: None, witness }
    }

    pub fn text_line(&self) -> String {
        format!("{:<28} {:<16} {:>9} ms", self.id, self.status.name(), self.wall_ms)
    }
}

/// Exit code of an aggregate: budget trumps failure trumps pass; errors map
/// to internal failure.
pub fn aggregate_exit(reports: &[ClaimReport]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Error) {
        4
    } else if reports.iter().any(|r| r.status == Status::BudgetExceeded) {
        3
    } else if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn report_round_trip() {
        let r = ClaimReport::new("X", Status::BudgetExceeded, 12, 1.5, json!({"k": [1, 2]}));
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains("\"status\":\"BUDGET_EXCEEDED\""));
        let back: ClaimReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn exit_codes() {
        let mk = |s| ClaimReport::new("X", s, 0, 0.0, Value::Null);
        assert_eq!(aggregate_exit(&[mk(Status::Pass)]), 0);
        assert_eq!(aggregate_exit(&[mk(Status::Pass), mk(Status::Fail)]), 1);
        assert_eq!(aggregate_exit(&[mk(Status::Fail), mk(Status::BudgetExceeded)]), 3);
    }
}
