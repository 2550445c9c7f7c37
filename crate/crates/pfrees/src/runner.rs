//! Executes registry claims, optionally in parallel.

use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde_json::json;

use crate::budget::Deadline;
use crate::claims::ClaimRecord;
use crate::error::CliError;
use crate::report::{ClaimReport, Status};

/// Per-run settings.
#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    /// Overrides every claim's own budget.
    pub budget_s: Option<f64>,
    /// Witnesses are written to `<dir>/<id>.json` when set.
    pub certificate_dir: Option<PathBuf>,
}

fn write_certificate(dir: &Path, report: &mut ClaimReport) -> Result<(), CliError> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::Io(dir.display().to_string(), e))?;
    let path = dir.join(format!("{}.json", report.id));
    let text = serde_json::to_string_pretty(&report.witness).map_err(|e| CliError::Internal(e.to_string()))?;
    std::fs::write(&path, text).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    report.certificate_path = Some(path.display().to_string());
    Ok(())
}

pub fn run_claim(claim: &ClaimRecord, opts: &RunOptions) -> ClaimReport {
    let budget_s = opts.budget_s.unwrap_or(claim.budget_s);
    let deadline = Deadline::after(budget_s);
    let start = Instant::now();
    let result = (claim.check)(&deadline);
    let wall_ms = start.elapsed().as_millis() as u64;
    let mut report = match result {
        Ok(o) if o.pass => ClaimReport::new(claim.id, Status::Pass, wall_ms, budget_s, o.witness),
        Ok(o) if deadline.was_hit() => ClaimReport::new(claim.id, Status::BudgetExceeded, wall_ms, budget_s, o.witness),
        Ok(o) => ClaimReport::new(claim.id, Status::Fail, wall_ms, budget_s, o.witness),
        Err(CliError::Budget) => ClaimReport::new(
            claim.id,
            Status::BudgetExceeded,
            wall_ms,
            budget_s,
            json!({"partial": true, "elapsed_ms": wall_ms}),
        ),
        Err(e) => ClaimReport::new(claim.id, Status::Error, wall_ms, budget_s, json!({"error": e.to_string()})),
    };
    if let Some(dir) = &opts.certificate_dir {
        if let Err(e) = write_certificate(dir, &mut report) {
            report.status = Status::Error;
            report.witness = json!({"error": e.to_string()});
        }
    }
    report
}

/// Runs `claims` on `jobs` worker threads; reports come back in input order.
pub fn run_claims(claims: &[ClaimRecord], jobs: usize, opts: &RunOptions) -> Vec<ClaimReport> {
    let jobs = jobs.clamp(1, claims.len().max(1));
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<ClaimReport>>> = Mutex::new(vec![None; claims.len()]);
    std::thread::scope(|s| {
        for _ in 0..jobs {
            s.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                let Some(c) = claims.get(k) else {
                    break;
                };
                let r = run_claim(c, opts);
                slots.lock().unwrap()[k] = Some(r);
            });
        }
    });
    slots.into_inner().unwrap().into_iter().map(|r| r.expect("every claim ran")).collect()
}

pub fn default_jobs() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}
