use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{Settings, Status, VerificationOutcome};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportHeader {
    pub engine: String,
    pub order: i64,
    pub points: usize,
    pub tol: f64,
    pub seed: u64,
    pub records: usize,
}

/// A finished verification run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub header: ReportHeader,
    pub outcomes: Vec<VerificationOutcome>,
}

impl Report {
    pub fn new(engine: &str, settings: &Settings, records: usize, outcomes: Vec<VerificationOutcome>) -> Self {
        let header = ReportHeader {
            engine: engine.into(),
            order: settings.order,
            points: settings.points,
            tol: settings.tol,
            seed: settings.seed,
            records,
        };
        Self { header, outcomes }
    }

    pub fn any_failed(&self) -> bool {
        self.outcomes.iter().any(VerificationOutcome::failed)
    }

    pub fn count(&self, s: Status) -> usize {
        self.outcomes.iter().filter(|o| o.status == s).count()
    }

    /// Sorted-key JSON with a trailing newline.
    pub fn to_json(&self) -> Result<String> {
        let v = serde_json::to_value(self).map_err(|e| Error::Parse(e.to_string()))?;
        let mut s = serde_json::to_string_pretty(&v).map_err(|e| Error::Parse(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_markdown(&self) -> String {
        let h = &self.header;
        let mut s = String::new();
        let _ = writeln!(s, "# Verification report\n");
        let _ = writeln!(
            s,
            "engine {}, order {}, points {}, tol {:e}, seed {}, records {}\n",
            h.engine, h.order, h.points, h.tol, h.seed, h.records
        );
        let _ = writeln!(s, "| id | engine | status | residual | time (ms) |");
        let _ = writeln!(s, "|---|---|---|---|---|");
        for o in &self.outcomes {
            let res = o.max_residual.map_or("-".to_string(), |r| format!("{r:.2e}"));
            let t = o.elapsed_ms.map_or("-".to_string(), |t| t.to_string());
            let _ = writeln!(s, "| {} | {} | {} | {} | {} |", o.id, o.engine, o.status, res, t);
        }
        let _ = writeln!(
            s,
            "\n{} pass, {} fail, {} skipped-degenerate, {} not-applicable",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::SkippedDegenerate),
            self.count(Status::NotApplicable)
        );
        s
    }
}
