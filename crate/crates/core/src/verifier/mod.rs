//! Runs catalog records through the exact and numeric engines.

mod exact;
mod mutate;
mod numeric;
mod report;

use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::catalog::{Engine, Env, IdentityRecord};
use crate::error::Error;
use crate::qring::Monomial;

pub use exact::{degeneracy_check, expand_expr, is_degenerate};
pub use mutate::{mutate, random_mutations, Mutation};
pub use numeric::{eval_primitive, eval_terms, relative_residual, POLE_GUARD};
pub use report::{Report, ReportHeader};

/// Numeric evaluators, exposed for examples and cross-checks.
pub mod num {
    pub use super::numeric::{appell, dn, dn_closed, eulerian, poch_inf, theta, universal_g};
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Every suite entry collapsed; nothing was checked.
    SkippedDegenerate,
    /// The record does not support this engine.
    NotApplicable,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedDegenerate => "skipped-degenerate",
            Status::NotApplicable => "not-applicable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationOutcome {
    pub id: String,
    pub engine: Engine,
    pub status: Status,
    pub order: Option<i64>,
    pub points: Option<usize>,
    pub max_residual: Option<f64>,
    pub elapsed_ms: Option<u64>,
    pub details: Vec<String>,
}

impl VerificationOutcome {
    fn new(id: &str, engine: Engine) -> Self {
        Self {
            id: id.into(),
            engine,
            status: Status::Pass,
            order: None,
            points: None,
            max_residual: None,
            elapsed_ms: None,
            details: Vec::new(),
        }
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Knobs shared by both engines.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Settings {
    pub order: i64,
    pub points: usize,
    pub tol: f64,
    pub seed: u64,
    /// Record wall-clock times. Off by default so reports are reproducible.
    #[serde(default)]
    pub timings: bool,
}

impl Default for Settings {
    fn default() -> Self {
        Self { order: 40, points: 5, tol: 1e-8, seed: 0, timings: false }
    }
}

fn env_for(record: &IdentityRecord, entry: usize) -> Env {
    let mut bindings = record.spec_suite[entry].bindings.clone();
    if let Some(f) = record.formal_var() {
        bindings.entry(f.to_string()).or_insert(Monomial::z());
    }
    Env::new(bindings, record.scale)
}

/// Exact verification through `order` for every suite entry.
pub fn verify_exact(record: &IdentityRecord, order: i64) -> VerificationOutcome {
    let mut out = VerificationOutcome::new(&record.id, Engine::Exact);
    out.order = Some(order);
    let subs: Vec<_> = record.expr.iter().filter(|s| record.sub_engines(s).includes(Engine::Exact)).collect();
    if subs.is_empty() {
        out.status = Status::NotApplicable;
        out.details.push("no equation supports the exact engine".into());
        return out;
    }
    let mut checked = vec![0usize; subs.len()];
    let mut failed = false;
    for (i, entry) in record.spec_suite.iter().enumerate() {
        if let Some(reason) = &entry.degenerate {
            out.details.push(format!("entry {i}: skipped, annotated degenerate ({reason})"));
            continue;
        }
        let env = env_for(record, i);
        for (k, sub) in subs.iter().enumerate() {
            match expand_expr(&sub.expr, &env, order) {
                Ok(s) => match s.first_nonzero() {
                    None => checked[k] += 1,
                    Some((e, c)) => {
                        failed = true;
                        out.details.push(format!("{} entry {i}: first nonzero coefficient at q^{e}: {c}", sub.label));
                    }
                },
                Err(e) if is_degenerate(&e) => {
                    out.details.push(format!("{} entry {i}: unannotated degenerate: {e}", sub.label));
                }
                Err(e) => {
                    failed = true;
                    out.details.push(format!("{} entry {i}: error: {e}", sub.label));
                }
            }
            for (j, r) in sub.rational.iter().enumerate() {
                match expand_expr(r, &env, order) {
                    Ok(s) if s.has_rational_coeffs() => {}
                    Ok(_) => {
                        failed = true;
                        out.details.push(format!("{} entry {i}: rationality check {j} has irrational coefficients", sub.label));
                    }
                    Err(e) => {
                        failed = true;
                        out.details.push(format!("{} entry {i}: rationality check {j}: {e}", sub.label));
                    }
                }
            }
        }
    }
    out.status = if failed {
        Status::Fail
    } else if checked.contains(&0) {
        Status::SkippedDegenerate
    } else {
        out.max_residual = Some(0.0);
        Status::Pass
    };
    out
}

/// Per-record random stream: SHA-256 of the seed and the id.
fn record_rng(seed: u64, id: &str) -> ChaCha20Rng {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update(id.as_bytes());
    ChaCha20Rng::from_seed(h.finalize().into())
}

fn polar(rng: &mut ChaCha20Rng, lo: f64, hi: f64) -> Complex64 {
    let r = rng.gen_range(lo..=hi);
    let phase = rng.gen_range(0.0..std::f64::consts::TAU);
    Complex64::from_polar(r, phase)
}

const MAX_RESAMPLES: usize = 200;

/// Numeric verification at `points` random points, every free variable sampled
/// independently.
pub fn verify_numeric(record: &IdentityRecord, points: usize, tol: f64, seed: u64) -> VerificationOutcome {
    let mut out = VerificationOutcome::new(&record.id, Engine::Numeric);
    out.points = Some(points);
    let subs: Vec<_> = record.expr.iter().filter(|s| record.sub_engines(s).includes(Engine::Numeric)).collect();
    if subs.is_empty() {
        out.status = Status::NotApplicable;
        out.details.push("no equation supports the numeric engine".into());
        return out;
    }
    let names: Vec<String> = record.free_vars.iter().map(|v| v.name.clone()).collect();
    let mut rng = record_rng(seed, &record.id);
    let mut worst: f64 = 0.0;
    let mut failed = false;
    for p in 0..points {
        let mut done = false;
        for _ in 0..MAX_RESAMPLES {
            let q = polar(&mut rng, 0.15, 0.4);
            let vals = names.iter().map(|n| (n.clone(), polar(&mut rng, 0.8, 1.25))).collect();
            let res: Result<Vec<f64>, Error> =
                subs.iter().map(|s| eval_terms(&s.expr, q, &vals).map(|t| relative_residual(&t))).collect();
            match res {
                Ok(rs) => {
                    for (s, r) in subs.iter().zip(rs) {
                        if !(r <= tol) {
                            failed = true;
                            out.details.push(format!("{} point {p}: residual {r:.3e} at q = {q:.6}", s.label));
                        }
                        worst = worst.max(if r.is_nan() { f64::INFINITY } else { r });
                    }
                    done = true;
                    break;
                }
                Err(Error::NearPole(_)) => continue,
                Err(e) => {
                    failed = true;
                    out.details.push(format!("point {p}: {e}"));
                    done = true;
                    break;
                }
            }
        }
        if !done {
            failed = true;
            out.details.push(format!("point {p}: no pole-free sample after {MAX_RESAMPLES} attempts"));
        }
    }
    out.max_residual = Some(worst);
    out.status = if failed { Status::Fail } else { Status::Pass };
    out
}

/// Runs the requested engines on one record, in engine order.
pub fn verify_record(record: &IdentityRecord, engines: &[Engine], settings: &Settings) -> Vec<VerificationOutcome> {
    engines
        .iter()
        .map(|&e| {
            let start = Instant::now();
            let mut o = if !record.engines.includes(e) && record.expr.iter().all(|s| s.engines.is_none()) {
                let mut o = VerificationOutcome::new(&record.id, e);
                o.status = Status::NotApplicable;
                o.details.push(format!("record is not marked for the {e} engine"));
                o
            } else {
                match e {
                    Engine::Exact => verify_exact(record, settings.order),
                    Engine::Numeric => verify_numeric(record, settings.points, settings.tol, settings.seed),
                }
            };
            if settings.timings {
                o.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            o
        })
        .collect()
}

/// Verifies many records, `jobs` at a time. Output order follows `records`.
pub fn verify_all(records: &[IdentityRecord], engines: &[Engine], settings: &Settings, jobs: usize) -> Vec<VerificationOutcome> {
    let run = || records.par_iter().map(|r| verify_record(r, engines, settings)).collect::<Vec<_>>();
    let nested = match rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build() {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    };
    nested.into_iter().flatten().collect()
}
