//! Command-line front end. The binary is a thin wrapper around [`run`].

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::catalog::{build_catalog, families, parse_catalog, to_json, Engine, Engines, Field, IdentityRecord, SKIPPED_UNDEFINED};
use crate::verifier::{verify_all, Report, Settings};

pub const DEFAULT_ORDER: i64 = 40;
pub const DEFAULT_POINTS: usize = 5;
pub const DEFAULT_TOL: f64 = 1e-8;
pub const DEFAULT_SEED: u64 = 0;

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const TAGS: [&str; 4] = ["qomega", "numeric-only", "noted", "formal"];

#[derive(Parser, Debug)]
#[command(name = "qsplit", version, about = "Verify theta, Appell and mock theta identities exactly and numerically")]
struct Cli {
    /// Load the catalog from a JSON file instead of the built-in one.
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// One line per record.
    List {
        #[arg(long)]
        family: Option<String>,
        /// One of qomega, numeric-only, noted, formal.
        #[arg(long)]
        tag: Option<String>,
    },
    /// Verify the named records.
    Verify {
        #[arg(required = true)]
        ids: Vec<String>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Verify every record.
    VerifyAll {
        #[command(flatten)]
        run: RunArgs,
    },
    /// Print one record's expression and provenance.
    Show { id: String },
    /// Write a report, from a fresh run or a saved JSON report.
    Report {
        ids: Vec<String>,
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        tag: Option<String>,
        /// Re-render a saved JSON report instead of running.
        #[arg(long)]
        from: Option<PathBuf>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Dump the catalog as JSON.
    Catalog {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Exact,
    Numeric,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Args, Debug, Clone)]
struct RunArgs {
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: i64,
    #[arg(long, value_enum, default_value_t = EngineArg::Both)]
    engine: EngineArg,
    #[arg(long, default_value_t = DEFAULT_POINTS)]
    points: usize,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Include wall-clock times (makes reports run-dependent).
    #[arg(long)]
    timings: bool,
}

/// Resolved run configuration.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub ids: Vec<String>,
    pub order: i64,
    pub engine: EngineArg,
    pub points: usize,
    pub tol: f64,
    pub seed: u64,
    pub jobs: usize,
    pub out_path: Option<PathBuf>,
    pub format: Format,
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            ids: Vec::new(),
            order: DEFAULT_ORDER,
            engine: EngineArg::Both,
            points: DEFAULT_POINTS,
            tol: DEFAULT_TOL,
            seed: DEFAULT_SEED,
            jobs: default_jobs(),
            out_path: None,
            format: Format::Json,
            timings: false,
        }
    }
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.order < 5 {
            return Err(format!("order must be at least 5, got {}", self.order));
        }
        if self.points < 1 {
            return Err("points must be at least 1".into());
        }
        if !(self.tol > 0.0) {
            return Err(format!("tol must be positive, got {}", self.tol));
        }
        Ok(())
    }

    pub fn engines(&self) -> Vec<Engine> {
        match self.engine {
            EngineArg::Exact => vec![Engine::Exact],
            EngineArg::Numeric => vec![Engine::Numeric],
            EngineArg::Both => vec![Engine::Exact, Engine::Numeric],
        }
    }

    pub fn settings(&self) -> Settings {
        Settings { order: self.order, points: self.points, tol: self.tol, seed: self.seed, timings: self.timings }
    }

    fn engine_name(&self) -> &'static str {
        match self.engine {
            EngineArg::Exact => "exact",
            EngineArg::Numeric => "numeric",
            EngineArg::Both => "both",
        }
    }

    /// Runs the selected records and assembles a report.
    pub fn execute(&self, records: &[IdentityRecord]) -> Report {
        let outcomes = verify_all(records, &self.engines(), &self.settings(), self.jobs);
        Report::new(self.engine_name(), &self.settings(), records.len(), outcomes)
    }
}

impl RunArgs {
    fn config(&self, ids: Vec<String>) -> RunConfig {
        RunConfig {
            ids,
            order: self.order,
            engine: self.engine,
            points: self.points,
            tol: self.tol,
            seed: self.seed,
            jobs: self.jobs.unwrap_or_else(default_jobs),
            out_path: self.out.clone(),
            format: self.format,
            timings: self.timings,
        }
    }
}

/// Why a command stopped early.
enum Stop {
    Usage(String),
}

fn has_tag(r: &IdentityRecord, tag: &str) -> bool {
    match tag {
        "qomega" => r.field == Field::QOmega,
        "numeric-only" => r.engines == Engines::Numeric,
        "noted" => !r.notes.is_empty(),
        "formal" => r.formal_var().is_some(),
        _ => false,
    }
}

fn filter(cat: &[IdentityRecord], family: Option<&str>, tag: Option<&str>) -> Result<Vec<IdentityRecord>, Stop> {
    if let Some(f) = family {
        if !families().iter().any(|x| x == f) && !cat.iter().any(|r| r.family == f) {
            return Err(Stop::Usage(format!("unknown family `{f}`; known: {}", families().join(", "))));
        }
    }
    if let Some(t) = tag {
        if !TAGS.contains(&t) {
            return Err(Stop::Usage(format!("unknown tag `{t}`; known: {}", TAGS.join(", "))));
        }
    }
    Ok(cat
        .iter()
        .filter(|r| family.is_none_or(|f| r.family == f))
        .filter(|r| tag.is_none_or(|t| has_tag(r, t)))
        .cloned()
        .collect())
}

fn select(cat: &[IdentityRecord], ids: &[String]) -> Result<Vec<IdentityRecord>, Stop> {
    ids.iter()
        .map(|id| cat.iter().find(|r| &r.id == id).cloned().ok_or_else(|| Stop::Usage(format!("unknown identity id `{id}`"))))
        .collect()
}

fn engines_label(e: Engines) -> &'static str {
    match e {
        Engines::Exact => "exact",
        Engines::Numeric => "numeric",
        Engines::Both => "both",
    }
}

fn list_line(r: &IdentityRecord) -> String {
    let field = match r.field {
        Field::Q => "Q",
        Field::QOmega => "Q(omega)",
    };
    let notes = if r.notes.is_empty() { String::new() } else { format!(" notes={}", r.notes.len()) };
    format!("{:<18} {:<7} engines={:<7} field={:<8} forms={}{}", r.id, r.family, engines_label(r.engines), field, r.expr.len(), notes)
}

fn show(r: &IdentityRecord) -> String {
    let mut s = format!("{} ({})\n{}\n", r.id, r.family, r.provenance.section);
    for sub in &r.expr {
        s.push_str(&format!("  [{}] {} = 0\n", sub.label, sub.expr));
    }
    let vars: Vec<String> = r.free_vars.iter().map(|v| format!("{} ({:?})", v.name, v.role).to_lowercase()).collect();
    s.push_str(&format!("variables: {}\n", if vars.is_empty() { "none".into() } else { vars.join(", ") }));
    for (i, e) in r.spec_suite.iter().enumerate() {
        let b: Vec<String> = e.bindings.iter().map(|(k, m)| format!("{k} = {m}")).collect();
        let deg = e.degenerate.as_ref().map_or(String::new(), |d| format!(" (degenerate: {d})"));
        s.push_str(&format!("suite {i}: {}{deg}\n", if b.is_empty() { "formal only".into() } else { b.join(", ") }));
    }
    s.push_str(&format!("field {:?}, engines {}, scale {}\n", r.field, engines_label(r.engines), r.scale));
    s.push_str(&format!("formula: {}\n", r.provenance.quote));
    for n in &r.notes {
        s.push_str(&format!("note: {n}\n"));
    }
    s
}

fn render(report: &Report, format: Format) -> Result<String, Stop> {
    match format {
        Format::Json => report.to_json().map_err(|e| Stop::Usage(e.to_string())),
        Format::Markdown => Ok(report.to_markdown()),
    }
}

fn emit(text: &str, path: Option<&PathBuf>, out: &mut dyn Write) -> Result<(), Stop> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Stop::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            let _ = out.write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn summary(report: &Report, out: &mut dyn Write) {
    for o in &report.outcomes {
        let res = o.max_residual.map_or("-".into(), |r| format!("{r:.2e}"));
        let _ = writeln!(out, "{:<18} {:<7} {:<18} residual={}", o.id, o.engine.to_string(), o.status.to_string(), res);
        if o.failed() {
            for d in &o.details {
                let _ = writeln!(out, "    {d}");
            }
        }
    }
    let fails = report.outcomes.iter().filter(|o| o.failed()).count();
    let _ = writeln!(out, "{} outcomes, {} failed", report.outcomes.len(), fails);
}

fn load(path: Option<&PathBuf>) -> Result<Vec<IdentityRecord>, Stop> {
    match path {
        None => Ok(build_catalog()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Stop::Usage(format!("cannot read {}: {e}", p.display())))?;
            parse_catalog(&text).map_err(|e| Stop::Usage(format!("malformed catalog {}: {e}", p.display())))
        }
    }
}

fn run_verify(cfg: &RunConfig, records: &[IdentityRecord], out: &mut dyn Write) -> Result<i32, Stop> {
    cfg.validate().map_err(Stop::Usage)?;
    let report = cfg.execute(records);
    summary(&report, out);
    if let Some(p) = &cfg.out_path {
        emit(&render(&report, cfg.format)?, Some(p), out)?;
    }
    Ok(if report.any_failed() { EXIT_FAIL } else { EXIT_OK })
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, Stop> {
    let cat = load(cli.catalog.as_ref())?;
    match cli.cmd {
        Cmd::List { family, tag } => {
            for r in filter(&cat, family.as_deref(), tag.as_deref())? {
                let _ = writeln!(out, "{}", list_line(&r));
            }
            if family.is_none() && tag.is_none() {
                let _ = writeln!(out, "{SKIPPED_UNDEFINED}");
            }
            Ok(EXIT_OK)
        }
        Cmd::Show { id } => {
            let r = select(&cat, &[id])?;
            let _ = write!(out, "{}", show(&r[0]));
            Ok(EXIT_OK)
        }
        Cmd::Verify { ids, run } => {
            let records = select(&cat, &ids)?;
            run_verify(&run.config(ids), &records, out)
        }
        Cmd::VerifyAll { run } => run_verify(&run.config(Vec::new()), &cat, out),
        Cmd::Report { ids, family, tag, from, run } => {
            let cfg = run.config(ids.clone());
            let report = match from {
                Some(p) => {
                    let text = std::fs::read_to_string(&p).map_err(|e| Stop::Usage(format!("cannot read {}: {e}", p.display())))?;
                    Report::from_json(&text).map_err(|e| Stop::Usage(format!("malformed report: {e}")))?
                }
                None => {
                    cfg.validate().map_err(Stop::Usage)?;
                    let mut records = filter(&cat, family.as_deref(), tag.as_deref())?;
                    if !ids.is_empty() {
                        let chosen = select(&cat, &ids)?;
                        records.retain(|r| chosen.iter().any(|c| c.id == r.id));
                    }
                    cfg.execute(&records)
                }
            };
            emit(&render(&report, cfg.format)?, cfg.out_path.as_ref(), out)?;
            Ok(if report.any_failed() { EXIT_FAIL } else { EXIT_OK })
        }
        Cmd::Catalog { out: path } => {
            let text = to_json(&cat).map_err(|e| Stop::Usage(e.to_string()))?;
            emit(&text, path.as_ref(), out)?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(Stop::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("qsplit").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn defaults_live_in_one_place() {
        let c = RunConfig::default();
        assert_eq!((c.order, c.points, c.tol, c.seed), (40, 5, 1e-8, 0));
        assert!(c.validate().is_ok());
        assert!(RunConfig { order: 4, ..c.clone() }.validate().is_err());
        assert!(RunConfig { tol: 0.0, ..c }.validate().is_err());
    }

    #[test]
    fn unknown_id_is_a_usage_error() {
        let (code, _, err) = call(&["verify", "BOGUS-ID"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("unknown identity id"));
    }

    #[test]
    fn list_family_and_notice() {
        let (code, out, _) = call(&["list", "--family", "N3"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 11);
        let (_, out, _) = call(&["list"]);
        assert!(out.contains("SKIPPED-UNDEFINED"));
        let (code, _, _) = call(&["list", "--family", "NOPE"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn bad_flags_are_usage_errors() {
        assert_eq!(call(&["verify-all", "--order", "3"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify-all", "--engine", "magic"]).0, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    }
}
