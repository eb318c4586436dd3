//! Build a report, save it as JSON and render it as Markdown.
//!
//! ```text
//! cargo run --example report -- report.json
//! ```

use qsplit::catalog::build_catalog;
use qsplit::cli::{EngineArg, RunConfig};
use qsplit::verifier::Report;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let records: Vec<_> = build_catalog().into_iter().filter(|r| r.family == "JLAW").collect();
    let cfg = RunConfig { order: 20, engine: EngineArg::Both, jobs: 2, ..RunConfig::default() };
    cfg.validate()?;
    let report = cfg.execute(&records);

    let json = report.to_json()?;
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, &json)?;
        println!("saved {path}");
    }
    let back = Report::from_json(&json)?;
    assert_eq!(back.to_json()?, json);
    print!("{}", back.to_markdown());
    Ok(())
}
