//! Browse the built-in identity catalog and write it out as JSON.
//!
//! ```text
//! cargo run --example catalog_dump -- catalog.json
//! ```

use std::collections::BTreeMap;

use qsplit::catalog::{build_catalog, parse_catalog, to_json, Field, SKIPPED_UNDEFINED};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cat = build_catalog();
    let mut by_family: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for r in &cat {
        by_family.entry(&r.family).or_default().push(&r.id);
    }
    for (family, ids) in &by_family {
        println!("{family:<7} {}", ids.join(" "));
    }
    let equations: usize = cat.iter().map(|r| r.expr.len()).sum();
    let qomega = cat.iter().filter(|r| r.field == Field::QOmega).count();
    println!("{} records, {equations} equations, {qomega} over Q(ω)", cat.len());
    println!("{SKIPPED_UNDEFINED}");

    let r = cat.iter().find(|r| r.id == "JLAW-FLIP").unwrap();
    println!("\n{}: {}", r.id, r.expr[0].expr);

    let json = to_json(&cat)?;
    assert_eq!(parse_catalog(&json)?, cat);
    match std::env::args().nth(1) {
        Some(path) => {
            std::fs::write(&path, &json)?;
            println!("wrote {} bytes to {path}", json.len());
        }
        None => println!("{} bytes of JSON (pass a path to save it)", json.len()),
    }
    Ok(())
}
