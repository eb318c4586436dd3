//! Exact verification: expand LHS − RHS as a q-series and look for a nonzero
//! coefficient.
//!
//! ```text
//! cargo run --release --example exact_verify -- N3-1 TENTH-1
//! ```

use std::collections::BTreeMap;

use qsplit::catalog::{build_catalog, Env};
use qsplit::qring::Monomial;
use qsplit::verifier::{expand_expr, verify_exact};

fn main() {
    let mut ids: Vec<String> = std::env::args().skip(1).collect();
    if ids.is_empty() {
        ids = vec!["JLAW-FLIP".into(), "SIXTH-APPELL-PSI".into(), "N2-1".into()];
    }
    let cat = build_catalog();
    for id in &ids {
        let Some(r) = cat.iter().find(|r| &r.id == id) else {
            eprintln!("unknown id {id}");
            continue;
        };
        let o = verify_exact(r, 30);
        println!("{id}: {} ({} equations, {} suite entries)", o.status, r.expr.len(), r.spec_suite.len());
        for d in &o.details {
            println!("    {d}");
        }
    }

    // The same machinery, by hand: one side of the flip law on its own.
    let r = cat.iter().find(|r| r.id == "JLAW-FLIP").unwrap();
    let mut bindings = BTreeMap::new();
    bindings.insert(r.formal_var().unwrap().to_string(), Monomial::z());
    let env = Env::new(bindings, r.scale);
    let residual = expand_expr(&r.expr[0].expr, &env, 10).unwrap();
    println!("\nJLAW-FLIP residual through q^10: {residual}");
}
