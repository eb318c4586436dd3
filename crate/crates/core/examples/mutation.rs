//! Corrupt records on purpose and watch both engines reject them.
//!
//! ```text
//! cargo run --release --example mutation
//! ```

use qsplit::catalog::build_catalog;
use qsplit::verifier::{mutate, random_mutations, verify_exact, verify_numeric, Mutation};

fn main() {
    let cat = build_catalog();
    for (r, m) in random_mutations(&cat, 6, 42) {
        let e = verify_exact(&r, 20);
        let n = verify_numeric(&r, 3, 1e-8, 0);
        println!("{:<24} {:<40} exact {:<5} numeric {}", r.id, format!("{m:?}"), e.status, n.status);
    }

    let flip = cat.iter().find(|r| r.id == "JLAW-FLIP").unwrap();
    let shifted = mutate(flip, Mutation::ExponentShift { term: 1, delta: 1 });
    let o = verify_exact(&shifted, 20);
    println!("\n{} → {}", shifted.expr[0].expr, o.status);
    for d in o.details.iter().take(2) {
        println!("    {d}");
    }
}
