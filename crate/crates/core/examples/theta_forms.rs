//! The theta function Θ(x; q) from its product and from its bilateral sum.
//!
//! ```text
//! cargo run --example theta_forms
//! ```

use qsplit::exact::Unit;
use qsplit::qring::Monomial;
use qsplit::special::{theta_abbrev, theta_prod, theta_sum, ThetaAbbrev, ThetaSpec};

fn main() {
    let n = 60;
    let specs = [
        ("Θ(z; q)", ThetaSpec::new(Monomial::z(), Monomial::q(1))),
        ("Θ(qz²; q³)", ThetaSpec::new(Monomial::new(Unit::ONE, 1, 2), Monomial::q(3))),
        ("Θ(-z; -q)", ThetaSpec::new(Monomial::new(Unit::MINUS_ONE, 0, 1), Monomial::signed(true, 1, 0))),
        ("Θ(q; q^5)", ThetaSpec::new(Monomial::q(1), Monomial::q(5))),
    ];
    for (name, s) in specs {
        let prod = theta_prod(&s, n).unwrap();
        let sum = theta_sum(&s, n).unwrap();
        let agree = (&prod - &sum).is_zero_through_order();
        println!("{name:<12} product = sum through q^{n}: {agree}");
    }

    // Shorthand families, e.g. the Rogers-Ramanujan products.
    let g = theta_abbrev(ThetaAbbrev::Plain, 1, 5, 15).unwrap();
    let h = theta_abbrev(ThetaAbbrev::Bar, 1, 2, 15).unwrap();
    println!("Θ(q; q^5)  = {g}");
    println!("Θ(-q; q^2) = {h}");
}
