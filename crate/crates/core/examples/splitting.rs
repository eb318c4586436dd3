//! D_n, a combination of Appell functions, against its theta-quotient closed form.
//!
//! ```text
//! cargo run --example splitting -- 3
//! ```

use qsplit::exact::Unit;
use qsplit::qring::Monomial;
use qsplit::special::{d_n, dn_terms, dn_closed_form};

fn main() {
    let n: i64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    let order = 25;
    let x = Monomial::new(Unit::ONE, 1, 2);
    let z = Monomial::z().inv();
    let zp = Monomial::new(Unit::ONE, 1, 1);
    let base = Monomial::q(1);

    println!("D_{n}(x, z, z') with x = {x}, z = {z}, z' = {zp}:");
    for (c, m) in dn_terms(n, x, z, zp, base).unwrap() {
        println!("  {c} · m({}, {}; {})", m.x, m.z, m.base);
    }

    let lhs = d_n(n, x, z, zp, base, order).unwrap();
    let rhs = dn_closed_form(n, x, z, zp, base, order).unwrap();
    println!("leading coefficient: {}", lhs.coeff(0));
    match (&lhs - &rhs).first_nonzero() {
        None => println!("Appell side = theta side through q^{order}"),
        Some((e, c)) => println!("mismatch at q^{e}: {c}"),
    }

    // Θ(xz; q) = 0 is a degenerate choice: the closed form has a pole there.
    let bad = dn_closed_form(n, z.inv(), z, zp, base, order);
    println!("x = 1/z: {:?}", bad.err());
}
