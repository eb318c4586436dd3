//! Truncated q-Pochhammer products.
//!
//! ```text
//! cargo run --example pochhammer
//! ```

use qsplit::exact::Unit;
use qsplit::qring::{poch_fin, poch_inf, Monomial};

fn main() {
    let q = Monomial::q(1);

    // Euler: (q; q)_∞ = Σ (−1)^k q^{k(3k−1)/2}
    let euler = poch_inf(q, q, 40).unwrap();
    println!("(q;q)_inf = {euler}");
    let support: Vec<i64> = euler.terms().map(|(e, _)| e).collect();
    println!("nonzero exponents: {support:?}");

    // (−q; q)_∞ counts partitions into distinct parts.
    let distinct = poch_inf(Monomial::signed(true, 1, 0), q, 15).unwrap();
    println!("(-q;q)_inf = {distinct}");

    // (z; q)_3 is a polynomial in z with coefficients in Z[q].
    let z = Monomial::new(Unit::ONE, 0, 1);
    println!("(z;q)_3 = {}", poch_fin(z, q, 3, 6).unwrap());

    // Base q²: (q; q²)_∞
    println!("(q;q^2)_inf = {}", poch_inf(q, Monomial::q(2), 12).unwrap());
}
