//! Exact arithmetic in Q(ω), ω a primitive cube root of unity.
//!
//! ```text
//! cargo run --example cyclotomic
//! ```

use qsplit::exact::{CycloRational, Unit};

fn main() {
    let w = CycloRational::omega();
    let w2 = CycloRational::omega_sq();
    let one = CycloRational::one();

    // 1 + ω + ω² = 0
    println!("1 + ω + ω² = {}", &(&one + &w) + &w2);
    println!("ω · ω² = {}", &w * &w2);
    println!("conj(ω) = {}", w.conj());

    let x = CycloRational::from_frac(2, 3) + &CycloRational::from_int(5) * &w;
    let inv = x.inv().expect("nonzero");
    println!("x = {x}, N(x) = {}, 1/x = {inv}", x.norm());
    println!("x · (1/x) = {}", &x * &inv);

    // The combinations that reappear in the tenth-order identities are rational
    // after pairing conjugates.
    let a = CycloRational::from_frac(-1, 3) + &CycloRational::from_frac(-2, 3) * &w;
    println!("a = {a}, a + conj(a) = {}, rational: {}", &a + &a.conj(), (&a + &a.conj()).is_rational());

    // Twelfth roots of unity: even indices live in Q(ω); odd ones need i.
    for k in [0, 2, 3, 4, 6, 8] {
        let u = Unit::new(k);
        match u.to_cyclo() {
            Some(c) => println!("ζ^{k} = {c}"),
            None => println!("ζ^{k} is outside Q(ω) (numeric value {:.4})", u.to_complex()),
        }
    }
}
