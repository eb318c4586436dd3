//! Laurent polynomials and rational functions in the formal variable z.
//!
//! ```text
//! cargo run --example rational_functions
//! ```

use num_complex::Complex64;
use qsplit::exact::{CycloRational, Unit};
use qsplit::zfield::{LaurentPoly, RatFunc};

fn main() {
    // 1 − z and z⁻¹ + 2 + z
    let a = LaurentPoly::from_ints(0, &[1, -1]);
    let b = LaurentPoly::from_ints(-1, &[1, 2, 1]);
    println!("a = {a}\nb = {b}\na·b = {}", &a * &b);

    // 1/(1 − z) + z/(1 − z) reduces to (1 + z)/(1 − z).
    let g = RatFunc::inv_one_minus(Unit::ONE, 1).unwrap();
    let sum = &g + &g.mul_monomial(&CycloRational::one(), 1);
    println!("1/(1-z) + z/(1-z) = {sum}");
    println!("polynomial? {}", sum.is_polynomial());

    // (1 − z²)/(1 − z) cancels to 1 + z.
    let num = RatFunc::from_poly(LaurentPoly::from_ints(0, &[1, 0, -1]));
    let den = RatFunc::from_poly(a.clone());
    let q = num.div(&den).unwrap();
    println!("(1-z^2)/(1-z) = {q}, polynomial? {}", q.is_polynomial());

    let z = Complex64::new(0.3, 0.4);
    println!("value at z = {z}: {:.6}", sum.eval(z).unwrap());
    println!("division by zero: {:?}", g.div(&RatFunc::zero()).err());
}
