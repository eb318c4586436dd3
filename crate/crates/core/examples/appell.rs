//! Appell functions and the mock theta functions they represent.
//!
//! ```text
//! cargo run --example appell
//! ```

use qsplit::exact::Unit;
use qsplit::qring::Monomial;
use qsplit::special::{appell_m, eulerian, AppellSpec, EulerianName};

fn main() {
    let n = 20;
    let q = Monomial::q;
    let minus_one = Monomial::new(Unit::MINUS_ONE, 0, 0);

    // Sixth order: φ(q) as an Eulerian series and as 2·m(q, −1; q³).
    let phi = eulerian(EulerianName::Phi6, 0, q(1), n).unwrap();
    let m = appell_m(&AppellSpec::new(q(1), minus_one, q(3)), n).unwrap();
    let twice = &m + &m;
    println!("phi6      = {}", phi.truncate(10));
    println!("2m(q,-1)  = {}", twice.truncate(10));
    println!("equal through q^{n}: {}", (&phi - &twice).is_zero_through_order());

    // ψ(q) = m(1, −q; q³)
    let psi = eulerian(EulerianName::Psi6, 0, q(1), n).unwrap();
    let m2 = appell_m(&AppellSpec::new(Monomial::ONE, q(1).neg(), q(3)), n).unwrap();
    println!("psi6 = m(1,-q;q^3) through q^{n}: {}", (&psi - &m2).is_zero_through_order());

    // Coefficients of a few more Eulerian series.
    for name in [EulerianName::F0, EulerianName::Phi10, EulerianName::Psi10] {
        let s = eulerian(name, 0, q(1), 12).unwrap();
        println!("{name:?}: {s}");
    }

    // Formal z: m(x, z; q) is a series in q with rational-function coefficients.
    let formal = appell_m(&AppellSpec::new(Monomial::new(Unit::ONE, 1, 1), Monomial::z(), q(1)), 3).unwrap();
    println!("m(qz, z; q) = {}", formal.truncate(1));
}
