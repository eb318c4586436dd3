//! Numeric verification at random complex points, independent of the exact
//! series code.
//!
//! ```text
//! cargo run --example numeric_verify -- 7
//! ```

use num_complex::Complex64;
use qsplit::catalog::{build_catalog, Engine};
use qsplit::verifier::{num, verify_all, Settings, Status};

fn main() {
    let seed: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let cat = build_catalog();
    let settings = Settings { seed, ..Settings::default() };
    let outcomes = verify_all(&cat, &[Engine::Numeric], &settings, 4);
    let worst = outcomes.iter().max_by(|a, b| a.max_residual.partial_cmp(&b.max_residual).unwrap()).unwrap();
    let passed = outcomes.iter().filter(|o| o.status == Status::Pass).count();
    println!("seed {seed}: {passed}/{} pass, worst {} at {:.2e}", outcomes.len(), worst.id, worst.max_residual.unwrap());

    // Direct evaluation of the building blocks.
    let q = Complex64::from_polar(0.3, 0.7);
    let x = Complex64::new(0.9, 0.4);
    let t = num::theta(x, q).unwrap();
    let t_flip = num::theta(q / x, q).unwrap();
    println!("Θ(x) = {t:.12}\nΘ(q/x) = {t_flip:.12}");
    let z = Complex64::new(-0.2, 1.1);
    let zp = Complex64::new(1.05, -0.3);
    let a = num::dn(3, x, z, zp, q).unwrap();
    let b = num::dn_closed(3, x, z, zp, q).unwrap();
    println!("D_3 from Appell sums {a:.12}\nD_3 from thetas      {b:.12}");
}
