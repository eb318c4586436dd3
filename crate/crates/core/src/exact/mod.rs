//! Exact scalar arithmetic: rationals, the cyclotomic field Q(ω), and roots of unity.

mod cyclo;
mod rational;
mod unit;

pub use cyclo::{cyclo_inv, CycloRational};
pub use rational::BigRational;
pub use unit::Unit;

/// `cyclo_mul`: exact product in the basis {1, ω}.
pub fn cyclo_mul(x: &CycloRational, y: &CycloRational) -> CycloRational {
    x * y
}

/// True iff the ω-component is zero.
pub fn is_rational(x: &CycloRational) -> bool {
    x.is_rational()
}
