//! Laurent polynomials and rational functions in the formal variable `z`.

mod laurent;
mod ratfunc;

pub use laurent::{lp_mul, LaurentPoly};
pub use ratfunc::{rf_arith, rf_eval, rf_normalize, Binomial, RatFunc, RfOp, NEAR_POLE_REL};
