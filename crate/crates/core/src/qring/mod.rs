//! Truncated Laurent series in `q` and their product constructors.

mod monomial;
mod product;
mod series;

pub use monomial::Monomial;
pub use product::{geom_factor_inverse, poch_fin, poch_inf, ProductForm};
pub use series::{series_add, series_invert, series_mul, Series};
