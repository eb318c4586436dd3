//! Theta functions, Appell functions and the mock theta series built on them.

mod appell;
mod dn;
mod eulerian;
mod theta;

pub use appell::{appell_m, appell_numerator, AppellSpec};
pub use dn::{d_n, dn_terms, dn_closed_form, dn_closed_terms};
pub use eulerian::{eulerian, universal_g, EulerianName};
pub use theta::{check_base, theta_abbrev, theta_prod, theta_sum, ThetaAbbrev, ThetaSpec};
