pub mod catalog;
pub mod cli;
pub mod error;
pub mod exact;
pub mod qring;
pub mod special;
pub mod verifier;
pub mod zfield;

pub use error::{Error, Result};
