//! The identity catalog: expressions, records and their JSON form.

pub mod dsl;
pub mod expr;
pub mod record;
mod records;
mod serialize;

pub use expr::{Env, Expr, Factor, Primitive, SymMono, Term};
pub use record::{Engine, Engines, Field, FreeVar, IdentityRecord, Provenance, Role, SubIdentity, SuiteEntry};
pub use records::{build_catalog, families, id_key, SKIPPED_UNDEFINED};
pub use serialize::{parse_catalog, to_json};
