use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qring::Monomial;

use super::expr::Expr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Field {
    Q,
    #[serde(rename = "Qomega")]
    QOmega,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Exact,
    Numeric,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Exact => "exact",
            Engine::Numeric => "numeric",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engines {
    Exact,
    Numeric,
    Both,
}

impl Engines {
    pub fn includes(self, e: Engine) -> bool {
        matches!((self, e), (Engines::Both, _) | (Engines::Exact, Engine::Exact) | (Engines::Numeric, Engine::Numeric))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    /// Kept as the formal variable `z` of the coefficient field.
    Formal,
    /// Replaced by a monomial from the specialization suite.
    Specialize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeVar {
    pub name: String,
    pub role: Role,
}

/// One assignment of monomials in `q` and `z` to the specialized variables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteEntry {
    #[serde(default)]
    pub bindings: BTreeMap<String, Monomial>,
    /// Set when the entry is known to be degenerate and is skipped.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degenerate: Option<String>,
}

/// One equation `expr = 0` belonging to a record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubIdentity {
    pub label: String,
    pub expr: Expr,
    /// Overrides the record's engine set for this equation.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub engines: Option<Engines>,
    /// Subexpressions whose expansions must have rational coefficients.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rational: Vec<Expr>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub section: String,
    /// The equation as plain formula text.
    pub quote: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct IdentityRecord {
    pub id: String,
    pub family: String,
    pub expr: Vec<SubIdentity>,
    pub free_vars: Vec<FreeVar>,
    pub spec_suite: Vec<SuiteEntry>,
    pub field: Field,
    pub engines: Engines,
    pub scale: i64,
    pub provenance: Provenance,
    #[serde(default)]
    pub notes: Vec<String>,
}

impl IdentityRecord {
    pub fn formal_var(&self) -> Option<&str> {
        self.free_vars.iter().find(|v| v.role == Role::Formal).map(|v| v.name.as_str())
    }

    pub fn sub_engines(&self, sub: &SubIdentity) -> Engines {
        sub.engines.unwrap_or(self.engines)
    }

    /// Checks the structural invariants every record must satisfy.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Parse(format!("record {}: {m}", self.id)));
        if self.expr.is_empty() {
            return bad("no equations".into());
        }
        if self.scale < 1 {
            return bad(format!("scale {} must be positive", self.scale));
        }
        let formal: Vec<_> = self.free_vars.iter().filter(|v| v.role == Role::Formal).collect();
        if formal.len() > 1 {
            return bad("more than one formal variable".into());
        }
        let declared: std::collections::BTreeSet<_> = self.free_vars.iter().map(|v| v.name.clone()).collect();
        for sub in &self.expr {
            for name in sub.expr.free_vars() {
                if !declared.contains(&name) {
                    return bad(format!("undeclared variable `{name}` in {}", sub.label));
                }
            }
        }
        if self.spec_suite.is_empty() {
            return bad("empty specialization suite".into());
        }
        for (i, entry) in self.spec_suite.iter().enumerate() {
            for v in &self.free_vars {
                let bound = entry.bindings.contains_key(&v.name);
                if v.role == Role::Specialize && !bound {
                    return bad(format!("suite entry {i} leaves `{}` unbound", v.name));
                }
            }
            for name in entry.bindings.keys() {
                if !declared.contains(name) {
                    return bad(format!("suite entry {i} binds unknown `{name}`"));
                }
            }
        }
        Ok(())
    }
}
