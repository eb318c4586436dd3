use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{CycloRational, Unit};
use crate::qring::Monomial;
use crate::special::EulerianName;

/// `unit · q^q · ∏ var^e` over named free variables.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct SymMono {
    pub unit: Unit,
    pub q: i64,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub vars: BTreeMap<String, i64>,
}

/// How free variables are replaced before exact expansion.
#[derive(Clone, Debug, Default)]
pub struct Env {
    pub bindings: BTreeMap<String, Monomial>,
    /// Global substitution `q ↦ q^scale` applied to explicit q-powers.
    pub scale: i64,
}

impl Env {
    pub fn new(bindings: BTreeMap<String, Monomial>, scale: i64) -> Self {
        Self { bindings, scale }
    }
}

impl SymMono {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn q(a: i64) -> Self {
        Self { q: a, ..Self::default() }
    }

    pub fn var(name: &str) -> Self {
        Self { vars: [(name.to_string(), 1)].into(), ..Self::default() }
    }

    pub fn unit(u: Unit) -> Self {
        Self { unit: u, ..Self::default() }
    }

    pub fn mul(&self, other: &SymMono) -> SymMono {
        let mut vars = self.vars.clone();
        for (k, e) in &other.vars {
            let v = vars.entry(k.clone()).or_insert(0);
            *v += e;
            if *v == 0 {
                vars.remove(k);
            }
        }
        SymMono { unit: self.unit * other.unit, q: self.q + other.q, vars }
    }

    pub fn pow(&self, k: i64) -> SymMono {
        if k == 0 {
            return SymMono::one();
        }
        SymMono {
            unit: self.unit.pow(k),
            q: self.q * k,
            vars: self.vars.iter().map(|(n, e)| (n.clone(), e * k)).collect(),
        }
    }

    pub fn inv(&self) -> SymMono {
        self.pow(-1)
    }

    pub fn neg(&self) -> SymMono {
        SymMono { unit: self.unit.neg(), ..self.clone() }
    }

    pub fn is_one(&self) -> bool {
        self.unit.is_one() && self.q == 0 && self.vars.is_empty()
    }

    pub fn collect_vars(&self, out: &mut BTreeSet<String>) {
        out.extend(self.vars.keys().cloned());
    }

    /// Substitutes bound monomials for the variables.
    pub fn bind(&self, env: &Env) -> Result<Monomial> {
        let mut m = Monomial::new(self.unit, self.q * env.scale.max(1), 0);
        for (name, e) in &self.vars {
            let b = env.bindings.get(name).ok_or_else(|| Error::Unbound(name.clone()))?;
            m = m * b.pow(*e);
        }
        Ok(m)
    }

    /// Numeric value at a point.
    pub fn eval(&self, q: Complex64, vals: &BTreeMap<String, Complex64>) -> Result<Complex64> {
        let mut v = self.unit.to_complex() * q.powi(self.q as i32);
        for (name, e) in &self.vars {
            let x = vals.get(name).ok_or_else(|| Error::Unbound(name.clone()))?;
            v *= x.powi(*e as i32);
        }
        Ok(v)
    }
}

impl fmt::Display for SymMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.q {
            0 => {}
            1 => parts.push("q".into()),
            a => parts.push(format!("q^{a}")),
        }
        for (n, e) in &self.vars {
            match e {
                1 => parts.push(n.clone()),
                e => parts.push(format!("{n}^{e}")),
            }
        }
        let body = parts.join("*");
        match (self.unit, body.is_empty()) {
            (u, true) => write!(f, "{u}"),
            (u, false) if u.is_one() => write!(f, "{body}"),
            (u, false) if u == Unit::MINUS_ONE => write!(f, "-{body}"),
            (u, false) => write!(f, "{u}*{body}"),
        }
    }
}

impl fmt::Debug for SymMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The special functions an expression can be built from.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Primitive {
    Theta { arg: SymMono, base: SymMono },
    PochInf { arg: SymMono, base: SymMono },
    AppellM { x: SymMono, z: SymMono, base: SymMono },
    Dn { n: i64, x: SymMono, z: SymMono, zp: SymMono, base: SymMono },
    DnClosed { n: i64, x: SymMono, z: SymMono, zp: SymMono, base: SymMono },
    Eulerian { name: EulerianName, twist: i64, arg: SymMono },
    UniversalG { x: SymMono, base: SymMono },
}

impl Primitive {
    /// Theta functions and Pochhammer products expand as binomial products.
    pub fn is_product(&self) -> bool {
        matches!(self, Primitive::Theta { .. } | Primitive::PochInf { .. })
    }

    pub fn monomials(&self) -> Vec<&SymMono> {
        match self {
            Primitive::Theta { arg, base } | Primitive::PochInf { arg, base } => vec![arg, base],
            Primitive::AppellM { x, z, base } => vec![x, z, base],
            Primitive::Dn { x, z, zp, base, .. } | Primitive::DnClosed { x, z, zp, base, .. } => vec![x, z, zp, base],
            Primitive::Eulerian { arg, .. } => vec![arg],
            Primitive::UniversalG { x, base } => vec![x, base],
        }
    }

    /// Whether evaluation needs a unit outside Q(ω).
    pub fn needs_extension(&self) -> bool {
        self.monomials().iter().any(|m| m.unit.index() % 2 == 1)
    }
}

impl fmt::Display for Primitive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Primitive::Theta { arg, base } => write!(f, "Θ({arg}; {base})"),
            Primitive::PochInf { arg, base } => write!(f, "({arg}; {base})_∞"),
            Primitive::AppellM { x, z, base } => write!(f, "m({x}, {z}; {base})"),
            Primitive::Dn { n, x, z, zp, base } => write!(f, "D{n}({x}, {z}, {zp}; {base})"),
            Primitive::DnClosed { n, x, z, zp, base } => write!(f, "R{n}({x}, {z}, {zp}; {base})"),
            Primitive::Eulerian { name, twist, arg } => {
                let name = serde_json::to_value(name).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default();
                match twist.rem_euclid(3) {
                    0 => write!(f, "{name}({arg})"),
                    1 => write!(f, "{name}(ω·{arg})"),
                    _ => write!(f, "{name}(ω²·{arg})"),
                }
            }
            Primitive::UniversalG { x, base } => write!(f, "g({x}; {base})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub prim: Primitive,
    pub exp: i64,
}

/// `scalar · mono · ∏ prim^exp`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub scalar: CycloRational,
    pub mono: SymMono,
    #[serde(default)]
    pub factors: Vec<Factor>,
}

impl Term {
    pub fn scalar(c: CycloRational) -> Self {
        Self { scalar: c, mono: SymMono::one(), factors: Vec::new() }
    }

    pub fn collect_vars(&self, out: &mut BTreeSet<String>) {
        self.mono.collect_vars(out);
        for f in &self.factors {
            for m in f.prim.monomials() {
                m.collect_vars(out);
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.scalar.is_one() || (self.mono.is_one() && self.factors.is_empty()) {
            parts.push(format!("({})", self.scalar));
        }
        if !self.mono.is_one() {
            parts.push(self.mono.to_string());
        }
        for fac in &self.factors {
            if fac.exp == 1 {
                parts.push(fac.prim.to_string());
            } else {
                parts.push(format!("{}^{}", fac.prim, fac.exp));
            }
        }
        write!(f, "{}", parts.join("·"))
    }
}

/// A finite sum of terms. Identities are stored as `lhs − rhs`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expr {
    pub terms: Vec<Term>,
}

impl Expr {
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for t in &self.terms {
            t.collect_vars(&mut out);
        }
        out
    }

    pub fn primitives(&self) -> impl Iterator<Item = &Primitive> {
        self.terms.iter().flat_map(|t| t.factors.iter().map(|f| &f.prim))
    }

    pub fn is_rational(&self) -> bool {
        self.terms.iter().all(|t| t.scalar.is_rational() && t.mono.unit.index() % 6 == 0)
            && self.primitives().all(|p| match p {
                Primitive::Eulerian { twist, .. } => twist.rem_euclid(3) == 0,
                _ => true,
            })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(Term::to_string).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
