//! A small builder language for writing identities as Rust expressions.
//!
//! ```
//! use qsplit::catalog::dsl::*;
//! // Θ(x; q) = Θ(q/x; q)
//! let e = eq(th(v("x"), q(1)), th(q(1) * v("x").inv(), q(1)));
//! assert_eq!(e.terms.len(), 2);
//! ```

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::exact::{cyclo_inv, CycloRational, Unit};
use crate::special::EulerianName;

use super::expr::{Expr, Factor, Primitive, SymMono, Term};

pub use crate::special::EulerianName as Eul;

pub fn q(a: i64) -> SymMono {
    SymMono::q(a)
}

pub fn v(name: &str) -> SymMono {
    SymMono::var(name)
}

/// The unit `exp(2πi·k/12)` as a monomial.
pub fn root(k: i64) -> SymMono {
    SymMono::unit(Unit::new(k))
}

impl Mul for SymMono {
    type Output = SymMono;
    fn mul(self, rhs: SymMono) -> SymMono {
        SymMono::mul(&self, &rhs)
    }
}

impl Div for SymMono {
    type Output = SymMono;
    fn div(self, rhs: SymMono) -> SymMono {
        SymMono::mul(&self, &rhs.inv())
    }
}

impl Neg for SymMono {
    type Output = SymMono;
    fn neg(self) -> SymMono {
        SymMono::neg(&self)
    }
}

/// A single product term under construction.
#[derive(Clone, Debug, PartialEq)]
pub struct Prod(pub Term);

pub fn cyc(c: CycloRational) -> Prod {
    Prod(Term::scalar(c))
}

pub fn lit(n: i64) -> Prod {
    cyc(CycloRational::from_int(n))
}

pub fn frac(n: i64, d: i64) -> Prod {
    cyc(CycloRational::from_frac(n, d))
}

pub fn omega() -> Prod {
    cyc(CycloRational::omega())
}

pub fn omega_sq() -> Prod {
    cyc(CycloRational::omega_sq())
}

pub fn mono(m: SymMono) -> Prod {
    Prod(Term { scalar: CycloRational::one(), mono: m, factors: Vec::new() })
}

fn prim(p: Primitive) -> Prod {
    Prod(Term { scalar: CycloRational::one(), mono: SymMono::one(), factors: vec![Factor { prim: p, exp: 1 }] })
}

pub fn th(arg: SymMono, base: SymMono) -> Prod {
    prim(Primitive::Theta { arg, base })
}

/// `Θ(a_1; base)·…·Θ(a_k; base)`.
pub fn ths(args: Vec<SymMono>, base: SymMono) -> Prod {
    args.into_iter().fold(lit(1), |acc, a| acc * th(a, base.clone()))
}

/// `Θ(q^a; q^m)`.
pub fn thq(a: i64, m: i64) -> Prod {
    th(q(a), q(m))
}

/// `Θ(−q^a; q^m)`.
pub fn thb(a: i64, m: i64) -> Prod {
    th(-q(a), q(m))
}

pub fn poch(arg: SymMono, base: SymMono) -> Prod {
    prim(Primitive::PochInf { arg, base })
}

/// `(q^m; q^m)_∞`.
pub fn eta(m: i64) -> Prod {
    poch(q(m), q(m))
}

pub fn appell(x: SymMono, z: SymMono, base: SymMono) -> Prod {
    prim(Primitive::AppellM { x, z, base })
}

pub fn dn(n: i64, x: SymMono, z: SymMono, zp: SymMono, base: SymMono) -> Prod {
    prim(Primitive::Dn { n, x, z, zp, base })
}

/// The theta-quotient closed form of `D_n`.
pub fn dn_closed(n: i64, x: SymMono, z: SymMono, zp: SymMono, base: SymMono) -> Prod {
    prim(Primitive::DnClosed { n, x, z, zp, base })
}

/// Eulerian series at `ω^twist · arg`.
pub fn eul(name: EulerianName, twist: i64, arg: SymMono) -> Prod {
    prim(Primitive::Eulerian { name, twist, arg })
}

pub fn g(x: SymMono, base: SymMono) -> Prod {
    prim(Primitive::UniversalG { x, base })
}

impl Prod {
    pub fn pow(&self, k: i64) -> Prod {
        if k < 0 {
            return (lit(1) / self.clone()).pow(-k);
        }
        (0..k).fold(lit(1), |acc, _| acc * self.clone())
    }
}

impl Mul for Prod {
    type Output = Prod;
    fn mul(self, rhs: Prod) -> Prod {
        let mut t = self.0;
        t.scalar = &t.scalar * &rhs.0.scalar;
        t.mono = SymMono::mul(&t.mono, &rhs.0.mono);
        for f in rhs.0.factors {
            match t.factors.iter_mut().find(|g| g.prim == f.prim) {
                Some(g) => g.exp += f.exp,
                None => t.factors.push(f),
            }
        }
        t.factors.retain(|f| f.exp != 0);
        Prod(t)
    }
}

impl Div for Prod {
    type Output = Prod;
    fn div(self, rhs: Prod) -> Prod {
        let r = rhs.0;
        let inv = Term {
            scalar: cyclo_inv(&r.scalar).expect("division by a zero scalar"),
            mono: r.mono.inv(),
            factors: r.factors.into_iter().map(|f| Factor { prim: f.prim, exp: -f.exp }).collect(),
        };
        self * Prod(inv)
    }
}

impl Mul<SymMono> for Prod {
    type Output = Prod;
    fn mul(self, rhs: SymMono) -> Prod {
        self * mono(rhs)
    }
}

impl Neg for Prod {
    type Output = Prod;
    fn neg(self) -> Prod {
        lit(-1) * self
    }
}

impl From<Prod> for Expr {
    fn from(p: Prod) -> Expr {
        Expr { terms: vec![p.0] }
    }
}

impl From<SymMono> for Expr {
    fn from(m: SymMono) -> Expr {
        mono(m).into()
    }
}

impl<R: Into<Expr>> Add<R> for Prod {
    type Output = Expr;
    fn add(self, rhs: R) -> Expr {
        Expr::from(self) + rhs
    }
}

impl<R: Into<Expr>> Sub<R> for Prod {
    type Output = Expr;
    fn sub(self, rhs: R) -> Expr {
        Expr::from(self) - rhs
    }
}

impl<R: Into<Expr>> Add<R> for Expr {
    type Output = Expr;
    fn add(mut self, rhs: R) -> Expr {
        self.terms.extend(rhs.into().terms);
        self
    }
}

impl<R: Into<Expr>> Sub<R> for Expr {
    type Output = Expr;
    fn sub(mut self, rhs: R) -> Expr {
        self.terms.extend(rhs.into().terms.into_iter().map(|t| (-Prod(t)).0));
        self
    }
}

impl Mul<Prod> for Expr {
    type Output = Expr;
    fn mul(self, rhs: Prod) -> Expr {
        Expr { terms: self.terms.into_iter().map(|t| (Prod(t) * rhs.clone()).0).collect() }
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::default() - self
    }
}

/// `lhs − rhs`.
pub fn eq(lhs: impl Into<Expr>, rhs: impl Into<Expr>) -> Expr {
    lhs.into() - rhs
}
