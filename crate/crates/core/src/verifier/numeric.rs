//! Floating-point evaluation of catalog expressions.
//!
//! Everything here is written from the defining sums and products and shares
//! no code with the series engine, so the two engines check each other.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::catalog::{Expr, Primitive, SymMono};
use crate::error::{Error, Result};
use crate::special::EulerianName;

/// Terms smaller than this fraction of the running scale end a sum or product.
const TAIL: f64 = 1e-17;
/// Denominators below this magnitude count as a near pole.
pub const POLE_GUARD: f64 = 1e-6;
const CAP: usize = 20_000;

type Vals = BTreeMap<String, Complex64>;

fn guard(d: Complex64, what: &str) -> Result<Complex64> {
    if d.norm() < POLE_GUARD {
        Err(Error::NearPole(format!("{what} = {d:.3e}")))
    } else {
        Ok(d)
    }
}

/// `(a; b)_∞`.
pub fn poch_inf(a: Complex64, b: Complex64) -> Result<Complex64> {
    if b.norm() >= 1.0 {
        return Err(Error::NoConvergence(format!("base |{b}| >= 1")));
    }
    let mut acc = Complex64::new(1.0, 0.0);
    let mut t = a;
    for _ in 0..CAP {
        if t.norm() < TAIL {
            return Ok(acc);
        }
        acc *= Complex64::new(1.0, 0.0) - t;
        t *= b;
    }
    Err(Error::NoConvergence("Pochhammer product".into()))
}

/// `(a; b)_n` for `n >= 0`.
pub fn poch_fin(a: Complex64, b: Complex64, n: usize) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    let mut t = a;
    for _ in 0..n {
        acc *= Complex64::new(1.0, 0.0) - t;
        t *= b;
    }
    acc
}

/// `Θ(x; b)` from the triple product.
pub fn theta(x: Complex64, b: Complex64) -> Result<Complex64> {
    Ok(poch_inf(x, b)? * poch_inf(b / x, b)? * poch_inf(b, b)?)
}

/// Sums `f(0), f(1), …` until the terms drop below the running scale.
fn sum_until_small(mut f: impl FnMut(i64) -> Result<Complex64>, what: &str) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut scale: f64 = 0.0;
    let mut small = 0;
    for k in 0..CAP as i64 {
        let t = f(k)?;
        acc += t;
        scale = scale.max(t.norm());
        // a few consecutive tiny terms, so an isolated zero does not stop the sum
        if t.norm() <= TAIL * scale.max(1e-300) {
            small += 1;
            if small >= 3 {
                return Ok(acc);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NoConvergence(what.into()))
}

fn binom2(r: i64) -> i64 {
    r * (r - 1) / 2
}

fn sign(r: i64) -> f64 {
    if r.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `m(x, z; b)` from the bilateral sum.
pub fn appell(x: Complex64, z: Complex64, b: Complex64) -> Result<Complex64> {
    let term = |r: i64| -> Result<Complex64> {
        let den = guard(Complex64::new(1.0, 0.0) - b.powi((r - 1) as i32) * x * z, "Appell denominator")?;
        Ok(sign(r) * b.powi(binom2(r) as i32) * z.powi(r as i32) / den)
    };
    let up = sum_until_small(term, "Appell sum, r >= 0")?;
    let down = sum_until_small(|k| term(-1 - k), "Appell sum, r < 0")?;
    let th = guard(theta(z, b)?, "Appell theta prefactor")?;
    Ok((up + down) / th)
}

/// `D_n(x, z, z'; b)` from its definition as a difference of Appell functions.
pub fn dn(n: i64, x: Complex64, z: Complex64, zp: Complex64, b: Complex64) -> Result<Complex64> {
    let mut acc = appell(x, z, b)?;
    let bn2 = b.powi((n * n) as i32);
    for r in 0..n {
        let c = b.powi(-binom2(r + 1) as i32) * (-x).powi(r as i32);
        let arg = -b.powi((binom2(n) - n * r) as i32) * (-x).powi(n as i32);
        acc -= c * appell(arg, zp, bn2)?;
    }
    Ok(acc)
}

/// The theta-quotient sum that `D_n` equals for generic arguments.
pub fn dn_closed(n: i64, x: Complex64, z: Complex64, zp: Complex64, b: Complex64) -> Result<Complex64> {
    let bn = b.powi(n as i32);
    let bn2 = b.powi((n * n) as i32);
    let eta = poch_inf(bn, bn)?;
    let w = -b.powi(binom2(n) as i32) * (-x).powi(n as i32);
    let pre = zp * eta.powi(3) / (guard(theta(x * z, b)?, "Θ(xz)")? * guard(theta(zp, bn2)?, "Θ(z')")? * guard(theta(w * zp, bn)?, "Θ(w z')")?);
    let mut acc = Complex64::new(0.0, 0.0);
    for r in 0..n {
        let num = b.powi(binom2(r) as i32) * (-x * z).powi(r as i32) * theta(w * b.powi(r as i32) * z * zp, bn)? * theta(bn.powi(r as i32) * z.powi(n as i32) / zp, bn2)?;
        acc += num / guard(theta(b.powi(r as i32) * z, bn)?, "Θ(q^r z)")?;
    }
    Ok(pre * acc)
}

/// `g(x; b)` from its Eulerian definition.
pub fn universal_g(x: Complex64, b: Complex64) -> Result<Complex64> {
    let mut den = Complex64::new(1.0, 0.0) - x;
    let s = sum_until_small(
        |n| {
            if n > 0 {
                den *= (Complex64::new(1.0, 0.0) - b.powi(n as i32) * x) * (Complex64::new(1.0, 0.0) - b.powi(n as i32) / x);
            }
            Ok(b.powi((n * n) as i32) / guard(den, "g denominator")?)
        },
        "g sum",
    )?;
    Ok((s - 1.0) / x)
}

/// The named Eulerian series at `p`.
pub fn eulerian(name: EulerianName, p: Complex64) -> Result<Complex64> {
    use EulerianName::*;
    let p2 = p * p;
    let t = |n: i64| -> Result<Complex64> {
        let nu = n as usize;
        let ni = n as i32;
        let v = match name {
            Phi10 => p.powi(binom2(n + 1) as i32) / poch_fin(p, p2, nu + 1),
            Psi10 => p.powi(binom2(n + 2) as i32) / poch_fin(p, p2, nu + 1),
            BigX10 => sign(n) * p.powi(ni * ni) / poch_fin(-p, p, 2 * nu),
            Chi10 => sign(n) * p.powi((ni + 1) * (ni + 1)) / poch_fin(-p, p, 2 * nu + 1),
            Phi6 => sign(n) * p.powi(ni * ni) * poch_fin(p, p2, nu) / poch_fin(-p, p, 2 * nu),
            Psi6 => sign(n) * p.powi((ni + 1) * (ni + 1)) * poch_fin(p, p2, nu) / poch_fin(-p, p, 2 * nu + 1),
            F0 => p.powi(ni * ni) / poch_fin(-p, p, nu),
            F1 => p.powi(ni * (ni + 1)) / poch_fin(-p, p, nu),
            F0Seventh => p.powi(ni * ni) / poch_fin(p.powi(ni + 1), p, nu),
        };
        if !v.is_finite() {
            return Err(Error::NearPole(format!("{name:?} summand {n}")));
        }
        Ok(v)
    };
    sum_until_small(t, "Eulerian sum")
}

fn omega_pow(t: i64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * t.rem_euclid(3) as f64 / 3.0)
}

/// Evaluates one primitive at `q` with the given variable values.
pub fn eval_primitive(p: &Primitive, q: Complex64, vals: &Vals) -> Result<Complex64> {
    let e = |m: &SymMono| m.eval(q, vals);
    match p {
        Primitive::Theta { arg, base } => theta(e(arg)?, e(base)?),
        Primitive::PochInf { arg, base } => poch_inf(e(arg)?, e(base)?),
        Primitive::AppellM { x, z, base } => appell(e(x)?, e(z)?, e(base)?),
        Primitive::Dn { n, x, z, zp, base } => dn(*n, e(x)?, e(z)?, e(zp)?, e(base)?),
        Primitive::DnClosed { n, x, z, zp, base } => dn_closed(*n, e(x)?, e(z)?, e(zp)?, e(base)?),
        Primitive::Eulerian { name, twist, arg } => eulerian(*name, omega_pow(*twist) * e(arg)?),
        Primitive::UniversalG { x, base } => universal_g(e(x)?, e(base)?),
    }
}

/// Value of each term of `expr`.
pub fn eval_terms(expr: &Expr, q: Complex64, vals: &Vals) -> Result<Vec<Complex64>> {
    expr.terms
        .iter()
        .map(|t| {
            let mut v = t.scalar.to_complex() * t.mono.eval(q, vals)?;
            for f in &t.factors {
                let x = eval_primitive(&f.prim, q, vals)?;
                if f.exp < 0 {
                    guard(x, "denominator factor")?;
                }
                v *= x.powi(f.exp as i32);
            }
            Ok(v)
        })
        .collect()
}

/// `|Σ terms| / max |term|`, the residual used for pass/fail decisions.
pub fn relative_residual(terms: &[Complex64]) -> f64 {
    let scale = terms.iter().map(|t| t.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return 0.0;
    }
    terms.iter().sum::<Complex64>().norm() / scale
}
