use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Unit;
use crate::qring::{Monomial, Series};
use crate::zfield::RatFunc;

use super::theta::{check_base, ThetaSpec};

/// `m(x, z; base)`. Either argument may carry a power of the formal variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AppellSpec {
    pub x: Monomial,
    pub z: Monomial,
    pub base: Monomial,
}

impl AppellSpec {
    pub fn new(x: Monomial, z: Monomial, base: Monomial) -> Self {
        Self { x, z, base }
    }
}

/// Numerator monomial and denominator argument of the r-th summand.
fn summand(spec: &AppellSpec, r: i64) -> (Monomial, Monomial) {
    let b = spec.base;
    let sign = Monomial::new(Unit::sign(r.rem_euclid(2) == 1), 0, 0);
    let num = sign * b.pow(r * (r - 1) / 2) * spec.z.pow(r);
    let w = b.pow(r - 1) * spec.x * spec.z;
    (num, w)
}

/// Lowest q-exponent the r-th summand can contribute.
fn summand_floor(spec: &AppellSpec, r: i64) -> i64 {
    let (num, w) = summand(spec, r);
    num.q_exp + w.q_exp.min(0)
}

/// Adds `num/(1 − w)` to `acc` through its order.
fn add_geometric(acc: &mut Series, num: Monomial, w: Monomial) -> Result<()> {
    let n = acc.order();
    match w.q_exp.cmp(&0) {
        std::cmp::Ordering::Equal => {
            if w.is_one() {
                return Err(Error::Degenerate(format!("Appell denominator 1 - {w} vanishes")));
            }
            let c = RatFunc::inv_one_minus(w.unit, w.z_exp)?;
            let t = RatFunc::monomial(num.coeff()?, num.z_exp);
            acc.add_to_coeff(num.q_exp, &(&t * &c));
        }
        std::cmp::Ordering::Greater => {
            let mut t = num;
            while t.q_exp <= n {
                acc.add_to_coeff(t.q_exp, &RatFunc::monomial(t.coeff()?, t.z_exp));
                t = t * w;
            }
        }
        std::cmp::Ordering::Less => add_geometric(acc, num * w.inv().neg(), w.inv())?,
    }
    Ok(())
}

/// The bilateral sum `Σ_r (−1)^r base^{C(r,2)} z^r / (1 − base^{r−1} x z)`
/// through order `n`.
pub fn appell_numerator(spec: &AppellSpec, n: i64) -> Result<Series> {
    check_base(&spec.base)?;
    let mut acc = Series::zero(n);
    for dir in [1i64, -1] {
        let mut r = if dir == 1 { 0 } else { -1 };
        let mut steps = 0;
        loop {
            let floor = summand_floor(spec, r);
            if floor <= n {
                let (num, w) = summand(spec, r);
                add_geometric(&mut acc, num, w)?;
            } else {
                let (a, b) = (summand(spec, r), summand(spec, r + dir));
                // both branches of the floor are convex in r, so once each is
                // increasing and above the order, no later r contributes
                if b.0.q_exp >= a.0.q_exp && (b.0 * b.1).q_exp >= (a.0 * a.1).q_exp {
                    break;
                }
            }
            r += dir;
            steps += 1;
            if steps > 100_000 {
                return Err(Error::Unbounded(format!("Appell sum for {spec:?}")));
            }
        }
    }
    Ok(acc)
}

/// `m(x, z; base)` through order `n`.
pub fn appell_m(spec: &AppellSpec, n: i64) -> Result<Series> {
    let theta = ThetaSpec::new(spec.z, spec.base).product_form()?;
    if theta.is_zero() {
        return Err(Error::Degenerate(format!("Θ({}; {}) vanishes in Appell function", spec.z, spec.base)));
    }
    let inv = theta.inverse()?;
    let v = theta.valuation().unwrap_or(0);
    let sum = appell_numerator(spec, n + v)?;
    inv.apply(&sum)
}
