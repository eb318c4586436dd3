use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exact::{CycloRational, Unit};
use crate::zfield::{LaurentPoly, RatFunc};

use super::Monomial;

/// A truncated Laurent series in `q` with rational-function coefficients.
///
/// Every coefficient of `q^e` with `e <= order` is exact; nothing is known
/// above `order`. Coefficients are stored densely from `min_exp`; entries past
/// the end of the vector are zero.
#[derive(Clone)]
pub struct Series {
    order: i64,
    min_exp: i64,
    coeffs: Vec<RatFunc>,
}

impl Series {
    pub fn zero(order: i64) -> Self {
        Self { order, min_exp: 0, coeffs: Vec::new() }
    }

    pub fn one(order: i64) -> Self {
        Self::constant(RatFunc::one(), order)
    }

    pub fn constant(c: RatFunc, order: i64) -> Self {
        Self::from_coeffs(0, vec![c], order)
    }

    /// Builds a series from coefficients starting at `q^min_exp`; entries above
    /// `order` are dropped.
    pub fn from_coeffs(min_exp: i64, mut coeffs: Vec<RatFunc>, order: i64) -> Self {
        let keep = (order - min_exp + 1).max(0) as usize;
        coeffs.truncate(keep);
        Self { order, min_exp, coeffs }
    }

    /// The exact series of a monomial, valid through `order`.
    pub fn monomial(m: &Monomial, order: i64) -> Result<Self> {
        let c = m.coeff()?;
        Ok(Self::from_coeffs(m.q_exp, vec![RatFunc::monomial(c, m.z_exp)], order))
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Coefficient of `q^e`. Exponents above the valid order read as zero;
    /// check [`Series::order`] first.
    pub fn coeff(&self, e: i64) -> RatFunc {
        self.get(e).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn get(&self, e: i64) -> Option<&RatFunc> {
        let i = e - self.min_exp;
        if i < 0 || e > self.order {
            return None;
        }
        self.coeffs.get(i as usize)
    }

    fn top(&self) -> i64 {
        self.min_exp + self.coeffs.len() as i64 - 1
    }

    /// Nonzero `(exponent, coefficient)` pairs through the valid order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &RatFunc)> {
        let m = self.min_exp;
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (m + i as i64, c))
    }

    /// Lowest exponent with a nonzero coefficient, or `None` if the series is
    /// zero through its order.
    pub fn valuation(&self) -> Option<i64> {
        self.terms().next().map(|(e, _)| e)
    }

    /// Valuation, or `order + 1` as a lower bound when nothing is known to be nonzero.
    pub fn valuation_lower_bound(&self) -> i64 {
        self.valuation().unwrap_or(self.order + 1)
    }

    pub fn is_zero_through_order(&self) -> bool {
        self.valuation().is_none()
    }

    /// First exponent whose coefficient is nonzero, reported for failures.
    pub fn first_nonzero(&self) -> Option<(i64, &RatFunc)> {
        self.terms().next()
    }

    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        Self::from_coeffs(self.min_exp, self.coeffs.clone(), order)
    }

    fn slot(&mut self, e: i64) -> &mut RatFunc {
        debug_assert!(e <= self.order);
        if self.coeffs.is_empty() {
            self.min_exp = e;
        }
        if e < self.min_exp {
            let extra = (self.min_exp - e) as usize;
            let mut v = vec![RatFunc::zero(); extra];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.min_exp = e;
        }
        let i = (e - self.min_exp) as usize;
        if i >= self.coeffs.len() {
            self.coeffs.resize(i + 1, RatFunc::zero());
        }
        &mut self.coeffs[i]
    }

    /// `self += c·z^k·q^e·other`-style accumulation of a single coefficient.
    pub fn add_to_coeff(&mut self, e: i64, c: &RatFunc) {
        if e > self.order || c.is_zero() {
            return;
        }
        let s = self.slot(e);
        *s = &*s + c;
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        Self { order: self.order, min_exp: self.min_exp, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn scale_cyclo(&self, c: &CycloRational) -> Self {
        if c.is_one() {
            return self.clone();
        }
        Self { order: self.order, min_exp: self.min_exp, coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect() }
    }

    /// Multiply by a monomial; shifts exponents and the valid order by `m.q_exp`.
    pub fn mul_monomial(&self, m: &Monomial) -> Result<Self> {
        let c = m.coeff()?;
        Ok(Self {
            order: self.order + m.q_exp,
            min_exp: self.min_exp + m.q_exp,
            coeffs: self.coeffs.iter().map(|a| a.mul_monomial(&c, m.z_exp)).collect(),
        })
    }

    fn extend_to_order(&mut self) {
        if self.order < self.min_exp {
            return;
        }
        let want = (self.order - self.min_exp + 1) as usize;
        if self.coeffs.len() < want {
            self.coeffs.resize(want, RatFunc::zero());
        }
    }

    /// Multiply by `1 − w`.
    pub fn mul_one_minus(&self, w: &Monomial) -> Result<Self> {
        match w.q_exp.cmp(&0) {
            std::cmp::Ordering::Greater => {
                let c = -&w.coeff()?;
                let mut out = self.clone();
                if out.coeffs.is_empty() {
                    return Ok(out);
                }
                let shift = w.q_exp as usize;
                let top = (self.top() + w.q_exp).min(self.order);
                let want = (top - out.min_exp + 1) as usize;
                if out.coeffs.len() < want {
                    out.coeffs.resize(want, RatFunc::zero());
                }
                for i in (shift..out.coeffs.len()).rev() {
                    let (lo, hi) = out.coeffs.split_at_mut(i);
                    hi[0].add_scaled_shifted(&lo[i - shift], &c, w.z_exp);
                }
                Ok(out)
            }
            std::cmp::Ordering::Equal => {
                let f = LaurentPoly::one_minus(&w.coeff()?, w.z_exp);
                Ok(self.scale(&RatFunc::from_poly(f)))
            }
            std::cmp::Ordering::Less => {
                // 1 − w = −w·(1 − w⁻¹)
                self.mul_monomial(&w.neg())?.mul_one_minus(&w.inv())
            }
        }
    }

    /// Divide by `1 − w` (geometric expansion when `w` has positive q-degree).
    pub fn div_one_minus(&self, w: &Monomial) -> Result<Self> {
        match w.q_exp.cmp(&0) {
            std::cmp::Ordering::Greater => {
                let c = w.coeff()?;
                let mut out = self.clone();
                if out.coeffs.is_empty() {
                    return Ok(out);
                }
                out.extend_to_order();
                let shift = w.q_exp as usize;
                for i in shift..out.coeffs.len() {
                    let (lo, hi) = out.coeffs.split_at_mut(i);
                    hi[0].add_scaled_shifted(&lo[i - shift], &c, w.z_exp);
                }
                Ok(out)
            }
            std::cmp::Ordering::Equal => {
                if w.is_one() {
                    return Err(Error::Pole(format!("1 - {w}")));
                }
                let f = RatFunc::inv_one_minus(w.unit, w.z_exp)?;
                Ok(self.scale(&f))
            }
            std::cmp::Ordering::Less => {
                // 1/(1 − w) = −w⁻¹/(1 − w⁻¹)
                let wi = w.inv();
                self.mul_monomial(&wi.neg())?.div_one_minus(&wi)
            }
        }
    }

    /// Multiplicative inverse by recursive coefficient solving.
    ///
    /// If `self = q^v(a_v + …)` is valid through `N`, the inverse starts at
    /// `q^-v` and is valid through `N − 2v`.
    pub fn invert(&self) -> Result<Self> {
        let (v, lead) = self.first_nonzero().ok_or_else(|| Error::NonUnit("series is zero through its order".into()))?;
        let inv_lead = lead.inv()?;
        let order = self.order - 2 * v;
        let len = (order + v + 1).max(0) as usize;
        let mut b: Vec<RatFunc> = Vec::with_capacity(len);
        for k in 0..len {
            if k == 0 {
                b.push(inv_lead.clone());
                continue;
            }
            let mut acc = RatFunc::zero();
            for j in 1..=k {
                let a = self.coeff(v + j as i64);
                if a.is_zero() || b[k - j].is_zero() {
                    continue;
                }
                acc = &acc + &(&a * &b[k - j]);
            }
            b.push(-&(&acc * &inv_lead));
        }
        Ok(Self::from_coeffs(-v, b, order))
    }

    /// q ↦ ω^t·q on a series whose coefficients do not involve `z`.
    pub fn twist(&self, t: i64) -> Result<Self> {
        let t = t.rem_euclid(3);
        self.require_pure_q("twist")?;
        if t == 0 {
            return Ok(self.clone());
        }
        let mut out = self.clone();
        for (i, c) in out.coeffs.iter_mut().enumerate() {
            let e = self.min_exp + i as i64;
            let u = Unit::OMEGA.pow(t * e);
            if !u.is_one() {
                *c = c.scale(&u.to_cyclo().unwrap());
            }
        }
        Ok(out)
    }

    /// q ↦ u·q^s on a series whose coefficients do not involve `z`.
    pub fn substitute(&self, u: Unit, s: i64) -> Result<Self> {
        assert!(s >= 1);
        self.require_pure_q("substitute")?;
        let order = self.order * s + s - 1;
        let mut out = Self::zero(order);
        for (e, c) in self.terms() {
            let ue = u.pow(e);
            let v = if ue.is_one() {
                c.clone()
            } else {
                let k = ue.to_cyclo().ok_or_else(|| Error::Unsupported(format!("substitution unit {u}")))?;
                c.scale(&k)
            };
            out.add_to_coeff(e * s, &v);
        }
        Ok(out)
    }

    pub fn is_pure_q(&self) -> bool {
        self.coeffs.iter().all(RatFunc::is_z_free)
    }

    fn require_pure_q(&self, what: &str) -> Result<()> {
        if self.is_pure_q() {
            Ok(())
        } else {
            Err(Error::NotPureQ(what.into()))
        }
    }

    /// All coefficients have rational (ω-free) numerator and denominator.
    pub fn has_rational_coeffs(&self) -> bool {
        self.coeffs.iter().all(RatFunc::is_rational)
    }

    fn binop(&self, rhs: &Series, negate: bool) -> Series {
        let order = self.order.min(rhs.order);
        let mut out = self.truncate(order);
        for (e, c) in rhs.terms() {
            if e > order {
                break;
            }
            let s = out.slot(e);
            *s = if negate { &*s - c } else { &*s + c };
        }
        out
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        self.binop(rhs, false)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self.binop(rhs, true)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series { order: self.order, min_exp: self.min_exp, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        series_mul(self, rhs)
    }
}

impl Add for Series {
    type Output = Series;
    fn add(self, rhs: Series) -> Series {
        &self + &rhs
    }
}

impl Sub for Series {
    type Output = Series;
    fn sub(self, rhs: Series) -> Series {
        &self - &rhs
    }
}

impl Mul for Series {
    type Output = Series;
    fn mul(self, rhs: Series) -> Series {
        &self * &rhs
    }
}

/// Coefficientwise sum; valid through the smaller order.
pub fn series_add(a: &Series, b: &Series) -> Series {
    a + b
}

/// Cauchy product. With valuations `va`, `vb`, the product is valid through
/// `min(a.order + vb, b.order + va)`.
pub fn series_mul(a: &Series, b: &Series) -> Series {
    let va = a.valuation_lower_bound();
    let vb = b.valuation_lower_bound();
    let order = (a.order + vb).min(b.order + va);
    let mut out = Series::zero(order);
    let bt: Vec<(i64, &RatFunc)> = b.terms().collect();
    let polys = a.coeffs.iter().chain(b.coeffs.iter()).all(RatFunc::is_polynomial);
    if polys {
        let mut acc: Vec<LaurentPoly> = Vec::new();
        let base = va + vb;
        for (ea, ca) in a.terms() {
            for &(eb, cb) in &bt {
                let e = ea + eb;
                if e > order {
                    break;
                }
                let i = (e - base) as usize;
                if acc.len() <= i {
                    acc.resize(i + 1, LaurentPoly::zero());
                }
                let p = ca.numerator() * cb.numerator();
                acc[i].add_scaled_shifted(&p, &CycloRational::one(), 0);
            }
        }
        let coeffs = acc.into_iter().map(RatFunc::from_poly).collect();
        return Series::from_coeffs(base, coeffs, order);
    }
    for (ea, ca) in a.terms() {
        for &(eb, cb) in &bt {
            let e = ea + eb;
            if e > order {
                break;
            }
            out.add_to_coeff(e, &(ca * cb));
        }
    }
    out
}

/// Inverse of a series whose lowest nonzero coefficient is a unit.
pub fn series_invert(a: &Series) -> Result<Series> {
    a.invert()
}

impl PartialEq for Series {
    /// Equal through the smaller of the two orders.
    fn eq(&self, other: &Self) -> bool {
        (self - other).is_zero_through_order()
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*q^{e}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
