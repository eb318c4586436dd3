use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::LaurentPoly;
use crate::error::{Error, Result};
use crate::exact::{CycloRational, Unit};

/// The factor `1 − unit·z^exp` with `exp ≥ 1` and `unit` a sixth root of unity.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Binomial {
    pub unit: Unit,
    pub exp: i64,
}

impl Binomial {
    fn coeff(self) -> CycloRational {
        self.unit.to_cyclo().expect("binomial unit outside Q(ω)")
    }

    pub fn to_poly(self) -> LaurentPoly {
        LaurentPoly::one_minus(&self.coeff(), self.exp)
    }
}

#[derive(Clone, PartialEq, Eq)]
enum Den {
    /// `∏ (1 − u·z^e)^k`; the empty map is the denominator 1.
    Binomials(BTreeMap<Binomial, u32>),
    /// Reduced general denominator: `min_deg == 0`, constant term 1, coprime to the numerator.
    Poly(LaurentPoly),
}

/// A rational function of `z` over Q(ω).
///
/// Two representations share one type. The binomial form keeps the
/// denominator as a multiset of factors `1 − u·z^e`, which is what every
/// theta quotient and geometric factor produces, and avoids gcd computations.
/// The general form holds an arbitrary reduced denominator. Equality is
/// semantic in both forms (cross-multiplication), so the choice never changes
/// results.
#[derive(Clone)]
pub struct RatFunc {
    num: LaurentPoly,
    den: Den,
}

fn den_poly_of(map: &BTreeMap<Binomial, u32>) -> LaurentPoly {
    let mut p = LaurentPoly::one();
    for (b, &k) in map {
        for _ in 0..k {
            p = p.mul_one_minus(&b.coeff(), b.exp);
        }
    }
    p
}

impl RatFunc {
    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self { num: p, den: Den::Binomials(BTreeMap::new()) }
    }

    pub fn from_scalar(c: CycloRational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_scalar(CycloRational::from_int(n))
    }

    /// `c·z^k`.
    pub fn monomial(c: CycloRational, k: i64) -> Self {
        Self::from_poly(LaurentPoly::monomial(c, k))
    }

    /// `1 / (1 − u·z^e)` for a sixth root of unity `u`.
    pub fn inv_one_minus(u: Unit, e: i64) -> Result<Self> {
        let c = u.to_cyclo().ok_or_else(|| Error::Unsupported(format!("root of unity {u} is not in Q(ω)")))?;
        match e.cmp(&0) {
            std::cmp::Ordering::Equal => {
                let d = &CycloRational::one() - &c;
                if d.is_zero() {
                    return Err(Error::Pole("1 - 1".into()));
                }
                Ok(Self::from_scalar(d.inv()?))
            }
            std::cmp::Ordering::Greater => {
                let mut m = BTreeMap::new();
                m.insert(Binomial { unit: u, exp: e }, 1);
                Ok(Self { num: LaurentPoly::one(), den: Den::Binomials(m) })
            }
            std::cmp::Ordering::Less => {
                // 1/(1 − u z^{-f}) = −u⁻¹ z^f / (1 − u⁻¹ z^f)
                let ui = u.inv();
                let mut r = Self::inv_one_minus(ui, -e)?;
                let ci = ui.to_cyclo().unwrap();
                r.num = LaurentPoly::monomial(-&ci, -e);
                Ok(r)
            }
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    /// The denominator as an expanded polynomial.
    pub fn denominator(&self) -> LaurentPoly {
        match &self.den {
            Den::Binomials(m) => den_poly_of(m),
            Den::Poly(p) => p.clone(),
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den_is_one() && self.num.is_one()
    }

    fn den_is_one(&self) -> bool {
        match &self.den {
            Den::Binomials(m) => m.is_empty(),
            Den::Poly(p) => p.is_one(),
        }
    }

    /// Whether the value is a Laurent polynomial (denominator 1).
    pub fn is_polynomial(&self) -> bool {
        self.den_is_one()
    }

    /// The value as a scalar, when it is a constant.
    pub fn as_scalar(&self) -> Option<CycloRational> {
        if self.is_zero() {
            return Some(CycloRational::zero());
        }
        if self.den_is_one() && self.num.is_constant() {
            return Some(self.num.coeff(0));
        }
        None
    }

    /// Whether the value involves `z` at all.
    pub fn is_z_free(&self) -> bool {
        self.as_scalar().is_some()
    }

    /// Coefficients of numerator and denominator are all rational.
    pub fn is_rational(&self) -> bool {
        self.num.is_rational() && self.denominator().is_rational()
    }

    fn binomials(&self) -> Option<&BTreeMap<Binomial, u32>> {
        match &self.den {
            Den::Binomials(m) => Some(m),
            Den::Poly(_) => None,
        }
    }

    /// Divide out binomial factors of the denominator that divide the numerator.
    fn cancel(&mut self) {
        if self.num.is_zero() {
            self.den = Den::Binomials(BTreeMap::new());
            return;
        }
        if let Den::Binomials(m) = &mut self.den {
            if m.is_empty() {
                return;
            }
            let keys: Vec<Binomial> = m.keys().copied().collect();
            for b in keys {
                let c = b.coeff();
                let k = m.get_mut(&b).unwrap();
                while *k > 0 {
                    match self.num.try_div_one_minus(&c, b.exp) {
                        Some(q) => {
                            self.num = q;
                            *k -= 1;
                        }
                        None => break,
                    }
                }
            }
            m.retain(|_, k| *k > 0);
        }
    }

    /// Fully reduced general form (`rf_normalize` of this value).
    pub fn normalized(&self) -> Result<Self> {
        rf_normalize(&self.num, &self.denominator())
    }

    pub fn scale(&self, c: &CycloRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Multiply by `c·z^k`.
    pub fn mul_monomial(&self, c: &CycloRational, k: i64) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        let num = if c.is_one() { self.num.shift(k) } else { self.num.scale(c).shift(k) };
        Self { num, den: self.den.clone() }
    }

    /// `self += c·z^k·other` without leaving the binomial form when both
    /// operands are polynomials.
    pub fn add_scaled_shifted(&mut self, other: &RatFunc, c: &CycloRational, k: i64) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        if self.den_is_one() && other.den_is_one() && self.binomials().is_some() && other.binomials().is_some() {
            self.num.add_scaled_shifted(&other.num, c, k);
            return;
        }
        if let (Some(a), Some(b)) = (self.binomials(), other.binomials()) {
            if a == b {
                self.num.add_scaled_shifted(&other.num, c, k);
                self.cancel();
                return;
            }
        }
        *self = &*self + &other.mul_monomial(c, k);
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.num.is_monomial() {
            if let Some(m) = self.binomials() {
                let c = self.num.coeffs()[0].inv()?;
                let k = self.num.min_deg();
                return Ok(Self::from_poly(den_poly_of(m).scale(&c).shift(-k)));
            }
        }
        rf_normalize(&self.denominator(), &self.num)
    }

    pub fn div(&self, rhs: &RatFunc) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Floating evaluation with ω = exp(2πi/3). Fails with a near-pole
    /// error when |den(z)| < 1e-12 relative to the absolute-value scale of den.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let d = self.denominator();
        let dv = d.eval(z);
        let scale = d.abs_scale(z).max(f64::MIN_POSITIVE);
        if dv.norm() < NEAR_POLE_REL * scale {
            return Err(Error::NearPole(format!("|den({z})| = {:e}", dv.norm())));
        }
        Ok(self.num.eval(z) / dv)
    }
}

/// Relative threshold below which `RatFunc::eval` reports a pole.
pub const NEAR_POLE_REL: f64 = 1e-12;

/// Canonical reduced form of `num / den`.
///
/// The result has a general denominator with `min_deg == 0` and constant term
/// 1, coprime to the numerator; when that denominator is 1 the polynomial form
/// is used.
pub fn rf_normalize(num: &LaurentPoly, den: &LaurentPoly) -> Result<RatFunc> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if num.is_zero() {
        return Ok(RatFunc::zero());
    }
    // absorb the z-power of den into num
    let mut n = num.shift(-den.min_deg());
    let mut d = den.shift(-den.min_deg());
    let g = LaurentPoly::gcd(&n, &d)?;
    if !g.is_one() {
        let nshift = n.min_deg();
        let (qn, rn) = n.shift(-nshift).div_rem(&g)?;
        debug_assert!(rn.is_zero());
        n = qn.shift(nshift);
        let (qd, rd) = d.div_rem(&g)?;
        debug_assert!(rd.is_zero());
        d = qd;
    }
    let c0 = d.coeff(0).inv()?;
    n = n.scale(&c0);
    d = d.scale(&c0);
    if d.is_one() {
        return Ok(RatFunc::from_poly(n));
    }
    Ok(RatFunc { num: n, den: Den::Poly(d) })
}

fn merge_max(a: &BTreeMap<Binomial, u32>, b: &BTreeMap<Binomial, u32>) -> BTreeMap<Binomial, u32> {
    let mut out = a.clone();
    for (k, &v) in b {
        let e = out.entry(*k).or_insert(0);
        *e = (*e).max(v);
    }
    out
}

fn lift(num: &LaurentPoly, have: &BTreeMap<Binomial, u32>, want: &BTreeMap<Binomial, u32>) -> LaurentPoly {
    let mut p = num.clone();
    for (b, &k) in want {
        let h = have.get(b).copied().unwrap_or(0);
        for _ in h..k {
            p = p.mul_one_minus(&b.coeff(), b.exp);
        }
    }
    p
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        match (self.binomials(), rhs.binomials()) {
            (Some(a), Some(b)) => {
                let mut out = if a == b {
                    RatFunc { num: &self.num + &rhs.num, den: self.den.clone() }
                } else {
                    let l = merge_max(a, b);
                    let n = &lift(&self.num, a, &l) + &lift(&rhs.num, b, &l);
                    RatFunc { num: n, den: Den::Binomials(l) }
                };
                out.cancel();
                out
            }
            _ => {
                let (da, db) = (self.denominator(), rhs.denominator());
                let n = &(&self.num * &db) + &(&rhs.num * &da);
                rf_normalize(&n, &(&da * &db)).expect("nonzero denominators")
            }
        }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        match (self.binomials(), rhs.binomials()) {
            (Some(a), Some(b)) => {
                let mut m = a.clone();
                for (k, &v) in b {
                    *m.entry(*k).or_insert(0) += v;
                }
                let mut out = RatFunc { num: &self.num * &rhs.num, den: Den::Binomials(m) };
                if !(a.is_empty() && b.is_empty()) {
                    out.cancel();
                }
                out
            }
            _ => rf_normalize(&(&self.num * &rhs.num), &(&self.denominator() * &rhs.denominator()))
                .expect("nonzero denominators"),
        }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        &self - &rhs
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.denominator() == &other.num * &self.denominator()
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<CycloRational> for RatFunc {
    fn from(c: CycloRational) -> Self {
        Self::from_scalar(c)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den_is_one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / ({})", self.num, self.denominator())
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RfOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Field arithmetic on rational functions, result normalized.
pub fn rf_arith(op: RfOp, a: &RatFunc, b: &RatFunc) -> Result<RatFunc> {
    let r = match op {
        RfOp::Add => a + b,
        RfOp::Sub => a - b,
        RfOp::Mul => a * b,
        RfOp::Div => a.div(b)?,
    };
    r.normalized()
}

/// Floating evaluation, see [`RatFunc::eval`].
pub fn rf_eval(f: &RatFunc, point: Complex64) -> Result<Complex64> {
    f.eval(point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(min: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(min, c)
    }

    fn general(n: LaurentPoly, d: LaurentPoly) -> RatFunc {
        rf_normalize(&n, &d).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let r = general(p(0, &[1, 0, -1]), p(0, &[1, -1]));
        assert!(r.is_polynomial());
        assert_eq!(r.numerator(), &p(0, &[1, 1]));

        let r = general(p(2, &[1]), p(1, &[1]));
        assert_eq!(r.numerator(), &p(1, &[1]));

        let r = general(p(0, &[2, -2]), p(0, &[4]));
        assert_eq!(r.numerator(), &LaurentPoly::from_coeffs(0, vec![CycloRational::from_frac(1, 2), CycloRational::from_frac(-1, 2)]));
        assert!(rf_normalize(&p(0, &[1]), &LaurentPoly::zero()).is_err());
    }

    #[test]
    fn arith_examples() {
        let a = general(p(0, &[1]), p(0, &[1, -1]));
        let b = general(p(0, &[1]), p(0, &[1, 1]));
        let s = rf_arith(RfOp::Add, &a, &b).unwrap();
        assert_eq!(s, general(p(0, &[2]), p(0, &[1, 0, -1])));

        let z = RatFunc::from_poly(p(1, &[1]));
        let zi = RatFunc::from_poly(p(-1, &[1]));
        assert!(rf_arith(RfOp::Mul, &z, &zi).unwrap().is_one());

        let one = RatFunc::one();
        let d = rf_arith(RfOp::Div, &one, &RatFunc::from_poly(p(0, &[1, -1]))).unwrap();
        assert_eq!(d, RatFunc::inv_one_minus(Unit::ONE, 1).unwrap());
        assert!(rf_arith(RfOp::Div, &one, &RatFunc::zero()).is_err());
    }

    #[test]
    fn binomial_form_matches_general_form() {
        let a = RatFunc::inv_one_minus(Unit::ONE, 1).unwrap();
        let b = RatFunc::inv_one_minus(Unit::MINUS_ONE, 1).unwrap();
        let s = &a + &b;
        assert_eq!(s, general(p(0, &[2]), p(0, &[1, 0, -1])));
        // (1 − z^2)/(1 − z) cancels exactly
        let c = &RatFunc::from_poly(p(0, &[1, 0, -1])) * &a;
        assert!(c.is_polynomial());
        assert_eq!(c.numerator(), &p(0, &[1, 1]));
    }

    #[test]
    fn negative_exponent_binomial() {
        // 1/(1 − z⁻²) = −z²/(1 − z²)
        let r = RatFunc::inv_one_minus(Unit::ONE, -2).unwrap();
        let back = &r * &RatFunc::from_poly(p(-2, &[-1, 0, 1]));
        assert!(back.is_one());
        assert!(RatFunc::inv_one_minus(Unit::ONE, 0).is_err());
        assert_eq!(RatFunc::inv_one_minus(Unit::MINUS_ONE, 0).unwrap().as_scalar(), Some(CycloRational::from_frac(1, 2)));
    }

    #[test]
    fn eval_examples() {
        let f = RatFunc::from_poly(p(0, &[1, 1]));
        assert!((f.eval(Complex64::new(2.0, 0.0)).unwrap().re - 3.0).abs() < 1e-15);
        let g = RatFunc::inv_one_minus(Unit::ONE, 1).unwrap();
        assert!((g.eval(Complex64::new(0.5, 0.0)).unwrap().re - 2.0).abs() < 1e-15);
        assert!(g.eval(Complex64::new(1.0, 0.0)).is_err());
        let w = RatFunc::from_scalar(CycloRational::omega()).eval(Complex64::new(0.3, 0.1)).unwrap();
        assert!((w - Complex64::new(-0.5, 3f64.sqrt() / 2.0)).norm() < 1e-15);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        (-3i64..3, prop::collection::vec(-4i64..5, 1..5)).prop_map(|(m, c)| LaurentPoly::from_ints(m, &c))
    }

    fn arb_nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
        arb_poly().prop_filter("nonzero", |p| !p.is_zero())
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent(n in arb_poly(), d in arb_nonzero_poly()) {
            let r = rf_normalize(&n, &d).unwrap();
            let r2 = rf_normalize(r.numerator(), &r.denominator()).unwrap();
            prop_assert_eq!(r.numerator(), r2.numerator());
            prop_assert_eq!(r.denominator(), r2.denominator());
        }

        #[test]
        fn normalize_is_scale_invariant(n in arb_poly(), d in arb_nonzero_poly(), c in arb_nonzero_poly()) {
            let r = rf_normalize(&n, &d).unwrap();
            let s = rf_normalize(&(&n * &c), &(&d * &c)).unwrap();
            prop_assert_eq!(r.numerator(), s.numerator());
            prop_assert_eq!(r.denominator(), s.denominator());
        }

        #[test]
        fn eval_distributes(n1 in arb_poly(), d1 in arb_nonzero_poly(), n2 in arb_poly(), d2 in arb_nonzero_poly(),
                            re in 0.3f64..1.7, im in -1.0f64..1.0) {
            let a = rf_normalize(&n1, &d1).unwrap();
            let b = rf_normalize(&n2, &d2).unwrap();
            let z = Complex64::new(re, im);
            let (Ok(va), Ok(vb)) = (a.eval(z), b.eval(z)) else { return Ok(()); };
            for (op, expect) in [(RfOp::Add, va + vb), (RfOp::Sub, va - vb), (RfOp::Mul, va * vb)] {
                let r = rf_arith(op, &a, &b).unwrap();
                if let Ok(v) = r.eval(z) {
                    let scale = expect.norm().max(va.norm() * vb.norm()).max(va.norm() + vb.norm()).max(1e-300);
                    prop_assert!((v - expect).norm() <= 1e-12 * scale, "{:?}: {} vs {}", op, v, expect);
                }
            }
        }
    }
}
