use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exact::CycloRational;

/// A Laurent polynomial in `z` over Q(ω), stored densely from `min_deg` upward.
///
/// The first and last stored coefficients are nonzero; the zero polynomial
/// has no coefficients and `min_deg == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    min_deg: i64,
    coeffs: Vec<CycloRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(CycloRational::one())
    }

    pub fn constant(c: CycloRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: CycloRational, deg: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { min_deg: deg, coeffs: vec![c] }
    }

    /// `z^deg`.
    pub fn z_pow(deg: i64) -> Self {
        Self::monomial(CycloRational::one(), deg)
    }

    /// `1 − c·z^e`.
    pub fn one_minus(c: &CycloRational, e: i64) -> Self {
        let mut p = Self::one();
        p.add_term(&-c, e);
        p
    }

    pub fn from_coeffs(min_deg: i64, coeffs: Vec<CycloRational>) -> Self {
        let mut p = Self { min_deg, coeffs };
        p.trim();
        p
    }

    /// Integer coefficients from degree `min_deg` upward.
    pub fn from_ints(min_deg: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(min_deg, coeffs.iter().map(|&c| CycloRational::from_int(c)).collect())
    }

    fn trim(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => {
                self.coeffs.clear();
                self.min_deg = 0;
            }
            Some(i) => {
                let last = self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
                self.coeffs.truncate(last + 1);
                if i > 0 {
                    self.coeffs.drain(..i);
                    self.min_deg += i as i64;
                }
            }
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_deg == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.min_deg == 0 && self.coeffs.len() == 1)
    }

    /// Single nonzero term.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn min_deg(&self) -> i64 {
        self.min_deg
    }

    pub fn max_deg(&self) -> i64 {
        self.min_deg + self.coeffs.len() as i64 - 1
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, deg: i64) -> CycloRational {
        let i = deg - self.min_deg;
        if i < 0 || i >= self.coeffs.len() as i64 {
            CycloRational::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn coeffs(&self) -> &[CycloRational] {
        &self.coeffs
    }

    pub fn lowest_coeff(&self) -> Option<&CycloRational> {
        self.coeffs.first()
    }

    pub fn leading_coeff(&self) -> Option<&CycloRational> {
        self.coeffs.last()
    }

    /// Nonzero `(degree, coefficient)` pairs in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &CycloRational)> {
        let m = self.min_deg;
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (m + i as i64, c))
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(CycloRational::is_rational)
    }

    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { min_deg: self.min_deg + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &CycloRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Self { min_deg: self.min_deg, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    fn ensure_range(&mut self, lo: i64, hi: i64) {
        if self.coeffs.is_empty() {
            self.min_deg = lo;
            self.coeffs = vec![CycloRational::zero(); (hi - lo + 1) as usize];
            return;
        }
        if lo < self.min_deg {
            let extra = (self.min_deg - lo) as usize;
            let mut v = vec![CycloRational::zero(); extra];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.min_deg = lo;
        }
        let top = self.max_deg();
        if hi > top {
            self.coeffs.resize(self.coeffs.len() + (hi - top) as usize, CycloRational::zero());
        }
    }

    /// `self += c·z^deg`.
    pub fn add_term(&mut self, c: &CycloRational, deg: i64) {
        if c.is_zero() {
            return;
        }
        self.ensure_range(deg, deg);
        self.coeffs[(deg - self.min_deg) as usize] += c;
        self.trim();
    }

    /// `self += c·z^k·other`, in place.
    pub fn add_scaled_shifted(&mut self, other: &LaurentPoly, c: &CycloRational, k: i64) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        let lo = other.min_deg + k;
        self.ensure_range(lo, other.max_deg() + k);
        let off = (lo - self.min_deg) as usize;
        let unit = c.is_one();
        let neg = !unit && c.re.is_integer() && c.wc.is_zero() && (-&c.re).is_one();
        for (i, a) in other.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if unit {
                self.coeffs[off + i] += a;
            } else if neg {
                self.coeffs[off + i] -= a;
            } else {
                self.coeffs[off + i] += &(a * c);
            }
        }
        self.trim();
    }

    /// `self·(1 − c·z^e)`.
    pub fn mul_one_minus(&self, c: &CycloRational, e: i64) -> Self {
        let mut out = self.clone();
        out.add_scaled_shifted(self, &-c, e);
        out
    }

    /// Exact quotient by `1 − c·z^e` (e ≥ 1, c ≠ 0), or `None` if it does not divide.
    pub fn try_div_one_minus(&self, c: &CycloRational, e: i64) -> Option<Self> {
        debug_assert!(e >= 1);
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = self.coeffs.len();
        let e = e as usize;
        if n <= e {
            return None;
        }
        // P = Q·(1 − c z^e)  ⇒  q_i = p_i + c·q_{i−e}, deg Q = deg P − e.
        let qlen = n - e;
        let mut q: Vec<CycloRational> = Vec::with_capacity(qlen);
        for i in 0..qlen {
            let mut v = self.coeffs[i].clone();
            if i >= e && !q[i - e].is_zero() {
                v += &(c * &q[i - e]);
            }
            q.push(v);
        }
        // the top e coefficients must satisfy p_i = −c·q_{i−e}
        for i in qlen..n {
            let mut v = self.coeffs[i].clone();
            if i >= e {
                v += &(c * &q[i - e]);
            }
            if !v.is_zero() {
                return None;
            }
        }
        Some(Self::from_coeffs(self.min_deg, q))
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        if self.is_zero() {
            return Complex64::new(0.0, 0.0);
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c.to_complex();
        }
        acc * z.powi(self.min_deg as i32)
    }

    /// Sum of |c_k|·|z|^k, used as a scale for near-zero tests.
    pub fn abs_scale(&self, z: Complex64) -> f64 {
        let r = z.norm();
        self.terms().map(|(d, c)| c.to_complex().norm() * r.powi(d as i32)).sum()
    }

    /// Polynomial part shifted so the lowest degree is 0.
    fn normalized_poly(&self) -> Self {
        self.shift(-self.min_deg)
    }

    /// Long division of ordinary polynomials (both with `min_deg == 0`).
    pub fn div_rem(&self, d: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok((Self::zero(), Self::zero()));
        }
        assert!(self.min_deg >= 0 && d.min_deg >= 0, "div_rem on Laurent tails");
        let mut r = self.clone();
        r.ensure_range(0, r.max_deg());
        let dd = d.max_deg();
        let inv_lead = d.leading_coeff().unwrap().inv()?;
        let mut q = Self::zero();
        while !r.is_zero() && r.max_deg() >= dd {
            let k = r.max_deg() - dd;
            let c = r.leading_coeff().unwrap() * &inv_lead;
            q.add_term(&c, k);
            r.add_scaled_shifted(d, &-&c, k);
        }
        Ok((q, r))
    }

    pub fn monic(&self) -> Result<Self> {
        match self.leading_coeff() {
            None => Ok(Self::zero()),
            Some(l) => Ok(self.scale(&l.inv()?)),
        }
    }

    /// Monic gcd in Q(ω)[z, z⁻¹]; units `c·z^k` are normalized away, so the
    /// result has `min_deg == 0` and leading coefficient 1.
    pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
        let mut x = a.normalized_poly();
        let mut y = b.normalized_poly();
        if x.is_zero() {
            return y.monic();
        }
        if y.is_zero() {
            return x.monic();
        }
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y)?;
            x = y;
            y = r.monic()?.normalized_poly();
        }
        x.monic()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_scaled_shifted(rhs, &CycloRational::one(), 0);
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_scaled_shifted(rhs, &CycloRational::from_int(-1), 0);
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&CycloRational::from_int(-1))
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        lp_mul(self, rhs)
    }
}

/// Exact product; degree bounds add.
pub fn lp_mul(p: &LaurentPoly, q: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() || q.is_zero() {
        return LaurentPoly::zero();
    }
    let (a, b) = if p.len() <= q.len() { (p, q) } else { (q, p) };
    if a.is_monomial() {
        return b.scale(&a.coeffs[0]).shift(a.min_deg);
    }
    let mut out = vec![CycloRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let one = x.is_one();
        for (j, y) in b.coeffs.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            if one {
                out[i + j] += y;
            } else {
                out[i + j] += &(x * y);
            }
        }
    }
    LaurentPoly::from_coeffs(a.min_deg + b.min_deg, out)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*z")?,
                _ => write!(f, "{c}*z^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(min: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(min, c)
    }

    #[test]
    fn products() {
        assert_eq!(&p(0, &[1, -1]) * &p(0, &[1, 1]), p(0, &[1, 0, -1]));
        assert_eq!(&LaurentPoly::z_pow(-1) * &LaurentPoly::z_pow(1), LaurentPoly::one());
        assert!((&p(0, &[1, -1]) * &LaurentPoly::zero()).is_zero());
    }

    #[test]
    fn trims_to_canonical_zero() {
        let z = p(3, &[0, 0]);
        assert!(z.is_zero());
        assert_eq!(z, LaurentPoly::zero());
        assert_eq!(p(-2, &[0, 1, 2, 0]), p(-1, &[1, 2]));
    }

    #[test]
    fn binomial_division() {
        let one = CycloRational::one();
        let f = p(0, &[1, 0, -1]);
        assert_eq!(f.try_div_one_minus(&one, 1), Some(p(0, &[1, 1])));
        assert_eq!(f.try_div_one_minus(&one, 2), Some(LaurentPoly::one()));
        assert_eq!(p(0, &[1, 1]).try_div_one_minus(&one, 1), None);
        let g = p(-3, &[2, 5, 7]).mul_one_minus(&CycloRational::omega(), 2);
        assert_eq!(g.try_div_one_minus(&CycloRational::omega(), 2), Some(p(-3, &[2, 5, 7])));
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = &p(0, &[1, -1]) * &p(0, &[2, 0, 1]);
        let b = &p(0, &[1, -1]) * &p(1, &[3, 1]);
        let g = LaurentPoly::gcd(&a, &b).unwrap();
        assert_eq!(g, p(0, &[-1, 1]));
    }

    #[test]
    fn horner_eval() {
        let f = p(-1, &[1, 2, 3]);
        let v = f.eval(Complex64::new(2.0, 0.0));
        assert!((v.re - (0.5 + 2.0 + 6.0)).abs() < 1e-14);
    }
}
