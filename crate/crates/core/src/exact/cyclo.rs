//! The field Q(ω), ω a primitive cube root of unity, in the basis {1, ω}.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::BigRational;
use crate::error::{Error, Result};

/// `re + wc·ω` with ω² = −1 − ω.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct CycloRational {
    pub re: BigRational,
    #[serde(rename = "w")]
    pub wc: BigRational,
}

impl CycloRational {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::ONE)
    }

    pub fn omega() -> Self {
        Self { re: BigRational::ZERO, wc: BigRational::ONE }
    }

    /// ω² = −1 − ω.
    pub fn omega_sq() -> Self {
        Self { re: BigRational::from_int(-1), wc: BigRational::from_int(-1) }
    }

    pub fn new(re: BigRational, wc: BigRational) -> Self {
        Self { re, wc }
    }

    pub fn from_rational(re: BigRational) -> Self {
        Self { re, wc: BigRational::ZERO }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_int(n))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(n, d))
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.wc.is_zero()
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.wc.is_zero()
    }

    #[inline]
    pub fn is_rational(&self) -> bool {
        self.wc.is_zero()
    }

    /// Galois conjugate ω ↦ ω²: a + bω ↦ (a − b) − bω.
    pub fn conj(&self) -> Self {
        Self { re: &self.re - &self.wc, wc: -&self.wc }
    }

    /// Field norm (a + bω)(a + bω²) = a² − ab + b².
    pub fn norm(&self) -> BigRational {
        let (a, b) = (&self.re, &self.wc);
        &(&(a * a) - &(a * b)) + &(b * b)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_rational() {
            return Ok(Self::from_rational(self.re.recip()?));
        }
        let n = self.norm().recip()?;
        let c = self.conj();
        Ok(Self { re: &c.re * &n, wc: &c.wc * &n })
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self { re: &self.re * r, wc: &self.wc * r }
    }

    pub fn to_complex(&self) -> Complex64 {
        let w = Complex64::new(-0.5, 3f64.sqrt() / 2.0);
        Complex64::new(self.re.to_f64(), 0.0) + w * self.wc.to_f64()
    }
}

impl Add for &CycloRational {
    type Output = CycloRational;
    fn add(self, rhs: &CycloRational) -> CycloRational {
        CycloRational { re: &self.re + &rhs.re, wc: &self.wc + &rhs.wc }
    }
}

impl Sub for &CycloRational {
    type Output = CycloRational;
    fn sub(self, rhs: &CycloRational) -> CycloRational {
        CycloRational { re: &self.re - &rhs.re, wc: &self.wc - &rhs.wc }
    }
}

impl Mul for &CycloRational {
    type Output = CycloRational;
    fn mul(self, rhs: &CycloRational) -> CycloRational {
        if self.wc.is_zero() {
            return rhs.scale(&self.re);
        }
        if rhs.wc.is_zero() {
            return self.scale(&rhs.re);
        }
        // (a + bω)(c + dω) = (ac − bd) + (ad + bc − bd)ω
        let (a, b, c, d) = (&self.re, &self.wc, &rhs.re, &rhs.wc);
        let bd = b * d;
        CycloRational { re: &(a * c) - &bd, wc: &(&(a * d) + &(b * c)) - &bd }
    }
}

impl Neg for &CycloRational {
    type Output = CycloRational;
    fn neg(self) -> CycloRational {
        CycloRational { re: -&self.re, wc: -&self.wc }
    }
}

impl Neg for CycloRational {
    type Output = CycloRational;
    fn neg(self) -> CycloRational {
        -&self
    }
}

impl Add for CycloRational {
    type Output = CycloRational;
    fn add(self, rhs: CycloRational) -> CycloRational {
        &self + &rhs
    }
}

impl Sub for CycloRational {
    type Output = CycloRational;
    fn sub(self, rhs: CycloRational) -> CycloRational {
        &self - &rhs
    }
}

impl Mul for CycloRational {
    type Output = CycloRational;
    fn mul(self, rhs: CycloRational) -> CycloRational {
        &self * &rhs
    }
}

impl AddAssign<&CycloRational> for CycloRational {
    fn add_assign(&mut self, rhs: &CycloRational) {
        if rhs.is_zero() {
            return;
        }
        self.re = &self.re + &rhs.re;
        if !rhs.wc.is_zero() {
            self.wc = &self.wc + &rhs.wc;
        }
    }
}

impl SubAssign<&CycloRational> for CycloRational {
    fn sub_assign(&mut self, rhs: &CycloRational) {
        if rhs.is_zero() {
            return;
        }
        self.re = &self.re - &rhs.re;
        if !rhs.wc.is_zero() {
            self.wc = &self.wc - &rhs.wc;
        }
    }
}

impl MulAssign<&CycloRational> for CycloRational {
    fn mul_assign(&mut self, rhs: &CycloRational) {
        *self = &*self * rhs;
    }
}

impl From<i64> for CycloRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for CycloRational {
    fn from(r: BigRational) -> Self {
        Self::from_rational(r)
    }
}

impl fmt::Display for CycloRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.wc.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}ω", self.wc),
            (false, false) => {
                if self.wc.signum() < 0 {
                    write!(f, "({} - {}ω)", self.re, -&self.wc)
                } else {
                    write!(f, "({} + {}ω)", self.re, self.wc)
                }
            }
        }
    }
}

impl fmt::Debug for CycloRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Checked inverse, the `cyclo_inv` operation.
pub fn cyclo_inv(x: &CycloRational) -> Result<CycloRational> {
    if x.is_zero() {
        return Err(Error::DivisionByZero);
    }
    x.inv()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w() -> CycloRational {
        CycloRational::omega()
    }

    #[test]
    fn omega_squared() {
        assert_eq!(&w() * &w(), CycloRational::omega_sq());
        let s = &(&w() + &CycloRational::omega_sq()) + &CycloRational::one();
        assert!(s.is_zero());
        assert!(s.is_rational());
    }

    #[test]
    fn omega_minus_omega_sq_squared_is_minus_three() {
        let d = &w() - &CycloRational::omega_sq();
        assert_eq!(d, CycloRational::new(1.into(), 2.into()));
        assert_eq!(&d * &d, CycloRational::from_int(-3));
    }

    #[test]
    fn inverses() {
        assert_eq!(cyclo_inv(&w()).unwrap(), CycloRational::omega_sq());
        assert_eq!(cyclo_inv(&CycloRational::from_int(2)).unwrap(), CycloRational::from_frac(1, 2));
        let d = &w() - &CycloRational::omega_sq();
        let expected = d.scale(&BigRational::new(-1, 3));
        assert_eq!(cyclo_inv(&d).unwrap(), expected);
        assert!(cyclo_inv(&CycloRational::zero()).is_err());
    }

    #[test]
    fn rationality() {
        assert!(CycloRational::from_frac(3, 2).is_rational());
        assert!(!w().is_rational());
    }

    #[test]
    fn complex_image() {
        let c = w().to_complex();
        assert!((c.re + 0.5).abs() < 1e-15);
        assert!((c.im - 3f64.sqrt() / 2.0).abs() < 1e-15);
    }

    fn arb_cyclo() -> impl Strategy<Value = CycloRational> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20)
            .prop_map(|(a, b, c, d)| CycloRational::new(BigRational::new(a, b), BigRational::new(c, d)))
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb_cyclo(), y in arb_cyclo(), z in arb_cyclo()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            if !x.is_zero() {
                prop_assert!((&x * &cyclo_inv(&x).unwrap()).is_one());
            }
        }

        #[test]
        fn norm_is_conjugate_product(x in arb_cyclo()) {
            let p = &x * &x.conj();
            prop_assert!(p.is_rational());
            prop_assert_eq!(&p.re, &x.norm());
            if !x.is_zero() {
                prop_assert!(x.norm().signum() > 0);
            }
        }
    }
}
