//! Products of binomial factors `(1 − w)^k`, kept symbolic until expansion.
//!
//! Theta functions and q-Pochhammer symbols are all of this shape. Keeping them
//! factored lets numerator and denominator factors cancel before any series
//! work, makes inversion free, and reduces expansion to one O(N) recurrence
//! per factor.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::CycloRational;
use crate::zfield::{LaurentPoly, RatFunc};

use super::{Monomial, Series};

#[derive(Clone, Debug, PartialEq)]
pub struct ProductForm {
    scalar: CycloRational,
    prefactor: Monomial,
    /// `(1 − w)^k` with `w.q_exp >= 0` and `w != 1`.
    factors: BTreeMap<Monomial, i64>,
    /// `∏_{i≥0} (1 − start·step^i)^k` with `start.q_exp >= 1`, `step.q_exp >= 1`.
    progressions: BTreeMap<(Monomial, Monomial), i64>,
    zero: bool,
}

impl Default for ProductForm {
    fn default() -> Self {
        Self::one()
    }
}

impl ProductForm {
    pub fn one() -> Self {
        Self {
            scalar: CycloRational::one(),
            prefactor: Monomial::ONE,
            factors: BTreeMap::new(),
            progressions: BTreeMap::new(),
            zero: false,
        }
    }

    /// True when some numerator factor is exactly `1 − 1`.
    pub fn is_zero(&self) -> bool {
        self.zero
    }

    /// Exact q-valuation of the product, if it is nonzero.
    pub fn valuation(&self) -> Option<i64> {
        (!self.zero).then_some(self.prefactor.q_exp)
    }

    pub fn prefactor(&self) -> Monomial {
        self.prefactor
    }

    pub fn scale(&mut self, c: &CycloRational) -> &mut Self {
        if c.is_zero() {
            self.zero = true;
        }
        self.scalar = &self.scalar * c;
        self
    }

    pub fn mul_monomial(&mut self, m: Monomial, k: i64) -> &mut Self {
        self.prefactor = self.prefactor * m.pow(k);
        self
    }

    /// Multiply by `(1 − w)^k`.
    pub fn mul_factor(&mut self, w: Monomial, k: i64) -> Result<&mut Self> {
        if k == 0 {
            return Ok(self);
        }
        if w.is_one() {
            if k < 0 {
                return Err(Error::Pole(format!("1 - {w}")));
            }
            self.zero = true;
            return Ok(self);
        }
        let w = if w.q_exp < 0 {
            // 1 − w = −w·(1 − w⁻¹)
            self.prefactor = self.prefactor * w.neg().pow(k);
            w.inv()
        } else {
            w
        };
        bump(&mut self.factors, w, k);
        Ok(self)
    }

    /// Multiply by `(start; step)_∞^k`.
    pub fn mul_progression(&mut self, start: Monomial, step: Monomial, k: i64) -> Result<&mut Self> {
        if step.q_exp < 1 || step.z_exp != 0 {
            return Err(Error::Unbounded(format!("Pochhammer base {step}")));
        }
        let mut w = start;
        while w.q_exp <= 0 {
            self.mul_factor(w, k)?;
            w = w * step;
        }
        bump(&mut self.progressions, (w, step), k);
        Ok(self)
    }

    /// Multiply by `(arg; base)_n^k`.
    pub fn mul_poch_fin(&mut self, arg: Monomial, base: Monomial, n: u32, k: i64) -> Result<&mut Self> {
        let mut w = arg;
        for _ in 0..n {
            self.mul_factor(w, k)?;
            w = w * base;
        }
        Ok(self)
    }

    /// Multiply by `Θ(arg; base)^k = ((arg)_∞ (base/arg)_∞ (base)_∞)^k`.
    pub fn mul_theta(&mut self, arg: Monomial, base: Monomial, k: i64) -> Result<&mut Self> {
        self.mul_progression(arg, base, k)?;
        self.mul_progression(base * arg.inv(), base, k)?;
        self.mul_progression(base, base, k)
    }

    pub fn mul(&mut self, other: &ProductForm) -> &mut Self {
        self.zero |= other.zero;
        self.scalar = &self.scalar * &other.scalar;
        self.prefactor = self.prefactor * other.prefactor;
        for (w, k) in &other.factors {
            bump(&mut self.factors, *w, *k);
        }
        for (p, k) in &other.progressions {
            bump(&mut self.progressions, *p, *k);
        }
        self
    }

    pub fn inverse(&self) -> Result<ProductForm> {
        if self.zero {
            return Err(Error::NonUnit("product vanishes identically".into()));
        }
        Ok(ProductForm {
            scalar: self.scalar.inv()?,
            prefactor: self.prefactor.inv(),
            factors: self.factors.iter().map(|(w, k)| (*w, -k)).collect(),
            progressions: self.progressions.iter().map(|(p, k)| (*p, -k)).collect(),
            zero: false,
        })
    }

    pub fn powi(&self, e: i64) -> Result<ProductForm> {
        if e < 0 {
            return self.inverse()?.powi(-e);
        }
        let mut out = ProductForm::one();
        for _ in 0..e {
            out.mul(self);
        }
        Ok(out)
    }

    /// All factors with q-degree at most `m`, merged.
    fn flatten(&self, m: i64) -> BTreeMap<Monomial, i64> {
        let mut all = self.factors.clone();
        for ((start, step), k) in &self.progressions {
            let mut w = *start;
            while w.q_exp <= m {
                bump(&mut all, w, *k);
                w = w * *step;
            }
        }
        all.retain(|w, _| w.q_exp <= m);
        all
    }

    /// Expands the product as a series valid through `order`.
    pub fn expand(&self, order: i64) -> Result<Series> {
        if self.zero {
            return Ok(Series::zero(order));
        }
        self.apply(&Series::one(order - self.prefactor.q_exp))
    }

    /// `s · self`. The product is known exactly, so the result is valid
    /// through `s.order() + valuation`.
    pub fn apply(&self, s: &Series) -> Result<Series> {
        if self.zero {
            return Ok(Series::zero(s.order()));
        }
        let m = s.order() - s.valuation_lower_bound();
        let all = self.flatten(m);
        let mut num = LaurentPoly::constant(self.scalar.clone());
        let mut den = RatFunc::one();
        for (w, &k) in all.iter().filter(|(w, _)| w.q_exp == 0) {
            let c = w.coeff()?;
            for _ in 0..k.unsigned_abs() {
                if k > 0 {
                    num = num.mul_one_minus(&c, w.z_exp);
                } else {
                    den = &den * &RatFunc::inv_one_minus(w.unit, w.z_exp)?;
                }
            }
        }
        let c = &RatFunc::from_poly(num) * &den;
        let mut s = if c.is_one() { s.clone() } else { s.scale(&c) };
        // divisions first: they fill the series up to the order, after which
        // each multiplication is a single in-place pass
        for (w, &k) in all.iter().filter(|(w, k)| w.q_exp > 0 && **k < 0) {
            for _ in 0..-k {
                s = s.div_one_minus(w)?;
            }
        }
        for (w, &k) in all.iter().filter(|(w, k)| w.q_exp > 0 && **k > 0) {
            for _ in 0..k {
                s = s.mul_one_minus(w)?;
            }
        }
        s.mul_monomial(&self.prefactor)
    }
}

fn bump<K: Ord>(map: &mut BTreeMap<K, i64>, key: K, k: i64) {
    let e = map.entry(key).or_insert(0);
    *e += k;
    if *e == 0 {
        map.retain(|_, v| *v != 0);
    }
}

/// `1/(1 − w)` through order `n`, in whichever regime the q-degree of `w` selects.
pub fn geom_factor_inverse(w: Monomial, n: i64) -> Result<Series> {
    let mut p = ProductForm::one();
    p.mul_factor(w, -1)?;
    p.expand(n)
}

/// `(arg; base)_∞` through order `n`.
pub fn poch_inf(arg: Monomial, base: Monomial, n: i64) -> Result<Series> {
    let mut p = ProductForm::one();
    p.mul_progression(arg, base, 1)?;
    p.expand(n)
}

/// `(arg; base)_k` through order `n`.
pub fn poch_fin(arg: Monomial, base: Monomial, k: u32, n: i64) -> Result<Series> {
    let mut p = ProductForm::one();
    p.mul_poch_fin(arg, base, k, 1)?;
    p.expand(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Unit;
    use proptest::prelude::*;

    fn ints(s: &Series, upto: i64) -> Vec<i64> {
        (0..=upto)
            .map(|e| {
                let c = s.coeff(e).as_scalar().expect("pure q");
                assert!(c.is_rational());
                c.re.to_string().parse().unwrap()
            })
            .collect()
    }

    /// (q;q)_∞ multiplied out factor by factor on plain integer vectors.
    fn euler_oracle(n: usize) -> Vec<i64> {
        let mut v = vec![0i64; n + 1];
        v[0] = 1;
        for i in 1..=n {
            for e in (i..=n).rev() {
                v[e] -= v[e - i];
            }
        }
        v
    }

    #[test]
    fn euler_product_matches_oracle() {
        let s = poch_inf(Monomial::q(1), Monomial::q(1), 30).unwrap();
        assert_eq!(ints(&s, 5), vec![1, -1, -1, 0, 0, 1]);
        assert_eq!(ints(&s, 30), euler_oracle(30));
    }

    #[test]
    fn formal_argument_constant_term() {
        let s = poch_inf(Monomial::z(), Monomial::q(1), 6).unwrap();
        assert_eq!(s.coeff(0), RatFunc::from_poly(LaurentPoly::from_ints(0, &[1, -1])));
    }

    #[test]
    fn negative_base() {
        let s = poch_inf(Monomial::q(2), Monomial::signed(true, 10, 0), 30).unwrap();
        let want = poch_fin(Monomial::q(2), Monomial::signed(true, 10, 0), 3, 30).unwrap();
        assert_eq!(s, want);
        assert_eq!(ints(&s, 14), {
            // (1 − q²)(1 + q¹²)
            let mut v = vec![0; 15];
            v[0] = 1;
            v[2] = -1;
            v[12] = 1;
            v[14] = -1;
            v
        });
    }

    #[test]
    fn finite_products() {
        assert_eq!(poch_fin(Monomial::q(1), Monomial::q(1), 0, 10).unwrap(), Series::one(10));
        let s = poch_fin(Monomial::q(1), Monomial::q(2), 2, 10).unwrap();
        assert_eq!(ints(&s, 5), vec![1, -1, 0, -1, 1, 0]);
        let s = poch_fin(Monomial::signed(true, 1, 0), Monomial::q(1), 3, 10).unwrap();
        assert_eq!(ints(&s, 6), vec![1, 1, 1, 2, 1, 1, 1]);
    }

    #[test]
    fn geometric_regimes() {
        let s = geom_factor_inverse(Monomial::new(Unit::ONE, 1, 1), 6).unwrap();
        assert_eq!(s.coeff(4), RatFunc::from_poly(LaurentPoly::z_pow(4)));
        let s = geom_factor_inverse(Monomial::z(), 6).unwrap();
        assert_eq!(s.coeff(0), RatFunc::inv_one_minus(Unit::ONE, 1).unwrap());
        assert!(s.coeff(1).is_zero());
        let s = geom_factor_inverse(Monomial::q(-1), 6).unwrap();
        assert_eq!(s.valuation(), Some(1));
        assert_eq!(ints(&s, 6), vec![0, -1, -1, -1, -1, -1, -1]);
        assert!(matches!(geom_factor_inverse(Monomial::ONE, 6), Err(Error::Pole(_))));
    }

    #[test]
    fn vanishing_factor_gives_zero() {
        let mut p = ProductForm::one();
        p.mul_theta(Monomial::ONE, Monomial::q(9), 1).unwrap();
        assert!(p.is_zero());
        assert!(p.expand(10).unwrap().is_zero_through_order());
        assert!(p.inverse().is_err());
    }

    #[test]
    fn cancellation_is_symbolic() {
        let mut p = ProductForm::one();
        p.mul_theta(Monomial::z(), Monomial::q(1), 1).unwrap();
        let inv = p.inverse().unwrap();
        p.mul(&inv);
        assert_eq!(p, ProductForm::one());
    }

    fn arb_mono() -> impl Strategy<Value = Monomial> {
        (any::<bool>(), -3i64..4, -2i64..3)
            .prop_filter("not one", |(s, a, b)| (*s, *a, *b) != (false, 0, 0))
            .prop_map(|(s, a, b)| Monomial::signed(s, a, b))
    }

    proptest! {
        #[test]
        fn geometric_inverse_round_trip(w in arb_mono()) {
            let g = geom_factor_inverse(w, 12).unwrap();
            let back = g.mul_one_minus(&w).unwrap();
            prop_assert!((&back - &Series::one(back.order())).is_zero_through_order());
        }

        #[test]
        fn pochhammer_reciprocal(a in arb_mono(), s in 1i64..4, neg in any::<bool>()) {
            let base = Monomial::signed(neg, s, 0);
            let mut w = a;
            let mut ok = true;
            for _ in 0..30 {
                ok &= !w.is_one();
                w = w * base;
            }
            prop_assume!(ok);
            let p = poch_inf(a, base, 12).unwrap();
            // reciprocal built factor by factor from geometric inverses
            let mut r = Series::one(40);
            let mut w = a;
            while w.q_exp <= 40 {
                r = &r * &geom_factor_inverse(w, 40).unwrap();
                w = w * base;
            }
            let prod = &p * &r;
            prop_assert!((&prod - &Series::one(prod.order())).is_zero_through_order());
        }
    }
}
