use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Unit;
use crate::qring::{Monomial, ProductForm, Series};

/// `Θ(arg; base)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ThetaSpec {
    pub arg: Monomial,
    pub base: Monomial,
}

impl ThetaSpec {
    pub fn new(arg: Monomial, base: Monomial) -> Self {
        Self { arg, base }
    }

    /// The product form `(arg)_∞ (base/arg)_∞ (base)_∞`.
    pub fn product_form(&self) -> Result<ProductForm> {
        check_base(&self.base)?;
        let mut p = ProductForm::one();
        p.mul_theta(self.arg, self.base, 1)?;
        Ok(p)
    }
}

/// Rejects bases that are not `u·q^s` with `s >= 1`.
pub fn check_base(base: &Monomial) -> Result<()> {
    if base.q_exp < 1 || base.z_exp != 0 {
        return Err(Error::Unbounded(format!("base {base} must be a positive power of q")));
    }
    Ok(())
}

/// Theta function from the triple product, valid through `n`.
pub fn theta_prod(spec: &ThetaSpec, n: i64) -> Result<Series> {
    spec.product_form()?.expand(n)
}

/// Theta function from the bilateral sum `Σ (−1)^k base^{C(k,2)} arg^k`.
pub fn theta_sum(spec: &ThetaSpec, n: i64) -> Result<Series> {
    check_base(&spec.base)?;
    let (x, b) = (spec.arg, spec.base);
    let mut out = Series::zero(n);
    let term = |k: i64| -> Monomial {
        let c2 = k * (k - 1) / 2;
        Monomial::new(Unit::sign(k.rem_euclid(2) == 1), 0, 0) * b.pow(c2) * x.pow(k)
    };
    for dir in [1i64, -1] {
        let mut k = if dir == 1 { 0 } else { -1 };
        loop {
            let t = term(k);
            if t.q_exp <= n {
                out = &out + &Series::monomial(&t, n)?;
            } else if term(k + dir).q_exp >= t.q_exp {
                break;
            }
            k += dir;
        }
    }
    Ok(out)
}

/// The three shorthand families built on `Θ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ThetaAbbrev {
    /// `Θ(q^a; q^m)`
    Plain,
    /// `Θ(−q^a; q^m)`
    Bar,
    /// `Θ(q^m; q^{3m}) = (q^m; q^m)_∞`; `a` is ignored.
    Eta,
}

impl ThetaAbbrev {
    pub fn spec(self, a: i64, m: i64) -> ThetaSpec {
        match self {
            ThetaAbbrev::Plain => ThetaSpec::new(Monomial::q(a), Monomial::q(m)),
            ThetaAbbrev::Bar => ThetaSpec::new(Monomial::signed(true, a, 0), Monomial::q(m)),
            ThetaAbbrev::Eta => ThetaSpec::new(Monomial::q(m), Monomial::q(3 * m)),
        }
    }
}

pub fn theta_abbrev(kind: ThetaAbbrev, a: i64, m: i64, n: i64) -> Result<Series> {
    if m < 1 {
        return Err(Error::Unbounded(format!("modulus {m}")));
    }
    theta_prod(&kind.spec(a, m), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qring::poch_inf;
    use crate::zfield::{LaurentPoly, RatFunc};

    const N: i64 = 30;

    fn th(a: i64, m: i64) -> ProductForm {
        ThetaAbbrev::Plain.spec(a, m).product_form().unwrap()
    }
    fn thb(a: i64, m: i64) -> ProductForm {
        ThetaAbbrev::Bar.spec(a, m).product_form().unwrap()
    }
    fn eta(m: i64) -> ProductForm {
        ThetaAbbrev::Eta.spec(0, m).product_form().unwrap()
    }
    fn quotient(num: &[&ProductForm], den: &[&ProductForm]) -> Series {
        let mut p = ProductForm::one();
        for f in num {
            p.mul(f);
        }
        for f in den {
            p.mul(&f.inverse().unwrap());
        }
        p.expand(N).unwrap()
    }

    #[test]
    fn eta_is_euler_product() {
        for m in 1..4 {
            let a = theta_abbrev(ThetaAbbrev::Eta, 0, m, N).unwrap();
            let b = poch_inf(Monomial::q(m), Monomial::q(m), N).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn vanishing_and_symmetric_arguments() {
        let s = theta_prod(&ThetaSpec::new(Monomial::ONE, Monomial::q(9)), N).unwrap();
        assert!(s.is_zero_through_order());
        assert!(theta_sum(&ThetaSpec::new(Monomial::ONE, Monomial::q(1)), N).unwrap().is_zero_through_order());
        let a = theta_prod(&ThetaSpec::new(Monomial::q(2), Monomial::q(3)), N).unwrap();
        let b = theta_prod(&ThetaSpec::new(Monomial::q(1), Monomial::q(3)), N).unwrap();
        let c = poch_inf(Monomial::q(1), Monomial::q(1), N).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn formal_sum_oracle() {
        // 1 − z − q z⁻¹ + q z² + q³ z⁻² − q³ z³ + O(q⁶)
        let s = theta_sum(&ThetaSpec::new(Monomial::z(), Monomial::q(1)), 5).unwrap();
        let lp = |min, c: &[i64]| RatFunc::from_poly(LaurentPoly::from_ints(min, c));
        assert_eq!(s.coeff(0), lp(0, &[1, -1]));
        assert_eq!(s.coeff(1), lp(-1, &[-1, 0, 0, 1]));
        assert!(s.coeff(2).is_zero());
        assert_eq!(s.coeff(3), lp(-2, &[1, 0, 0, 0, 0, -1]));
        let p = theta_prod(&ThetaSpec::new(Monomial::z(), Monomial::q(1)), 5).unwrap();
        assert_eq!(s, p);
    }

    #[test]
    fn leading_coefficient_of_shifted_argument() {
        let s = theta_prod(&ThetaSpec::new(Monomial::signed(true, 1, 0), Monomial::q(3)), N).unwrap();
        assert!(s.coeff(0).is_one());
    }

    #[test]
    fn shorthand_product_identities() {
        assert_eq!(quotient(&[&thb(1, 2)], &[]), quotient(&[&eta(2), &eta(2), &eta(2), &eta(2), &eta(2)], &[&eta(1), &eta(1), &eta(4), &eta(4)]));
        assert_eq!(quotient(&[&th(1, 2)], &[]), quotient(&[&eta(1), &eta(1)], &[&eta(2)]));
        let two = thb(1, 4).expand(N).unwrap().scale(&RatFunc::from_int(2));
        assert_eq!(thb(0, 1).expand(N).unwrap(), two);
    }

    #[test]
    fn sum_matches_product_on_suite() {
        let specs = [
            (Monomial::z(), Monomial::q(1)),
            (Monomial::new(Unit::ONE, 1, 2), Monomial::q(2)),
            (Monomial::new(Unit::MINUS_ONE, -1, 1), Monomial::q(3)),
            (Monomial::new(Unit::ONE, 0, -3), Monomial::q(4)),
            (Monomial::new(Unit::MINUS_ONE, 2, 0), Monomial::signed(true, 10, 0)),
            (Monomial::new(Unit::MINUS_ONE, 6, 0), Monomial::signed(true, 10, 0)),
            (Monomial::q(1), Monomial::q(2)),
            (Monomial::new(Unit::OMEGA, 1, 0), Monomial::q(1)),
            (Monomial::new(Unit::OMEGA_SQ, 0, 1), Monomial::q(2)),
            (Monomial::new(Unit::ONE, 5, -1), Monomial::q(1)),
            (Monomial::new(Unit::ONE, -4, 3), Monomial::q(3)),
            (Monomial::signed(true, 0, 0), Monomial::q(1)),
            (Monomial::q(3), Monomial::q(15)),
            (Monomial::q(18), Monomial::q(30)),
            (Monomial::signed(true, 3, 0), Monomial::q(12)),
            (Monomial::new(Unit::ONE, 3, 9), Monomial::q(9)),
            (Monomial::new(Unit::ONE, 1, -2), Monomial::q(4)),
            (Monomial::new(Unit::MINUS_ONE, 0, 2), Monomial::signed(true, 1, 0)),
            (Monomial::new(Unit::ONE, 2, 1), Monomial::q(5)),
            (Monomial::new(Unit::ONE, -7, 0), Monomial::q(2)),
        ];
        for (arg, base) in specs {
            let spec = ThetaSpec::new(arg, base);
            let a = theta_prod(&spec, 16).unwrap();
            let b = theta_sum(&spec, 16).unwrap();
            assert_eq!(a.order(), 16);
            assert_eq!(a, b, "Θ({arg}; {base})");
        }
    }
}
