use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Unit;
use crate::qring::{Monomial, ProductForm, Series};

use super::theta::check_base;

/// The Eulerian (pure-q) mock theta series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EulerianName {
    /// `Σ q^{C(n+1,2)} / (q;q²)_{n+1}`
    #[serde(rename = "phi10")]
    Phi10,
    /// `Σ q^{C(n+2,2)} / (q;q²)_{n+1}`
    #[serde(rename = "psi10")]
    Psi10,
    /// `Σ (−1)^n q^{n²} / (−q;q)_{2n}`
    #[serde(rename = "X10")]
    BigX10,
    /// `Σ (−1)^n q^{(n+1)²} / (−q;q)_{2n+1}`
    #[serde(rename = "chi10")]
    Chi10,
    /// `Σ (−1)^n q^{n²} (q;q²)_n / (−q)_{2n}`
    #[serde(rename = "phi6")]
    Phi6,
    /// `Σ (−1)^n q^{(n+1)²} (q;q²)_n / (−q)_{2n+1}`
    #[serde(rename = "psi6")]
    Psi6,
    /// `Σ q^{n²} / (−q)_n`
    #[serde(rename = "f0")]
    F0,
    /// `Σ q^{n(n+1)} / (−q)_n`
    #[serde(rename = "f1")]
    F1,
    /// `Σ q^{n²} / (q^{n+1};q)_n`
    #[serde(rename = "F0_7th")]
    F0Seventh,
}

impl EulerianName {
    pub const ALL: [EulerianName; 9] = [
        Self::Phi10,
        Self::Psi10,
        Self::BigX10,
        Self::Chi10,
        Self::Phi6,
        Self::Psi6,
        Self::F0,
        Self::F1,
        Self::F0Seventh,
    ];

    /// The n-th summand as a product, in base q.
    pub fn summand(self, n: i64) -> Result<ProductForm> {
        let q = Monomial::q(1);
        let mq = Monomial::signed(true, 1, 0);
        let sign = |e: i64| Monomial::new(Unit::sign(e.rem_euclid(2) == 1), 0, 0);
        let n32 = n as u32;
        let mut p = ProductForm::one();
        match self {
            Self::Phi10 => {
                p.mul_monomial(q.pow((n + 1) * n / 2), 1).mul_poch_fin(q, q.pow(2), n32 + 1, -1)?;
            }
            Self::Psi10 => {
                p.mul_monomial(q.pow((n + 2) * (n + 1) / 2), 1).mul_poch_fin(q, q.pow(2), n32 + 1, -1)?;
            }
            Self::BigX10 => {
                p.mul_monomial(sign(n) * q.pow(n * n), 1).mul_poch_fin(mq, q, 2 * n32, -1)?;
            }
            Self::Chi10 => {
                p.mul_monomial(sign(n) * q.pow((n + 1) * (n + 1)), 1).mul_poch_fin(mq, q, 2 * n32 + 1, -1)?;
            }
            Self::Phi6 => {
                p.mul_monomial(sign(n) * q.pow(n * n), 1)
                    .mul_poch_fin(q, q.pow(2), n32, 1)?
                    .mul_poch_fin(mq, q, 2 * n32, -1)?;
            }
            Self::Psi6 => {
                p.mul_monomial(sign(n) * q.pow((n + 1) * (n + 1)), 1)
                    .mul_poch_fin(q, q.pow(2), n32, 1)?
                    .mul_poch_fin(mq, q, 2 * n32 + 1, -1)?;
            }
            Self::F0 => {
                p.mul_monomial(q.pow(n * n), 1).mul_poch_fin(mq, q, n32, -1)?;
            }
            Self::F1 => {
                p.mul_monomial(q.pow(n * (n + 1)), 1).mul_poch_fin(mq, q, n32, -1)?;
            }
            Self::F0Seventh => {
                p.mul_monomial(q.pow(n * n), 1).mul_poch_fin(q.pow(n + 1), q, n32, -1)?;
            }
        }
        Ok(p)
    }
}

/// The series in base `q` through `order`.
fn eulerian_base(name: EulerianName, order: i64) -> Result<Series> {
    let mut acc = Series::zero(order);
    for n in 0.. {
        let p = name.summand(n)?;
        // every summand's valuation grows at least like n²
        if p.valuation().unwrap_or(i64::MAX) > order {
            if n * n > order.max(0) + 1 {
                break;
            }
            continue;
        }
        acc = &acc + &p.expand(order)?;
    }
    Ok(acc)
}

/// `f(arg)` with `q ↦ ω^twist·q` applied to the result, through `order`.
///
/// `arg` is `u·q^s` with `s >= 1` and no formal part.
pub fn eulerian(name: EulerianName, twist: i64, arg: Monomial, order: i64) -> Result<Series> {
    check_base(&arg)?;
    let s = arg.q_exp;
    let inner = eulerian_base(name, order.div_euclid(s))?;
    let out = inner.substitute(arg.unit, s)?.truncate(order);
    if twist.rem_euclid(3) == 0 {
        Ok(out)
    } else {
        out.twist(twist)
    }
}

/// The universal mock theta function `g(x; base)` through `order`.
pub fn universal_g(x: Monomial, base: Monomial, order: i64) -> Result<Series> {
    check_base(&base)?;
    let inner = order + x.q_exp;
    let mut acc = Series::one(inner).scale(&crate::zfield::RatFunc::from_int(-1));
    let degenerate = |e: Error| match e {
        Error::Pole(p) => Error::Degenerate(format!("g denominator vanishes: {p}")),
        e => e,
    };
    let bx = base * x.inv();
    for n in 0.. {
        if base.q_exp * n * n > inner {
            break;
        }
        let mut p = ProductForm::one();
        p.mul_monomial(base.pow(n * n), 1);
        p.mul_poch_fin(x, base, n as u32 + 1, -1).map_err(degenerate)?;
        p.mul_poch_fin(bx, base, n as u32, -1).map_err(degenerate)?;
        acc = &acc + &p.expand(inner)?;
    }
    acc.mul_monomial(&x.inv())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::CycloRational;
    use crate::special::appell::{appell_m, AppellSpec};
    use crate::zfield::RatFunc;

    const N: usize = 24;

    // plain integer power series, independent of the exact engine
    fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut c = vec![0; N + 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate().take(N + 1 - i) {
                c[i + j] += x * y;
            }
        }
        c
    }
    fn inv_binomial(sign: i64, k: usize) -> Vec<i64> {
        // 1/(1 − sign·q^k)
        let mut c = vec![0; N + 1];
        let mut t = 1;
        let mut e = 0;
        while e <= N {
            c[e] = t;
            t *= sign;
            e += k;
        }
        c
    }
    fn binomial(sign: i64, k: usize) -> Vec<i64> {
        let mut c = vec![0; N + 1];
        c[0] = 1;
        if k <= N {
            c[k] -= sign;
        }
        c
    }
    fn mono(sign: i64, e: usize) -> Vec<i64> {
        let mut c = vec![0; N + 1];
        if e <= N {
            c[e] = sign;
        }
        c
    }
    fn oracle(name: EulerianName) -> Vec<i64> {
        let mut total = vec![0; N + 1];
        for n in 0..10usize {
            let sg = if n % 2 == 0 { 1 } else { -1 };
            let mut t = match name {
                EulerianName::Phi10 => mono(1, (n + 1) * n / 2),
                EulerianName::Psi10 => mono(1, (n + 2) * (n + 1) / 2),
                EulerianName::BigX10 | EulerianName::Phi6 => mono(sg, n * n),
                EulerianName::Chi10 | EulerianName::Psi6 => mono(sg, (n + 1) * (n + 1)),
                EulerianName::F0 | EulerianName::F0Seventh => mono(1, n * n),
                EulerianName::F1 => mono(1, n * (n + 1)),
            };
            let (qq2, mq) = match name {
                EulerianName::Phi10 | EulerianName::Psi10 => (-((n + 1) as i64), 0),
                EulerianName::BigX10 => (0, 2 * n),
                EulerianName::Chi10 => (0, 2 * n + 1),
                EulerianName::Phi6 => (n as i64, 2 * n),
                EulerianName::Psi6 => (n as i64, 2 * n + 1),
                EulerianName::F0 | EulerianName::F1 => (0, n),
                EulerianName::F0Seventh => (0, 0),
            };
            for i in 0..qq2.unsigned_abs() as usize {
                let f = if qq2 > 0 { binomial(1, 2 * i + 1) } else { inv_binomial(1, 2 * i + 1) };
                t = mul(&t, &f);
            }
            for i in 0..mq {
                t = mul(&t, &inv_binomial(-1, i + 1));
            }
            if name == EulerianName::F0Seventh {
                for i in 0..n {
                    t = mul(&t, &inv_binomial(1, n + 1 + i));
                }
            }
            for e in 0..=N {
                total[e] += t[e];
            }
        }
        total
    }

    fn ints(s: &Series) -> Vec<i64> {
        (0..=N as i64)
            .map(|e| {
                let c = s.coeff(e).as_scalar().unwrap();
                assert!(c.is_rational());
                c.re.to_string().parse().unwrap()
            })
            .collect()
    }

    #[test]
    fn all_match_integer_oracle() {
        for name in EulerianName::ALL {
            let s = eulerian(name, 0, Monomial::q(1), N as i64).unwrap();
            assert_eq!(ints(&s), oracle(name), "{name:?}");
        }
    }

    #[test]
    fn leading_terms() {
        let f0 = eulerian(EulerianName::F0, 0, Monomial::q(1), 10).unwrap();
        assert!(f0.coeff(0).is_one());
        let psi = eulerian(EulerianName::Psi10, 0, Monomial::q(1), 10).unwrap();
        assert_eq!(psi.valuation(), Some(1));
        // X10's n = 1 summand is −q/((1+q)(1+q²))
        let t = EulerianName::BigX10.summand(1).unwrap().expand(6).unwrap();
        assert_eq!(ints_upto(&t, 6), vec![0, -1, 1, 0, 0, -1, 1]);
    }

    fn ints_upto(s: &Series, n: i64) -> Vec<i64> {
        (0..=n).map(|e| s.coeff(e).as_scalar().unwrap().re.to_string().parse().unwrap()).collect()
    }

    #[test]
    fn argument_substitution_and_twist() {
        let base = eulerian(EulerianName::Phi10, 0, Monomial::q(1), 20).unwrap();
        let neg4 = eulerian(EulerianName::Phi10, 0, Monomial::signed(true, 4, 0), 20).unwrap();
        assert_eq!(neg4.order(), 20);
        assert_eq!(neg4.coeff(4), -base.coeff(1));
        assert_eq!(neg4.coeff(8), base.coeff(2));
        let tw = eulerian(EulerianName::Phi10, 1, Monomial::q(1), 20).unwrap();
        assert_eq!(tw.coeff(1).as_scalar(), Some(&base.coeff(1).as_scalar().unwrap() * &CycloRational::omega()));
    }

    #[test]
    fn sixth_order_appell_forms() {
        let phi = eulerian(EulerianName::Phi6, 0, Monomial::q(1), 20).unwrap();
        let m = appell_m(&AppellSpec::new(Monomial::q(1), Monomial::signed(true, 0, 0), Monomial::q(3)), 20).unwrap();
        assert_eq!(phi, m.scale(&RatFunc::from_int(2)));
        let psi = eulerian(EulerianName::Psi6, 0, Monomial::q(1), 20).unwrap();
        let m = appell_m(&AppellSpec::new(Monomial::ONE, Monomial::signed(true, 1, 0), Monomial::q(3)), 20).unwrap();
        assert_eq!(psi, m);
    }

    #[test]
    fn universal_g_formal_constant_term() {
        let g = universal_g(Monomial::z(), Monomial::q(1), 6).unwrap();
        assert_eq!(g.coeff(0), RatFunc::inv_one_minus(Unit::ONE, 1).unwrap());
    }

    #[test]
    fn universal_g_appell_decomposition() {
        // g(x;q) = −x⁻¹ m(q²x⁻³, x²; q³) − x⁻² m(q x⁻³, x²; q³) with x = q z
        let x = Monomial::new(Unit::ONE, 1, 1);
        let n = 8;
        let g = universal_g(x, Monomial::q(1), n).unwrap();
        let q3 = Monomial::q(3);
        let a = appell_m(&AppellSpec::new(Monomial::q(2) * x.pow(-3), x.pow(2), q3), n + 1).unwrap();
        let b = appell_m(&AppellSpec::new(Monomial::q(1) * x.pow(-3), x.pow(2), q3), n + 2).unwrap();
        let rhs = &a.mul_monomial(&x.inv().neg()).unwrap() + &b.mul_monomial(&x.pow(-2).neg()).unwrap();
        assert_eq!(g, rhs);
    }
}
