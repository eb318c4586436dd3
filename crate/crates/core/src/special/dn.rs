use crate::error::{Error, Result};
use crate::qring::{Monomial, ProductForm, Series};

use super::appell::{appell_m, AppellSpec};
use super::theta::check_base;

fn binom2(k: i64) -> i64 {
    k * (k - 1) / 2
}

fn minus(m: Monomial) -> Monomial {
    m.neg()
}

/// The Appell functions making up `D_n(x, z, z'; base)`, each with its
/// monomial coefficient.
pub fn dn_terms(n: i64, x: Monomial, z: Monomial, zp: Monomial, base: Monomial) -> Result<Vec<(Monomial, AppellSpec)>> {
    if n < 1 {
        return Err(Error::Unsupported(format!("D_n with n = {n}")));
    }
    check_base(&base)?;
    let mx = minus(x);
    let big = base.pow(n * n);
    let mut out = vec![(Monomial::ONE, AppellSpec::new(x, z, base))];
    for r in 0..n {
        let coeff = minus(base.pow(-binom2(r + 1)) * mx.pow(r));
        let arg = minus(base.pow(binom2(n) - n * r) * mx.pow(n));
        out.push((coeff, AppellSpec::new(arg, zp, big)));
    }
    Ok(out)
}

/// `D_n(x, z, z'; base)` through order `order`.
pub fn d_n(n: i64, x: Monomial, z: Monomial, zp: Monomial, base: Monomial, order: i64) -> Result<Series> {
    let mut acc: Option<Series> = None;
    for (c, spec) in dn_terms(n, x, z, zp, base)? {
        let s = appell_m(&spec, order - c.q_exp)?.mul_monomial(&c)?;
        acc = Some(match acc {
            None => s,
            Some(a) => &a + &s,
        });
    }
    Ok(acc.expect("at least one term"))
}

/// The theta-quotient summands of the closed form for `D_n`.
pub fn dn_closed_terms(n: i64, x: Monomial, z: Monomial, zp: Monomial, base: Monomial) -> Result<Vec<ProductForm>> {
    if n < 1 {
        return Err(Error::Unsupported(format!("D_n with n = {n}")));
    }
    check_base(&base)?;
    let b = base;
    let bn = b.pow(n);
    let bnn = b.pow(n * n);
    let mx = minus(x);
    let mut out = Vec::new();
    for r in 0..n {
        let mut p = ProductForm::one();
        p.mul_monomial(zp, 1);
        p.mul_theta(bn, b.pow(3 * n), 3)?;
        p.mul_monomial(b.pow(binom2(r)) * minus(x * z).pow(r), 1);
        p.mul_theta(minus(b.pow(binom2(n) + r) * mx.pow(n) * z * zp), bn, 1)?;
        p.mul_theta(b.pow(n * r) * z.pow(n) * zp.inv(), bnn, 1)?;
        let mut d = ProductForm::one();
        d.mul_theta(x * z, b, 1)?;
        d.mul_theta(zp, bnn, 1)?;
        d.mul_theta(minus(b.pow(binom2(n)) * mx.pow(n) * zp), bn, 1)?;
        d.mul_theta(b.pow(r) * z, bn, 1)?;
        let d = d.inverse().map_err(|_| Error::Degenerate("theta denominator vanishes".into()))?;
        p.mul(&d);
        out.push(p);
    }
    Ok(out)
}

/// The closed form for `D_n` as a sum of theta quotients, through `order`.
pub fn dn_closed_form(n: i64, x: Monomial, z: Monomial, zp: Monomial, base: Monomial, order: i64) -> Result<Series> {
    let mut acc = Series::zero(order);
    for p in dn_closed_terms(n, x, z, zp, base)? {
        acc = &acc + &p.expand(order)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Unit;

    fn q(a: i64) -> Monomial {
        Monomial::q(a)
    }
    fn zq(a: i64, b: i64) -> Monomial {
        Monomial::new(Unit::ONE, a, b)
    }

    #[test]
    fn generic_matches_displayed_two_and_four() {
        let (x, z, zp) = (zq(1, 2), zq(0, -1), zq(1, 3));
        let t2 = dn_terms(2, x, z, zp, q(1)).unwrap();
        // m(x,z) − m(−q x², z'; q⁴) + q⁻¹ x m(−q⁻¹ x², z'; q⁴)
        assert_eq!(t2[1], (Monomial::ONE.neg(), AppellSpec::new(q(1).neg() * x.pow(2), zp, q(4))));
        assert_eq!(t2[2], (q(-1) * x, AppellSpec::new(q(-1).neg() * x.pow(2), zp, q(4))));
        let t4 = dn_terms(4, x, z, zp, q(1)).unwrap();
        // last term: −q^{−6}(−x)³ m(−q^{−6}x⁴, z'; q¹⁶) = +q⁻⁶x³ m(…)
        assert_eq!(t4[4], (q(-6) * x.pow(3), AppellSpec::new(q(-6).neg() * x.pow(4), zp, q(16))));
        assert_eq!(t4[1].1.x, q(6).neg() * x.pow(4));
    }

    #[test]
    fn closed_form_agrees_n2() {
        let (x, z, zp) = (zq(1, 2), zq(0, -1), zq(1, 1));
        let a = d_n(2, x, z, zp, q(1), 8).unwrap();
        let b = dn_closed_form(2, x, z, zp, q(1), 8).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn closed_form_agrees_n3() {
        let (x, z, zp) = (zq(1, -2), zq(0, 1), zq(2, 1));
        let a = d_n(3, x, z, zp, q(1), 6).unwrap();
        let b = dn_closed_form(3, x, z, zp, q(1), 6).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn functional_equation_in_z() {
        let (x, z, zp) = (zq(1, 1), zq(0, 2), zq(1, 0));
        let a = d_n(2, x, z, zp, q(1), 8).unwrap();
        let b = d_n(2, x, q(1) * z, zp, q(1), 8).unwrap();
        assert_eq!(a, b);
    }
}
