//! Exact expansion of catalog expressions as truncated series in `q`.

use crate::catalog::{Env, Expr, Primitive, Term};
use crate::error::{Error, Result};
use crate::qring::{ProductForm, Series};
use crate::special::{appell_m, d_n, eulerian, dn_closed_form, universal_g, AppellSpec};

/// Expands one primitive through `order`. Products are handled by the caller.
fn expand_primitive(p: &Primitive, env: &Env, order: i64) -> Result<Series> {
    let b = |m: &crate::catalog::SymMono| m.bind(env);
    match p {
        Primitive::Theta { arg, base } => {
            let mut f = ProductForm::one();
            f.mul_theta(b(arg)?, b(base)?, 1)?;
            f.expand(order)
        }
        Primitive::PochInf { arg, base } => {
            let mut f = ProductForm::one();
            f.mul_progression(b(arg)?, b(base)?, 1)?;
            f.expand(order)
        }
        Primitive::AppellM { x, z, base } => appell_m(&AppellSpec::new(b(x)?, b(z)?, b(base)?), order),
        Primitive::Dn { n, x, z, zp, base } => d_n(*n, b(x)?, b(z)?, b(zp)?, b(base)?, order),
        Primitive::DnClosed { n, x, z, zp, base } => dn_closed_form(*n, b(x)?, b(z)?, b(zp)?, b(base)?, order),
        Primitive::Eulerian { name, twist, arg } => eulerian(*name, *twist, b(arg)?, order),
        Primitive::UniversalG { x, base } => universal_g(b(x)?, b(base)?, order),
    }
}

/// `s^e` valid through `target`, given the valuation `v` of `s`.
fn power_to(p: &Primitive, e: i64, v: i64, env: &Env, target: i64) -> Result<Series> {
    let need = if e > 0 { target - (e - 1) * v } else { target + (1 - e) * v };
    let s = expand_primitive(p, env, need)?;
    let base = if e > 0 { s } else { s.invert()? };
    let mut out = base.clone();
    for _ in 1..e.abs() {
        out = &out * &base;
    }
    Ok(out)
}

/// Collects the product-shaped part of a term into a single [`ProductForm`].
fn product_part(t: &Term, env: &Env) -> Result<ProductForm> {
    let mut f = ProductForm::one();
    f.scale(&t.scalar);
    f.mul_monomial(t.mono.bind(env)?, 1);
    for fac in &t.factors {
        match &fac.prim {
            Primitive::Theta { arg, base } => {
                f.mul_theta(arg.bind(env)?, base.bind(env)?, fac.exp)?;
            }
            Primitive::PochInf { arg, base } => {
                f.mul_progression(arg.bind(env)?, base.bind(env)?, fac.exp)?;
            }
            _ => {}
        }
    }
    Ok(f)
}

/// One term through `order`.
fn expand_term(t: &Term, env: &Env, order: i64) -> Result<Series> {
    let p = product_part(t, env)?;
    let Some(vp) = p.valuation() else {
        return Ok(Series::zero(order));
    };
    let others: Vec<_> = t.factors.iter().filter(|f| !f.prim.is_product()).collect();
    if others.is_empty() {
        return p.expand(order);
    }
    // Each factor's order depends on the valuations of the others, which are
    // only known after a first expansion; a few passes settle them.
    let mut vals = vec![0i64; others.len()];
    let mut series = Vec::new();
    for _ in 0..4 {
        series.clear();
        let total: i64 = vals.iter().sum();
        for (i, f) in others.iter().enumerate() {
            let target = order - vp - (total - vals[i]);
            let v = vals[i] / f.exp;
            series.push(power_to(&f.prim, f.exp, v, env, target)?);
        }
        let fresh: Vec<i64> = series.iter().map(|s| s.valuation_lower_bound()).collect();
        if fresh == vals {
            break;
        }
        vals = fresh;
    }
    let mut acc = series[0].clone();
    for s in &series[1..] {
        acc = &acc * s;
    }
    p.apply(&acc)
}

/// Expands `expr` under `env` through `order`.
pub fn expand_expr(expr: &Expr, env: &Env, order: i64) -> Result<Series> {
    let mut acc = Series::zero(order);
    for t in &expr.terms {
        acc = &acc + &expand_term(t, env, order)?;
    }
    if acc.order() < order {
        return Err(Error::Precision { needed: order, got: acc.order() });
    }
    Ok(acc.truncate(order))
}

/// Whether an error means the specialization itself is degenerate.
pub fn is_degenerate(e: &Error) -> bool {
    matches!(e, Error::Degenerate(_) | Error::Pole(_) | Error::NonUnit(_) | Error::DivisionByZero)
}

/// Checks that every denominator is a unit under `env`.
pub fn degeneracy_check(expr: &Expr, env: &Env) -> std::result::Result<(), String> {
    match expand_expr(expr, env, 4) {
        Err(e) if is_degenerate(&e) => Err(e.to_string()),
        _ => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::dsl::*;
    use crate::catalog::SymMono;
    use crate::qring::Monomial;

    fn formal(var: &str) -> Env {
        Env::new([(var.to_string(), Monomial::z())].into(), 1)
    }

    #[test]
    fn flip_law_is_zero() {
        let e = eq(th(v("z"), q(1)), th(q(1) / v("z"), q(1)));
        assert!(expand_expr(&e, &formal("z"), 30).unwrap().is_zero_through_order());
    }

    #[test]
    fn theta_pole_is_degenerate() {
        let e: Expr = (lit(1) / th(v("x") * v("z"), q(1))).into();
        let mut env = formal("z");
        env.bindings.insert("x".into(), Monomial::new(crate::exact::Unit::ONE, 0, -1));
        assert!(degeneracy_check(&e, &env).is_err());
        env.bindings.insert("x".into(), Monomial::new(crate::exact::Unit::ONE, 1, 2));
        assert!(degeneracy_check(&e, &env).is_ok());
    }

    #[test]
    fn inverse_of_appell_factor() {
        // φ6(q) / m(q, −1; q³) = 2
        let e = eq(eul(Eul::Phi6, 0, q(1)) / appell(q(1), -SymMono::one(), q(3)), lit(2));
        assert!(expand_expr(&e, &Env::default(), 25).unwrap().is_zero_through_order());
    }

    #[test]
    fn monomial_times_non_product_keeps_order() {
        let e: Expr = (mono(q(-2)) * g(q(1), q(7))).into();
        let s = expand_expr(&e, &Env::default(), 20).unwrap();
        assert_eq!(s.order(), 20);
        let direct = universal_g(Monomial::q(1), Monomial::q(7), 22).unwrap().mul_monomial(&Monomial::q(-2)).unwrap();
        assert_eq!(s, direct);
    }
}
