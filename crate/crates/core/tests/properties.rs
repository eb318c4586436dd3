//! Invariants of the verifier, checked on randomly chosen inputs.

use proptest::prelude::*;

use qsplit::catalog::{build_catalog, Engine, Engines, IdentityRecord};
use qsplit::exact::Unit;
use qsplit::qring::Monomial;
use qsplit::special::{d_n, theta_prod, theta_sum, ThetaSpec};
use qsplit::verifier::{mutate, verify_all, verify_exact, verify_numeric, Mutation, Settings, Status};

/// Records cheap enough to expand repeatedly in a debug build.
const LIGHT: [&str; 10] =
    ["JLAW-FLIP", "JLAW-MOD-2", "PRELIM-1", "PRELIM-3", "PROD-1", "QUINTUPLE-A", "SIXTH-APPELL-PHI", "TH8A-1", "WEIER", "ASD-COR-1"];

fn rec(id: &str) -> IdentityRecord {
    build_catalog().into_iter().find(|r| r.id == id).unwrap()
}

fn arb_arg() -> impl Strategy<Value = Monomial> {
    // Even unit indices keep the coefficients in Q(ω).
    (0i64..6, -3i64..=3, -3i64..=3).prop_map(|(u, q, z)| Monomial::new(Unit::new(2 * u), q, z))
}

fn arb_base() -> impl Strategy<Value = Monomial> {
    (prop::bool::ANY, 1i64..=4).prop_map(|(neg, s)| Monomial::signed(neg, s, 0))
}

fn arb_mutation() -> impl Strategy<Value = Mutation> {
    prop_oneof![
        (0usize..8).prop_map(|term| Mutation::SignFlip { term }),
        (0usize..8, prop::bool::ANY).prop_map(|(term, up)| Mutation::ExponentShift { term, delta: if up { 1 } else { -1 } }),
        (0usize..8).prop_map(|term| Mutation::ScalarDouble { term }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn theta_sum_equals_product(arg in arb_arg(), base in arb_base()) {
        let s = ThetaSpec::new(arg, base);
        let a = theta_sum(&s, 30).unwrap();
        match theta_prod(&s, 30) {
            Ok(b) => prop_assert!((&a - &b).is_zero_through_order()),
            // A product with a vanishing factor: only possible for pure-q arguments,
            // and then the sum must vanish too.
            Err(_) => prop_assert!(arg.z_exp == 0 && a.is_zero_through_order()),
        }
    }

    #[test]
    fn dn_is_invariant_under_z_to_qz(xq in 0i64..3, xz in 1i64..3, zz in 1i64..3, pq in 0i64..3, pz in 1i64..3) {
        let x = Monomial::new(Unit::ONE, xq, xz);
        let z = Monomial::new(Unit::ONE, 0, -zz);
        let zp = Monomial::new(Unit::ONE, pq, pz);
        // Skip the discrete set where x·z is a pure power of q.
        prop_assume!(xz != zz);
        let a = d_n(2, x, z, zp, Monomial::q(1), 12).unwrap();
        let b = d_n(2, x, Monomial::q(1) * z, zp, Monomial::q(1), 12).unwrap();
        prop_assert!((&a - &b).is_zero_through_order());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn exact_pass_survives_lower_orders(i in 0usize..LIGHT.len(), lo in 5i64..10, extra in 1i64..8) {
        let r = rec(LIGHT[i]);
        let hi = lo + extra;
        prop_assert_eq!(verify_exact(&r, hi).status, Status::Pass);
        prop_assert_eq!(verify_exact(&r, lo).status, Status::Pass);
    }

    #[test]
    fn exact_pass_implies_numeric_pass(i in 0usize..LIGHT.len(), seed in any::<u64>()) {
        let r = rec(LIGHT[i]);
        prop_assume!(r.engines == Engines::Both);
        if verify_exact(&r, 12).status == Status::Pass {
            let o = verify_numeric(&r, 3, 1e-8, seed);
            prop_assert_eq!(o.status, Status::Pass, "{:?}", o.details);
        }
    }

    #[test]
    fn mutants_fail_numerically(i in 0usize..LIGHT.len(), m in arb_mutation(), seed in any::<u64>()) {
        let m = mutate(&rec(LIGHT[i]), m);
        prop_assert_eq!(verify_numeric(&m, 3, 1e-8, seed).status, Status::Fail);
    }

    #[test]
    fn outcomes_do_not_depend_on_jobs(seed in any::<u64>(), jobs in 2usize..6) {
        let cat = build_catalog();
        let s = Settings { seed, ..Settings::default() };
        let a = verify_all(&cat, &[Engine::Numeric], &s, 1);
        let b = verify_all(&cat, &[Engine::Numeric], &s, jobs);
        prop_assert_eq!(a, b);
    }
}
