use crate::exact::{cyclo_inv, CycloRational};
use crate::qring::Monomial;
use crate::special::EulerianName;

use super::dsl::*;
use super::expr::{Expr, SymMono};
use super::record::{Engines, Field, FreeVar, IdentityRecord, Provenance, Role, SubIdentity, SuiteEntry};

/// Printed by `list`: a family whose defining series are outside the catalog.
pub const SKIPPED_UNDEFINED: &str =
    "SKIPPED-UNDEFINED sixth-order rho/sigma/lambda/mu family: the defining series are not given, so the three relations are not encoded";

/// Family names in order of first appearance.
pub fn families() -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for r in build_catalog() {
        if !out.contains(&r.family) {
            out.push(r.family);
        }
    }
    out
}

fn x() -> SymMono {
    v("x")
}
fn y() -> SymMono {
    v("y")
}
fn z() -> SymMono {
    v("z")
}
fn u() -> SymMono {
    v("u")
}
fn zp() -> SymMono {
    v("zp")
}
fn one() -> SymMono {
    SymMono::one()
}
fn m1() -> SymMono {
    -SymMono::one()
}

/// `unit · q^a · z^b` for suite bindings.
fn mz(neg: bool, a: i64, b: i64) -> Monomial {
    Monomial::signed(neg, a, b)
}

fn entry(pairs: &[(&str, Monomial)]) -> SuiteEntry {
    SuiteEntry { bindings: pairs.iter().map(|(k, m)| (k.to_string(), *m)).collect(), degenerate: None }
}

struct Builder {
    rec: IdentityRecord,
}

fn record(id: &str, family: &str, section: &str) -> Builder {
    Builder {
        rec: IdentityRecord {
            id: id.into(),
            family: family.into(),
            expr: Vec::new(),
            free_vars: Vec::new(),
            spec_suite: Vec::new(),
            field: Field::Q,
            engines: Engines::Both,
            scale: 1,
            provenance: Provenance { section: section.into(), quote: String::new() },
            notes: Vec::new(),
        },
    }
}

impl Builder {
    fn sub(mut self, label: &str, expr: Expr) -> Self {
        self.rec.expr.push(SubIdentity { label: label.into(), expr, engines: None, rational: Vec::new() });
        self
    }

    fn sub_rational(mut self, label: &str, expr: Expr, rational: Vec<Expr>) -> Self {
        self.rec.expr.push(SubIdentity { label: label.into(), expr, engines: None, rational });
        self
    }

    fn formal(mut self, name: &str) -> Self {
        self.rec.free_vars.push(FreeVar { name: name.into(), role: Role::Formal });
        self
    }

    fn spec(mut self, name: &str) -> Self {
        self.rec.free_vars.push(FreeVar { name: name.into(), role: Role::Specialize });
        self
    }

    fn suite(mut self, entries: Vec<SuiteEntry>) -> Self {
        self.rec.spec_suite = entries;
        self
    }

    /// One variable bound to each of the given monomials in turn.
    fn suite1(self, name: &str, ms: &[Monomial]) -> Self {
        self.suite(ms.iter().map(|m| entry(&[(name, *m)])).collect())
    }

    fn omega_field(mut self) -> Self {
        self.rec.field = Field::QOmega;
        self
    }

    fn engines(mut self, e: Engines) -> Self {
        self.rec.engines = e;
        self
    }

    fn scale(mut self, s: i64) -> Self {
        self.rec.scale = s;
        self
    }

    fn note(mut self, n: &str) -> Self {
        self.rec.notes.push(n.into());
        self
    }

    fn build(mut self) -> IdentityRecord {
        if self.rec.spec_suite.is_empty() {
            self.rec.spec_suite.push(SuiteEntry::default());
        }
        let parts: Vec<String> = self.rec.expr.iter().map(|s| format!("{}: {} = 0", s.label, s.expr)).collect();
        self.rec.provenance.quote = parts.join("; ");
        self.rec
    }
}

const INTRO: &str = "introduction: mock theta function identities";
const APPELL_INTRO: &str = "introduction: Appell function forms and known splittings";
const CASE2: &str = "single-quotient specializations, n = 2";
const CASE3: &str = "single-quotient specializations, n = 3";
const CASE4: &str = "single-quotient specializations, n = 4";
const PRELIM: &str = "preliminaries: theta function facts";
const EXTRA: &str = "additional theta function identities";

/// Every identity in the catalog, sorted by id.
pub fn build_catalog() -> Vec<IdentityRecord> {
    let mut out = Vec::new();
    out.extend(tenth());
    out.extend(mock_conjectures());
    out.extend(sixth());
    out.extend(universal());
    out.extend(known_splittings());
    out.extend(splitting_theorems());
    out.extend(case_two());
    out.extend(case_three());
    out.extend(case_four());
    out.extend(prelim_quotients());
    out.extend(theta_laws());
    out.extend(products());
    out.extend(weierstrass());
    out.extend(dn_functional());
    out.extend(extra_theta());
    out.sort_by_key(|r| id_key(&r.id));
    out
}

/// Sort key for ids: text runs compare as text, digit runs as numbers, so
/// `N3-2` sorts before `N3-10`.
pub fn id_key(id: &str) -> Vec<(String, u64)> {
    let mut out = Vec::new();
    let mut text = String::new();
    let mut chars = id.chars().peekable();
    while let Some(c) = chars.next() {
        if c.is_ascii_digit() {
            let mut n = c.to_digit(10).unwrap_or(0) as u64;
            while let Some(d) = chars.peek().and_then(|d| d.to_digit(10)) {
                n = n * 10 + d as u64;
                chars.next();
            }
            out.push((std::mem::take(&mut text), n));
        } else {
            text.push(c);
        }
    }
    out.push((text, 0));
    out
}

fn tenth() -> Vec<IdentityRecord> {
    use EulerianName::*;
    let c = || cyc(cyclo_inv(&(CycloRational::omega() - CycloRational::omega_sq())).expect("ω − ω² is nonzero"));
    let q1 = || q(1);
    let tw = |n: EulerianName, t: i64| eul(n, t, q(1));
    let psi_comb = (tw(Psi10, 1) - tw(Psi10, 2)) * c();
    let phi_comb = (omega() * tw(Phi10, 1) - omega_sq() * tw(Phi10, 2)) * c();
    let chi_comb = (omega() * tw(Chi10, 1) - omega_sq() * tw(Chi10, 2)) * c();
    let xx_comb = (tw(BigX10, 1) - tw(BigX10, 2)) * c();
    let rec = |id: &str| record(id, "TENTH", INTRO).omega_field();
    vec![
        rec("TENTH-1")
            .sub_rational(
                "phi10",
                eq(mono(q(2)) * eul(Phi10, 0, q(9)) - psi_comb.clone(), -mono(q1()) * thq(1, 2) / thq(3, 6) * thq(3, 15) * eta(6) / eta(3)),
                vec![psi_comb],
            )
            .build(),
        rec("TENTH-2")
            .sub_rational(
                "psi10",
                eq(mono(q(-2)) * eul(Psi10, 0, q(9)) + phi_comb.clone(), thq(1, 2) / thq(3, 6) * thq(6, 15) * eta(6) / eta(3)),
                vec![phi_comb],
            )
            .build(),
        rec("TENTH-3")
            .sub_rational(
                "X10",
                eq(eul(BigX10, 0, q(9)) - chi_comb.clone(), thb(1, 4) / thb(3, 12) * thq(18, 30) * eta(3) / eta(6)),
                vec![chi_comb],
            )
            .build(),
        rec("TENTH-4")
            .sub_rational(
                "chi10",
                eq(eul(Chi10, 0, q(9)) + xx_comb.clone() * mono(q(2)), -mono(q(3)) * thb(1, 4) / thb(3, 12) * thq(6, 30) * eta(3) / eta(6)),
                vec![xx_comb],
            )
            .build(),
        record("TENTH-5", "TENTH", INTRO)
            .sub(
                "phi10",
                eq(
                    eul(Phi10, 0, q1()) - mono(q(-1)) * eul(Psi10, 0, -q(4)) + mono(q(-2)) * eul(Chi10, 0, q(8)),
                    thb(1, 2) * th(-q(2), -q(10)) / thq(2, 8),
                ),
            )
            .build(),
        record("TENTH-6", "TENTH", INTRO)
            .sub(
                "psi10",
                eq(eul(Psi10, 0, q1()) + mono(q1()) * eul(Phi10, 0, -q(4)) + eul(BigX10, 0, q(8)), thb(1, 2) * th(-q(6), -q(10)) / thq(2, 8)),
            )
            .build(),
    ]
}

fn mock_conjectures() -> Vec<IdentityRecord> {
    use EulerianName::*;
    vec![
        record("MTC-F0", "MTC", INTRO)
            .sub("f0", eq(eul(F0, 0, q(1)), thq(5, 10) * thq(2, 5) / eta(1) - lit(2) * mono(q(2)) * g(q(2), q(10))))
            .build(),
        record("MTC-F1", "MTC", INTRO)
            .sub("f1", eq(eul(F1, 0, q(1)), thq(5, 10) * thq(1, 5) / eta(1) - lit(2) * mono(q(3)) * g(q(4), q(10))))
            .note("The printed denominator J_1 is read as the shorthand (q;q)_∞ used in the companion identity.")
            .build(),
        record("MTC7-F0", "MTC", INTRO)
            .sub("F0", eq(eul(F0Seventh, 0, q(1)), lit(2) + lit(2) * mono(q(1)) * g(q(1), q(7)) - thq(3, 7).pow(2) / eta(1)))
            .build(),
    ]
}

fn sixth() -> Vec<IdentityRecord> {
    use EulerianName::*;
    vec![
        record("SIXTH-RLN", "SIXTH", INTRO)
            .sub(
                "phi6-psi6",
                eq(
                    eul(Phi6, 0, q(9)) - eul(Psi6, 0, q(1)) - mono(q(-3)) * eul(Psi6, 0, q(9)),
                    thb(3, 12) * eta(6).pow(2) / (thb(1, 4) * thb(9, 36)),
                ),
            )
            .build(),
        record("SIXTH-APPELL-PHI", "SIXTH", APPELL_INTRO)
            .sub("phi6", eq(eul(Phi6, 0, q(1)), lit(2) * appell(q(1), m1(), q(3))))
            .build(),
        record("SIXTH-APPELL-PSI", "SIXTH", APPELL_INTRO)
            .sub("psi6", eq(eul(Psi6, 0, q(1)), appell(one(), -q(1), q(3))))
            .build(),
    ]
}

fn universal() -> Vec<IdentityRecord> {
    let g_suite = || vec![entry(&[("x", mz(false, 1, 1))]), entry(&[("x", mz(false, 0, 1))]), entry(&[("x", mz(false, 3, 2))])];
    vec![
        record("G-APPELL", "G", APPELL_INTRO)
            .sub(
                "g",
                eq(
                    g(x(), q(1)),
                    -mono(x().inv()) * appell(q(2) * x().pow(-3), x().pow(2), q(3))
                        - mono(x().pow(-2)) * appell(q(1) * x().pow(-3), x().pow(2), q(3)),
                ),
            )
            .formal("x")
            .suite(vec![SuiteEntry::default(), entry(&[("x", mz(false, 1, 1))]), entry(&[("x", mz(true, 0, 2))])])
            .build(),
        record("G-RLN-1", "G", APPELL_INTRO)
            .sub(
                "g",
                eq(
                    g(x(), q(1)),
                    -mono(x().inv()) + mono(q(1) * x().pow(-3)) * g(-q(1) * x().pow(-2), q(4)) - mono(q(1)) * g(-q(1) * x().pow(2), q(4))
                        + eta(2).pow(5) / (mono(x()) * eta(4).pow(2) * th(x(), q(1)) * th(-q(1) * x().pow(2), q(2))),
                ),
            )
            .formal("x")
            .scale(2)
            .suite(g_suite())
            .build(),
        record("G-RLN-2", "G", APPELL_INTRO)
            .sub(
                "g",
                eq(
                    g(x(), q(1)) + g(-x(), q(1)),
                    -lit(2) * mono(q(1)) * g(-q(1) * x().pow(2), q(4))
                        + lit(2) * eta(2).pow(5) / (eta(1).pow(2) * th(-q(1) * x().pow(2), q(4)) * th(x().pow(2), q(2))),
                ),
            )
            .formal("x")
            .scale(2)
            .suite(g_suite())
            .build(),
    ]
}

fn known_splittings() -> Vec<IdentityRecord> {
    let rhs2 = -(eta(2) * eta(4) * th(-x() * z().pow(2), q(1)) * th(-x() * z().pow(3), q(1)))
        / (mono(x()) * th(x() * z(), q(1)) * th(z().pow(4), q(4)) * th(-q(1) * x().pow(2) * z().pow(4), q(2)));
    let rhs3 = mono(x()) * eta(1) * eta(3).pow(2) * eta(6) * eta(9) * th(q(1) * x().pow(2), q(2))
        / (lit(2) * mono(q(1)) * eta(2).pow(2) * eta(18).pow(2) * th(-x().pow(3), q(3)));
    vec![
        record("HM-COR-D2", "HM-COR", APPELL_INTRO)
            .sub("D2(x,z,z^4)", eq(dn(2, x(), z(), z().pow(4), q(1)), rhs2.clone()))
            .sub("D2(x,x^-1*z^-1,z^4)", eq(dn(2, x(), x().inv() * z().inv(), z().pow(4), q(1)), rhs2))
            .spec("x")
            .formal("z")
            .suite1("x", &[mz(false, 1, 2), mz(true, 2, -2), mz(false, 0, 3)])
            .build(),
        record("HM-COR-D3", "HM-COR", APPELL_INTRO)
            .sub("D3(x,-1,-1)", eq(dn(3, x(), m1(), m1(), q(1)), rhs3.clone()))
            .sub("D3(x,-x^-1,-1)", eq(dn(3, x(), -x().inv(), m1(), q(1)), rhs3))
            .formal("x")
            .note("The second left-hand side is printed as D_2 with second argument x^-1; it is encoded as D_3 with second argument -x^-1, the image of z = -1 under z -> x^-1 z^-1. With the printed x^-1 the Appell denominator 1 - q^(r-1) x z vanishes at r = 1.")
            .build(),
    ]
}

/// The closed form of `D_n` written out as in the displayed corollaries.
fn split_display(n: i64) -> Expr {
    let (x, z, zp) = (x(), z(), zp());
    match n {
        2 => {
            let pre = mono(zp.clone()) * eta(2).pow(3) / (th(x.clone() * z.clone(), q(1)) * th(zp.clone(), q(4)));
            let den = th(-q(1) * x.pow(2) * zp.clone(), q(2));
            let a = th(-q(1) * x.pow(2) * z.clone() * zp.clone(), q(2)) * th(z.pow(2) / zp.clone(), q(4)) / (den.clone() * th(z.clone(), q(2)));
            let b = mono(x.clone() * z.clone()) * th(-q(2) * x.pow(2) * z.clone() * zp.clone(), q(2)) * th(q(2) * z.pow(2) / zp.clone(), q(4))
                / (den * th(q(1) * z.clone(), q(2)));
            (a - b) * pre
        }
        3 => {
            let x3 = x.pow(3);
            let pre = mono(zp.clone()) * eta(3).pow(3)
                / (th(x.clone() * z.clone(), q(1)) * th(zp.clone(), q(9)) * th(x3.clone() * zp.clone(), q(3)));
            let t = |k: i64| th(q(k) * x3.clone() * z.clone() * zp.clone(), q(3)) * th(q(3 * k) * z.pow(3) / zp.clone(), q(9)) / th(q(k) * z.clone(), q(3));
            let e = mono(z.inv()) * t(0) - mono(x.clone() / q(1)) * t(1) + mono(x.pow(2) * z.clone() / q(1)) * t(2);
            e * pre
        }
        4 => {
            let x4 = x.pow(4);
            let pre = mono(zp.clone()) * eta(4).pow(3)
                / (th(x.clone() * z.clone(), q(1)) * th(zp.clone(), q(16)) * th(-q(6) * x4.clone() * zp.clone(), q(4)));
            let t = |k: i64| {
                th(-q(6 + k) * x4.clone() * z.clone() * zp.clone(), q(4)) * th(q(4 * k) * z.pow(4) / zp.clone(), q(16)) / th(q(k) * z.clone(), q(4))
            };
            let xz = x.clone() * z.clone();
            let e = t(0) - mono(xz.clone()) * t(1) + mono(q(1) * xz.pow(2)) * t(2) - mono(q(3) * xz.pow(3)) * t(3);
            e * pre
        }
        _ => unreachable!("displayed only for n = 2, 3, 4"),
    }
}

fn splitting_theorems() -> Vec<IdentityRecord> {
    let section = [(2, CASE2), (3, CASE3), (4, CASE4)];
    section
        .iter()
        .map(|&(n, sec)| {
            let lhs = || dn(n, x(), z(), zp(), q(1));
            record(&format!("N{n}-SPLIT"), "SPLIT", sec)
                .sub("displayed", eq(lhs(), split_display(n)))
                .sub("general", eq(lhs(), dn_closed(n, x(), z(), zp(), q(1))))
                .spec("x")
                .spec("zp")
                .formal("z")
                .suite(vec![
                    entry(&[("x", mz(false, 1, 2)), ("zp", mz(false, 1, 1))]),
                    entry(&[("x", mz(false, 2, -2)), ("zp", mz(true, 0, 1))]),
                    entry(&[("x", mz(true, 0, 3)), ("zp", mz(false, 3, -1))]),
                ])
                .build()
        })
        .collect()
}

/// `D_n(x, z, z'; base)` in the shorthand used by the family tables.
fn d(n: i64, xa: SymMono, za: SymMono, zpa: SymMono, base: SymMono) -> Prod {
    dn(n, xa, za, zpa, base)
}

fn case_two() -> Vec<IdentityRecord> {
    let xs = [mz(false, 1, 2), mz(true, 2, -2), mz(false, 0, 3)];
    let (q1, q2, q4) = (|| q(1), || q(2), || q(4));
    let with_x = |id: &str, rhs: Prod, zp: SymMono| {
        record(id, "N2", CASE2)
            .sub("D2(x,z,z')", eq(d(2, x(), z(), zp.clone(), q1()), rhs.clone()))
            .sub("D2(x,x^-1*z^-1,z')", eq(d(2, x(), x().inv() * z().inv(), zp, q1()), rhs))
            .spec("x")
            .formal("z")
            .suite1("x", &xs)
            .build()
    };
    let rhs1 = -(mono(x() * z().pow(3)) * eta(2).pow(3) * th(-q(2) * x().pow(2) * z().pow(3), q2()) * th(q(2), q4()))
        / (th(x() * z(), q1()) * th(z().pow(2), q4()) * th(-q(1) * x().pow(2) * z().pow(2), q2()) * th(q(1) * z(), q2()));
    let rhs2 = -(eta(2) * eta(4) * th(-x() * z().pow(2), q1()) * th(-x() * z().pow(3), q1()))
        / (mono(x()) * th(x() * z(), q1()) * th(z().pow(4), q4()) * th(-q(1) * x().pow(2) * z().pow(4), q2()));
    let rhs3 = -(mono(z()) * eta(1).pow(3) * th(-q(1) * x() * z().pow(2), q2()))
        / (th(x() * z(), q1()) * th(-q(1) * x(), q2()) * th(z(), q1()));
    let rhs4 = -(eta(1).pow(3) * th(-x() * z().pow(2), q2())) / (th(x() * z(), q1()) * th(-x(), q2()) * th(z(), q1()));
    let rhs8 = -(mono(x().inv()) * eta(2).pow(3) * th(-x() * z().pow(2), q1()))
        / (th(x() * z(), q1()) * th(-q(3) * x().pow(2) * z().pow(2), q4()) * th(z().pow(2), q2()));

    let u3 = u().pow(3);
    let rhs5 = -(eta(2) * eta(4) * th(-u().pow(2) * z(), q1()) * th(u(), q1()) * th(-z() * u(), q1()))
        / (th(u3.clone() * z(), q1()) * th(u().pow(4), q4()) * th(-q(1) * u().pow(2), q2()) * th(z(), q1()));
    let q3 = || q(3);
    let rhs6 = -(mono(q(-1) * z().pow(2)) * eta(3).pow(4) * eta(6) * th(z(), q4()))
        / (eta(1) * th(q(2) * z(), q3()) * th(z().pow(3), q(12)) * th(-q(1) * z(), q(6)) * th(z(), q3()));
    let rhs7 = -(mono(q(-1) * z()) * eta(3).pow(4) * eta(6) * th(z(), q4()))
        / (eta(1) * th(q(1) * z(), q3()) * th(z().pow(3), q(12)) * th(-q(5) * z(), q(6)) * th(z(), q3()));
    let x6 = q(1) * z().pow(-2);
    let x7 = q(2) * z().pow(-2);
    vec![
        with_x("N2-1", rhs1, z().pow(2)),
        with_x("N2-2", rhs2, z().pow(4)),
        with_x("N2-3", rhs3, x().inv()),
        with_x("N2-4", rhs4, x().pow(-2)),
        record("N2-5", "N2", CASE2)
            .sub("D2(u^3,z,u^-4)", eq(d(2, u3.clone(), z(), u().pow(-4), q1()), rhs5.clone()))
            .sub("D2(u^3,u^-3*z^-1,u^-4)", eq(d(2, u3.clone(), u3.inv() * z().inv(), u().pow(-4), q1()), rhs5))
            .spec("u")
            .formal("z")
            .suite1("u", &xs)
            .build(),
        record("N2-6", "N2", CASE2)
            .sub("D2(qz^-2,z,z^3)", eq(d(2, x6.clone(), z(), z().pow(3), q3()), rhs6.clone()))
            .sub("D2(qz^-2,q^-1*z,z^3)", eq(d(2, x6.clone(), x6.inv() * z().inv(), z().pow(3), q3()), rhs6))
            .formal("z")
            .build(),
        record("N2-7", "N2", CASE2)
            .sub("D2(q^2z^-2,z,z^3)", eq(d(2, x7.clone(), z(), z().pow(3), q3()), rhs7.clone()))
            .sub("D2(q^2z^-2,q^-2*z,z^3)", eq(d(2, x7.clone(), x7.inv() * z().inv(), z().pow(3), q3()), rhs7))
            .formal("z")
            .build(),
        with_x("N2-8", rhs8, -q(1) * x().pow(-2) * z().pow(-2)),
    ]
}

fn case_three() -> Vec<IdentityRecord> {
    let (q1, q2, q3, q6, q9, q18) = (|| q(1), || q(2), || q(3), || q(6), || q(9), || q(18));
    let single = |id: &str, var: &str, xa: SymMono, z1: SymMono, z2: SymMono, zpa: SymMono, base: SymMono, rhs: Prod| {
        record(id, "N3", CASE3)
            .sub(&format!("D3(x,{z1},z')"), eq(d(3, xa.clone(), z1.clone(), zpa.clone(), base.clone()), rhs.clone()))
            .sub(&format!("D3(x,{z2},z')"), eq(d(3, xa, z2, zpa, base), rhs))
            .formal(var)
    };
    vec![
        single(
            "N3-1",
            "z",
            z().pow(-4),
            z(),
            z().pow(3),
            q(3) * z().pow(9),
            q1(),
            mono(z().pow(5)) * eta(1) * eta(3).pow(4) / (th(z(), q1()) * th(z().pow(3), q3()) * th(q(2) * z().pow(3), q3()) * th(q(3) * z().pow(9), q9())),
        )
        .build(),
        single(
            "N3-2",
            "z",
            z().pow(-4),
            z(),
            z().pow(3),
            q(6) * z().pow(9),
            q1(),
            mono(z().pow(3)) * eta(1) * eta(3).pow(4) / (th(z(), q1()) * th(z().pow(3), q3()) * th(q(1) * z().pow(3), q3()) * th(q(6) * z().pow(9), q9())),
        )
        .build(),
        single(
            "N3-3",
            "u",
            u().pow(-5),
            u().pow(2),
            u().pow(3),
            q(3) * u().pow(9),
            q1(),
            mono(u().pow(7)) * eta(1) * eta(3).pow(4) / (th(u(), q1()) * th(u().pow(6), q3()) * th(q(2) * u().pow(3), q3()) * th(q(3) * u().pow(9), q9())),
        )
        .build(),
        single(
            "N3-4",
            "u",
            u().pow(-5),
            u().pow(2),
            u().pow(3),
            q(6) * u().pow(9),
            q1(),
            mono(u().pow(5)) * eta(1) * eta(3).pow(4) / (th(u(), q1()) * th(u().pow(6), q3()) * th(q(1) * u().pow(3), q3()) * th(q(6) * u().pow(9), q9())),
        )
        .build(),
        single(
            "N3-5",
            "z",
            q(1) * z().pow(-4),
            z(),
            q(1) * z().pow(3),
            z().pow(9),
            q2(),
            -(mono(q(-1) * z().pow(4)) * eta(2).pow(2) * thq(3, 18) * th(-z(), q1())) / (eta(1) * th(q(1) * z().pow(3), q2()) * th(z().pow(9), q18())),
        )
        .build(),
        single(
            "N3-6",
            "x",
            x(),
            q(1),
            q(-1) * x().inv(),
            q(3) * x().pow(-3),
            q2(),
            -(mono(x().inv()) * eta(6).pow(3) * th(x(), q2()) * th(q(4) * x().pow(2), q6()))
                / (eta(3) * th(x(), q1()) * th(q(2) * x(), q6()) * th(q(3) * x().pow(-3), q18())),
        )
        .note("No companion theta function identity is stated for this family.")
        .build(),
        single(
            "N3-7",
            "z",
            q(1) * z().pow(-2),
            z(),
            q(1) * z(),
            z().pow(3),
            q2(),
            -(mono(q(-1) * z()) * eta(3) * eta(6).pow(2) * th(q(1) * z(), q2()) * th(z().pow(2), q6()))
                / (th(z(), q1()) * th(q(3) * z(), q6()) * th(q(3) * z().pow(3), q6()) * th(z().pow(3), q18())),
        )
        .build(),
        single(
            "N3-8",
            "x",
            x(),
            q(1),
            q(1) * x().inv(),
            q(9),
            q2(),
            -(mono(q(1) * x().inv()) * thb(1, 4) * eta(3) * eta(6).pow(2) * th(x().pow(2), q1()))
                / (thq(9, 18) * th(x(), q1()) * th(q(1) * x().pow(2), q2()) * th(q(3) * x().pow(3), q6())),
        )
        .note("The display has no closing punctuation; the identity itself is unaffected.")
        .build(),
        single(
            "N3-9",
            "z",
            q(1) * z().pow(-3),
            z(),
            q(1) * z().pow(2),
            q(9) * z().pow(6),
            q2(),
            -(mono(z()) * thb(1, 4) * eta(3) * eta(6).pow(2) * th(z().pow(2), q3()))
                / (th(q(1) * z().pow(2), q2()) * th(z(), q3()) * th(z().pow(3), q6()) * th(q(9) * z().pow(6), q18())),
        )
        .build(),
        single(
            "N3-10",
            "u",
            q(1) * u().pow(-5),
            u().pow(3),
            q(1) * u().pow(2),
            u().pow(9),
            q2(),
            -(mono(q(-1) * u().pow(4)) * eta(1) * eta(2) * eta(6).pow(3) * th(u().pow(2), q1()) * th(u().pow(3), q6()))
                / (eta(3)
                    * th(u(), q1())
                    * th(q(1) * u().pow(2), q2())
                    * th(q(3) * u().pow(6), q6())
                    * th(u().pow(3), q2())
                    * th(u().pow(9), q18())),
        )
        .note("The factor printed as Θ(u^3;q^6)_∞ carries a stray product subscript and is read as Θ(u^3;q^6).")
        .build(),
        single(
            "N3-11",
            "z",
            q(1) * z().pow(-4),
            z(),
            q(1) * z().pow(3),
            q(9) * z().pow(9),
            q2(),
            -(mono(z()) * eta(1) * eta(2) * eta(6).pow(3) * th(z().pow(2), q1()) * th(q(3) * z().pow(3), q6()))
                / (eta(3)
                    * th(z(), q1())
                    * th(q(1) * z().pow(2), q2())
                    * th(z().pow(3), q6())
                    * th(q(1) * z().pow(3), q2())
                    * th(q(9) * z().pow(9), q18())),
        )
        .build(),
    ]
}

fn case_four() -> Vec<IdentityRecord> {
    let xa = -v("z").pow(-5);
    let rhs = mono(q(-1) * z().pow(10)) * eta(1) * eta(4).pow(3) * eta(16) * th(z().pow(2), q(1))
        / (eta(8) * th(z(), q(1)) * th(-q(1) * z().pow(4), q(2)) * th(-q(2) * z().pow(4), q(4)) * th(z().pow(16), q(16)));
    vec![record("N4-1", "N4", CASE4)
        .sub("D4(x,z,z')", eq(d(4, xa.clone(), z(), z().pow(16), q(1)), rhs.clone()))
        .sub("D4(x,-z^4,z')", eq(d(4, xa, -z().pow(4), z().pow(16), q(1)), rhs))
        .formal("z")
        .build()]
}

fn prelim_quotients() -> Vec<IdentityRecord> {
    let rec = |id: &str| record(id, "PRELIM", PRELIM);
    vec![
        rec("PRELIM-1")
            .sub("bar(0,1)=2bar(1,4)", eq(thb(0, 1), lit(2) * thb(1, 4)))
            .sub("bar(0,1)=eta", eq(thb(0, 1), lit(2) * eta(2).pow(2) / eta(1)))
            .build(),
        rec("PRELIM-2").sub("bar(1,2)", eq(thb(1, 2), eta(2).pow(5) / (eta(1).pow(2) * eta(4).pow(2)))).build(),
        rec("PRELIM-3").sub("(1,2)", eq(thq(1, 2), eta(1).pow(2) / eta(2))).build(),
        rec("PRELIM-4").sub("bar(1,3)", eq(thb(1, 3), eta(2) * eta(3).pow(2) / (eta(1) * eta(6)))).build(),
        rec("PRELIM-5").sub("(1,4)", eq(thq(1, 4), eta(1) * eta(4) / eta(2))).build(),
        rec("PRELIM-6").sub("(1,6)", eq(thq(1, 6), eta(1) * eta(6).pow(2) / (eta(2) * eta(3)))).build(),
        rec("PRELIM-7")
            .sub("bar(1,6)", eq(thb(1, 6), eta(2).pow(2) * eta(3) * eta(12) / (eta(1) * eta(4) * eta(6))))
            .build(),
    ]
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

fn theta_laws() -> Vec<IdentityRecord> {
    let mut out = Vec::new();
    let mut ell = record("JLAW-ELLIPTIC", "JLAW", PRELIM).formal("x");
    for n in -3i64..=3 {
        let sign = if n.rem_euclid(2) == 0 { 1 } else { -1 };
        ell = ell.sub(
            &format!("n={n}"),
            eq(th(q(n) * x(), q(1)), lit(sign) * mono(q(-binom2(n)) * x().pow(-n)) * th(x(), q(1))),
        );
    }
    out.push(ell.note("The right-hand side writes j(x;q) for Θ(x;q).").build());
    out.push(record("JLAW-FLIP", "JLAW", PRELIM).sub("flip", eq(th(x(), q(1)), th(q(1) / x(), q(1)))).formal("x").build());
    for n in [2, 3] {
        let args: Vec<SymMono> = (0..n).map(|k| q(k) * x()).collect();
        out.push(
            record(&format!("JLAW-MOD-{n}"), "JLAW", PRELIM)
                .sub(&format!("n={n}"), eq(th(x(), q(1)), eta(1) * ths(args, q(n)) / eta(n).pow(n)))
                .formal("x")
                .build(),
        );
    }
    for m in [2, 3] {
        let sign = m % 2 == 0;
        let mut rhs = Expr::default();
        for k in 0..m {
            let s = if k % 2 == 0 { 1 } else { -1 };
            let mut arg = q(binom2(m) + m * k) * z().pow(m);
            if sign {
                arg = -arg;
            }
            rhs = rhs + lit(s) * mono(q(binom2(k)) * z().pow(k)) * th(arg, q(m * m));
        }
        out.push(
            record(&format!("JLAW-SPLIT-{m}"), "JLAW", PRELIM)
                .sub(&format!("m={m}"), eq(th(z(), q(1)), rhs))
                .formal("z")
                .build(),
        );
    }
    for n in [2i64, 3, 4] {
        let args: Vec<SymMono> = (0..n).map(|k| root(12 * k / n) * x()).collect();
        let mut b = record(&format!("JLAW-ROOTS-{n}"), "JLAW", PRELIM)
            .sub(&format!("n={n}"), eq(th(x().pow(n), q(n)), eta(n) * ths(args, q(1)) / eta(1).pow(n)))
            .formal("x")
            .note("The display writes the base of the right-hand product as q^n; the identity holds with base q, which is what is encoded.");
        if n == 3 {
            b = b.omega_field();
        }
        if n == 4 {
            b = b.engines(Engines::Numeric).note("Needs the fourth root of unity i, which lies outside Q(ω); checked numerically only.");
        }
        out.push(b.build());
    }
    out
}

fn products() -> Vec<IdentityRecord> {
    let ys = [mz(false, 1, 2), mz(true, 2, -1), mz(false, 0, 3)];
    let (q1, q2) = (|| q(1), || q(2));
    let quint = th(-x(), q1()) * th(q(1) * x().pow(2), q2()) / eta(2);
    vec![
        record("QUINTUPLE-A", "PROD", PRELIM)
            .sub("sum", eq(th(q(1) * x().pow(3), q(3)) + mono(x()) * th(q(2) * x().pow(3), q(3)), quint.clone()))
            .formal("x")
            .build(),
        record("QUINTUPLE-B", "PROD", PRELIM)
            .sub("quotient", eq(quint, eta(1) * th(x().pow(2), q1()) / th(x(), q1())))
            .formal("x")
            .build(),
        record("PROD-1", "PROD", PRELIM)
            .sub(
                "product",
                eq(
                    th(x(), q1()) * th(y(), q1()),
                    th(-x() * y(), q2()) * th(-q(1) * y() / x(), q2()) - mono(x()) * th(-q(1) * x() * y(), q2()) * th(-y() / x(), q2()),
                ),
            )
            .spec("x")
            .formal("y")
            .suite1("x", &ys)
            .build(),
        record("PROD-2A", "PROD", PRELIM)
            .sub(
                "difference",
                eq(
                    th(-x(), q1()) * th(y(), q1()) - th(x(), q1()) * th(-y(), q1()),
                    lit(2) * mono(x()) * th(y() / x(), q2()) * th(q(1) * x() * y(), q2()),
                ),
            )
            .spec("x")
            .formal("y")
            .suite1("x", &ys)
            .note("The last factor is printed as j(qxy;q^2), read as Θ(qxy;q^2).")
            .build(),
        record("PROD-2B", "PROD", PRELIM)
            .sub(
                "sum",
                eq(
                    th(-x(), q1()) * th(y(), q1()) + th(x(), q1()) * th(-y(), q1()),
                    lit(2) * th(x() * y(), q2()) * th(q(1) * y() / x(), q2()),
                ),
            )
            .spec("x")
            .formal("y")
            .suite1("x", &ys)
            .build(),
    ]
}

fn weierstrass() -> Vec<IdentityRecord> {
    let (a, b, c, dd) = (v("a"), v("b"), v("c"), v("d"));
    let q6 = || q(6);
    let zz = z;
    vec![
        record("WEIER", "WEIER", PRELIM)
            .sub(
                "three-term",
                eq(
                    ths(vec![a.clone() * c.clone(), a.clone() / c.clone(), b.clone() * dd.clone(), b.clone() / dd.clone()], q(1)),
                    ths(vec![a.clone() * dd.clone(), a.clone() / dd.clone(), b.clone() * c.clone(), b.clone() / c.clone()], q(1))
                        + mono(b.clone() / c.clone())
                            * ths(vec![a.clone() * b.clone(), a.clone() / b.clone(), c.clone() * dd.clone(), c.clone() / dd.clone()], q(1)),
                ),
            )
            .spec("a")
            .spec("b")
            .spec("c")
            .formal("d")
            .suite(vec![
                entry(&[("a", mz(false, 1, 2)), ("b", mz(false, 2, -1)), ("c", mz(false, 0, 3))]),
                entry(&[("a", mz(true, 0, 1)), ("b", mz(false, 1, 2)), ("c", mz(false, 3, -1))]),
                entry(&[("a", mz(false, 2, 0)), ("b", mz(true, 1, 1)), ("c", mz(false, 1, -2))]),
            ])
            .build(),
        record("WR-COR-1", "WEIER", PRELIM)
            .sub(
                "cor1",
                eq(
                    ths(vec![q(2), zz().pow(2), q(1) * zz(), q(1) / zz()], q6()),
                    ths(vec![q(1) * zz().pow(2), q(1), q(2) / zz(), zz()], q6())
                        + mono(zz()) * ths(vec![q(2) * zz(), zz(), q(1), q(1) / zz().pow(2)], q6()),
                ),
            )
            .formal("z")
            .build(),
        record("WR-COR-2", "WEIER", PRELIM)
            .sub(
                "cor2",
                eq(
                    ths(vec![q(5) / zz(), q(3) * zz(), q(1) * zz().pow(2), q(1)], q6()),
                    ths(vec![q(4) * zz(), q(4) / zz(), q(2), zz().pow(2)], q6())
                        + mono(zz().pow(2)) * ths(vec![q(5) * zz(), q(3) / zz(), q(1), q(1) / zz().pow(2)], q6()),
                ),
            )
            .formal("z")
            .build(),
        record("ASD-COR-1", "ASD", PRELIM)
            .sub(
                "vanishing",
                eq(
                    thb(2, 6) * th(q(6) * zz(), q(12)) * th(zz(), q6()) + mono(q(1)) * thb(1, 6) * th(zz(), q(12)) * th(q(3) * zz(), q6())
                        - th(zz(), q(4)) * eta(3).pow(3) / eta(1),
                    Expr::default(),
                ),
            )
            .formal("z")
            .build(),
    ]
}

fn dn_functional() -> Vec<IdentityRecord> {
    type Side = fn(i64) -> (Prod, Prod);
    let cases: [(&str, &str, Side); 5] = [
        ("DN-FE-1", "z -> qz", |n| (dn(n, x(), z(), zp(), q(1)), dn(n, x(), q(1) * z(), zp(), q(1)))),
        ("DN-FE-2", "z -> x^-1 z^-1", |n| (dn(n, x(), z(), zp(), q(1)), dn(n, x(), x().inv() * z().inv(), zp(), q(1)))),
        ("DN-FE-3", "z' -> q^(n^2) z'", |n| (dn(n, x(), z(), zp(), q(1)), dn(n, x(), z(), q(n * n) * zp(), q(1)))),
        ("DN-FE-4", "qz -> x^-1 z^-1", |n| (dn(n, x(), q(1) * z(), zp(), q(1)), dn(n, x(), x().inv() * z().inv(), zp(), q(1)))),
        ("DN-FE-THETA", "x -> qx", |n| {
            (th(x(), q(1)) * dn(n, x(), z(), zp(), q(1)), th(q(1) * x(), q(1)) * dn(n, q(1) * x(), z(), zp(), q(1)))
        }),
    ];
    cases
        .iter()
        .map(|(id, what, f)| {
            let mut r = record(id, "DN-FE", PRELIM);
            for n in [2, 3] {
                let (l, rr) = f(n);
                r = r.sub(&format!("n={n}: {what}"), eq(l, rr));
            }
            r.spec("x")
                .spec("zp")
                .formal("z")
                .suite(vec![
                    entry(&[("x", mz(false, 1, 2)), ("zp", mz(false, 1, 1))]),
                    entry(&[("x", mz(false, 2, -2)), ("zp", mz(true, 0, 1))]),
                    entry(&[("x", mz(true, 0, 3)), ("zp", mz(false, 3, -1))]),
                ])
                .build()
        })
        .collect()
}

fn extra_theta() -> Vec<IdentityRecord> {
    // Θ(q^a·w^e; q^m) shorthand.
    let t = |a: i64, w: SymMono, e: i64, m: i64| th(q(a) * w.pow(e), q(m));
    let z = z();
    let u = u();
    let x = x();
    let rec = |id: &str, var: &str, e: Expr| record(id, "TH8", EXTRA).sub("theta", e).formal(var).build();
    let ratio3 = |w: &SymMono, c: Prod, a1: i64, e1: i64, a2: i64, e2: i64, d: i64, ed: i64, m: i64| {
        c * t(a1, w.clone(), e1, m) * t(a2, w.clone(), e2, 3 * m) / t(d, w.clone(), ed, m)
    };
    vec![
        rec(
            "TH8A-1",
            "z",
            eq(
                ratio3(&z, mono(z.clone()), 0, 2, 3, 6, 0, 1, 3)
                    + ratio3(&z, mono(q(1)), 2, 2, 0, 6, 1, 1, 3)
                    + ratio3(&z, mono(z.pow(3)), 1, 2, 6, 6, 2, 1, 3),
                mono(z.clone()) * eta(1) * eta(3) * t(0, z.clone(), 3, 1) / (t(0, z.clone(), 1, 1) * t(2, z.clone(), 3, 3)),
            ),
        ),
        rec(
            "TH8A-2",
            "z",
            eq(
                ratio3(&z, mono(z.pow(4)), 0, 2, 6, 6, 0, 1, 3) + ratio3(&z, mono(z.pow(3)), 2, 2, 3, 6, 1, 1, 3)
                    - ratio3(&z, mono(q(1)), 1, 2, 0, 6, 2, 1, 3),
                mono(z.pow(3)) * eta(1) * eta(3) * t(0, z.clone(), 3, 1) / (t(0, z.clone(), 1, 1) * t(1, z.clone(), 3, 3)),
            ),
        ),
        rec(
            "TH8A-3",
            "u",
            eq(
                ratio3(&u, lit(1), 0, 4, 3, 3, 0, 2, 3) + ratio3(&u, mono(u.clone() * q(1)), 2, 4, 0, 3, 1, 2, 3)
                    + ratio3(&u, mono(u.clone()), 1, 4, 6, 3, 2, 2, 3),
                eta(1) * eta(3) * t(0, u.clone(), 3, 1) / (t(0, u.clone(), 1, 1) * t(2, u.clone(), 3, 3)),
            ),
        ),
        rec(
            "TH8A-4",
            "u",
            eq(
                ratio3(&u, mono(u.pow(2)), 0, 4, 6, 3, 0, 2, 3) + ratio3(&u, mono(u.pow(3)), 2, 4, 3, 3, 1, 2, 3)
                    - ratio3(&u, mono(q(1)), 1, 4, 0, 3, 2, 2, 3),
                mono(u.pow(2)) * eta(1) * eta(3) * t(0, u.clone(), 3, 1) / (t(0, u.clone(), 1, 1) * t(1, u.clone(), 3, 3)),
            ),
        ),
        rec(
            "TH8A-5",
            "z",
            eq(
                ratio3(&z, mono(q(1)), 3, 2, 0, 6, 0, 1, 6) + ratio3(&z, mono(z.pow(3)), 1, 2, 12, 6, 2, 1, 6)
                    + ratio3(&z, mono(z.pow(2)), 5, 2, 6, 6, 4, 1, 6),
                mono(z.pow(2)) * eta(2).pow(2) * thq(3, 18) * th(-z.clone(), q(1)) * t(3, z.clone(), 3, 6) / (eta(1) * eta(6).pow(3)),
            ),
        ),
        rec(
            "TH8B-1",
            "z",
            eq(
                mono(z.clone()) * t(2, z.clone(), 2, 6) * thq(3, 18) / t(1, z.clone(), 1, 6) - t(0, z.clone(), 2, 6) * thq(9, 18) / t(3, z.clone(), 1, 6)
                    - mono(z.clone()) * t(4, z.clone(), 2, 6) * thq(3, 18) / t(5, z.clone(), 1, 6),
                -(eta(3) * t(0, z.clone(), 2, 6) * eta(2).pow(2)) / (t(3, z.clone(), 1, 6) * eta(6) * eta(1)),
            ),
        ),
        rec(
            "TH8B-2",
            "x",
            eq(
                ratio3(&x, lit(1), 4, 2, 6, 3, 5, 1, 6) + ratio3(&x, mono(x.pow(-2) * q(3)), 0, 2, 0, 3, 3, 1, 6)
                    + ratio3(&x, mono(x.clone()), 2, 2, 12, 3, 1, 1, 6),
                eta(3) * th(-x.clone(), q(1)) / eta(6),
            ),
        ),
        rec(
            "TH8B-3",
            "z",
            eq(
                ratio3(&z, lit(1), 0, 2, 9, 3, 0, 1, 6) + ratio3(&z, mono(q(1)), 4, 2, 3, 3, 2, 1, 6)
                    + ratio3(&z, mono(q(1) * z.clone()), 2, 2, 15, 3, 4, 1, 6),
                thb(1, 4) * eta(3) * t(0, z.clone(), 2, 3) / (t(0, z.clone(), 1, 3) * eta(6)),
            ),
        ),
        rec(
            "TH8B-4",
            "u",
            eq(
                -ratio3(&u, mono(u.pow(3)), 2, 4, 15, 3, 1, 2, 6) + ratio3(&u, lit(1), 0, 4, 9, 3, 3, 2, 6)
                    + ratio3(&u, mono(u.clone()), 4, 4, 3, 3, 5, 2, 6),
                th(-u.clone(), q(1)) * t(0, u.clone(), 3, 6) / eta(3),
            ),
        ),
        rec(
            "TH8B-5",
            "z",
            eq(
                ratio3(&z, lit(1), 0, 2, 9, 6, 0, 1, 6) + ratio3(&z, mono(q(1) * z.inv()), 4, 2, 3, 6, 2, 1, 6)
                    + ratio3(&z, mono(q(1) * z.pow(2)), 2, 2, 15, 6, 4, 1, 6),
                th(-z.clone(), q(1)) * t(3, z.clone(), 3, 6) / eta(3),
            ),
        ),
        rec(
            "TH8C-1",
            "z",
            eq(
                -(mono(q(1) * z.pow(-3)) * th(-q(2) * z.pow(3), q(4)) * t(0, z.clone(), 12, 16) / t(0, z.clone(), 1, 4))
                    + mono(z.pow(5)) * th(-q(1) * z.pow(3), q(4)) * t(12, z.clone(), 12, 16) / t(1, z.clone(), 1, 4)
                    + mono(z.clone()) * th(-z.pow(3), q(4)) * t(8, z.clone(), 12, 16) / t(2, z.clone(), 1, 4)
                    + th(-q(3) * z.pow(3), q(4)) * t(4, z.clone(), 12, 16) / t(3, z.clone(), 1, 4),
                eta(1) * eta(16) * th(-z.pow(4), q(2)) * t(1, z.clone(), 2, 2) * th(-z.clone(), q(1)) / (eta(8) * eta(2).pow(3)),
            ),
        ),
    ]
}
