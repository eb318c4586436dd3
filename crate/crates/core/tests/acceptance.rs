//! Acceptance criteria. Runs without the libtest harness so every criterion
//! prints its own PASS/FAIL line; the process exits nonzero if any fails.

use std::time::{Duration, Instant};

use qsplit::catalog::{build_catalog, Engine, IdentityRecord};
use qsplit::exact::Unit;
use qsplit::qring::Monomial;
use qsplit::special::{d_n, theta_prod, theta_sum, dn_closed_form, ThetaSpec};
use qsplit::verifier::{mutate, random_mutations, verify_all, verify_exact, verify_numeric, Settings, Status};

const EXACT_ORDER: i64 = 40;
const EXACT_BUDGET: Duration = Duration::from_secs(600);
const NUMERIC_POINTS: usize = 5;
const NUMERIC_TOL: f64 = 1e-8;
const NUMERIC_SEED: u64 = 0;
const NUMERIC_BUDGET: Duration = Duration::from_secs(60);
const THETA_ORDER: i64 = 100;
const THETA_SPECS: usize = 20;
const DN_ORDER: i64 = 40;
const DN_SPECS_PER_N: usize = 3;
const SIXTH_ORDER: i64 = 50;
const MUTANTS: usize = 10;
const MUTANT_SEED: u64 = 0xACCE;

fn zq(unit: i64, q: i64, z: i64) -> Monomial {
    Monomial::new(Unit::new(unit), q, z)
}

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn find<'a>(cat: &'a [IdentityRecord], id: &str) -> &'a IdentityRecord {
    cat.iter().find(|r| r.id == id).unwrap_or_else(|| panic!("missing record {id}"))
}

type Outcome = Result<String, String>;
type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn exact_suite(cat: &[IdentityRecord]) -> Outcome {
    let settings = Settings { order: EXACT_ORDER, ..Settings::default() };
    let start = Instant::now();
    let outcomes = verify_all(cat, &[Engine::Exact], &settings, jobs());
    let took = start.elapsed();
    let mut bad = Vec::new();
    let (mut pass, mut na) = (0, 0);
    for o in &outcomes {
        match o.status {
            Status::Pass => pass += 1,
            // Only the record that needs i outside Q(ω) may opt out.
            Status::NotApplicable if o.id == "JLAW-ROOTS-4" => na += 1,
            _ => bad.push(format!("{} {}: {}", o.id, o.status, o.details.join("; "))),
        }
        if o.details.iter().any(|d| d.contains("unannotated degenerate")) {
            bad.push(format!("{} hit an unannotated degenerate entry", o.id));
        }
    }
    if took > EXACT_BUDGET {
        bad.push(format!("took {took:?}, budget {EXACT_BUDGET:?}"));
    }
    if bad.is_empty() {
        Ok(format!("{pass} pass, {na} not-applicable, {:.1}s", took.as_secs_f64()))
    } else {
        Err(bad.join("\n    "))
    }
}

fn numeric_suite(cat: &[IdentityRecord]) -> Outcome {
    let settings = Settings { points: NUMERIC_POINTS, tol: NUMERIC_TOL, seed: NUMERIC_SEED, ..Settings::default() };
    let start = Instant::now();
    let outcomes = verify_all(cat, &[Engine::Numeric], &settings, jobs());
    let took = start.elapsed();
    let mut bad: Vec<String> =
        outcomes.iter().filter(|o| o.status != Status::Pass).map(|o| format!("{} {}: {}", o.id, o.status, o.details.join("; "))).collect();
    if outcomes.len() != cat.len() {
        bad.push(format!("{} outcomes for {} records", outcomes.len(), cat.len()));
    }
    if took > NUMERIC_BUDGET {
        bad.push(format!("took {took:?}, budget {NUMERIC_BUDGET:?}"));
    }
    let worst = outcomes.iter().filter_map(|o| o.max_residual).fold(0.0, f64::max);
    if bad.is_empty() {
        Ok(format!("{} pass, worst residual {worst:.1e}, {:.2}s", outcomes.len(), took.as_secs_f64()))
    } else {
        Err(bad.join("\n    "))
    }
}

/// Formal-z arguments, negative bases and pure-q arguments.
fn theta_specs() -> Vec<ThetaSpec> {
    let args = [
        zq(0, 0, 1),
        zq(6, 0, 1),
        zq(0, 1, 1),
        zq(0, 2, -1),
        zq(6, 1, -2),
        zq(0, -1, 3),
        zq(4, 0, 1),
        zq(0, 1, 0),
        zq(6, 1, 0),
        zq(0, 2, 0),
    ];
    let bases = [zq(0, 1, 0), zq(6, 1, 0), zq(0, 2, 0), zq(6, 3, 0)];
    let mut out = Vec::new();
    for (i, a) in args.iter().enumerate() {
        out.push(ThetaSpec::new(*a, bases[i % 4]));
        out.push(ThetaSpec::new(*a, bases[(i + 1) % 4]));
    }
    out
}

fn theta_dual() -> Outcome {
    let specs = theta_specs();
    if specs.len() != THETA_SPECS {
        return Err(format!("suite has {} specs", specs.len()));
    }
    let negative = specs.iter().filter(|s| s.base.unit == Unit::MINUS_ONE).count();
    let pure = specs.iter().filter(|s| s.arg.z_exp == 0).count();
    for s in &specs {
        let a = theta_sum(s, THETA_ORDER).map_err(|e| format!("{s:?}: {e}"))?;
        let b = theta_prod(s, THETA_ORDER).map_err(|e| format!("{s:?}: {e}"))?;
        if let Some((e, c)) = (&a - &b).first_nonzero() {
            return Err(format!("Θ({}; {}) differs at q^{e}: {c}", s.arg, s.base));
        }
    }
    Ok(format!("{THETA_SPECS} specs ({negative} negative base, {pure} pure-q) agree through q^{THETA_ORDER}"))
}

fn splitting() -> Outcome {
    // (x, z, z'); all z-exponents in the theta denominators stay nonzero.
    let suite = [(zq(0, 1, 2), zq(0, 0, -1), zq(0, 1, 1)), (zq(6, 2, -1), zq(0, 0, 2), zq(0, 1, 3)), (zq(0, 0, 3), zq(6, 1, 1), zq(0, 2, -1))];
    let mut checked = 0;
    for n in [2, 3, 4] {
        let mut ok = 0;
        for (x, z, zp) in suite {
            let a = d_n(n, x, z, zp, Monomial::q(1), DN_ORDER).map_err(|e| format!("n={n} D_n at ({x}, {z}, {zp}): {e}"))?;
            let b = dn_closed_form(n, x, z, zp, Monomial::q(1), DN_ORDER)
                .map_err(|e| format!("n={n} closed form at ({x}, {z}, {zp}): {e}"))?;
            if let Some((e, c)) = (&a - &b).first_nonzero() {
                return Err(format!("n={n} at ({x}, {z}, {zp}) differs at q^{e}: {c}"));
            }
            if a.is_zero_through_order() {
                return Err(format!("n={n} at ({x}, {z}, {zp}) is identically zero"));
            }
            ok += 1;
        }
        if ok < DN_SPECS_PER_N {
            return Err(format!("n={n}: only {ok} specializations"));
        }
        checked += ok;
    }
    Ok(format!("{checked} specializations, n = 2, 3, 4, through q^{DN_ORDER}"))
}

fn exact_records(cat: &[IdentityRecord], ids: &[&str], order: i64) -> Outcome {
    let mut subs = 0;
    for id in ids {
        let r = find(cat, id);
        let o = verify_exact(r, order);
        if o.status != Status::Pass {
            return Err(format!("{id} {}: {}", o.status, o.details.join("; ")));
        }
        subs += r.expr.len();
    }
    Ok(format!("{} records, {subs} equations, through q^{order}", ids.len()))
}

fn functional_equations(cat: &[IdentityRecord]) -> Outcome {
    let ids: Vec<&str> = cat.iter().filter(|r| r.family == "DN-FE").map(|r| r.id.as_str()).collect();
    if ids.len() != 5 {
        return Err(format!("expected 5 functional-equation records, found {}", ids.len()));
    }
    for id in &ids {
        let r = find(cat, id);
        if r.formal_var().is_none() {
            return Err(format!("{id} has no formal variable"));
        }
        let labels: Vec<_> = r.expr.iter().map(|s| s.label.as_str()).collect();
        if !(labels.iter().any(|l| l.starts_with("n=2")) && labels.iter().any(|l| l.starts_with("n=3"))) {
            return Err(format!("{id} does not cover n = 2 and n = 3"));
        }
    }
    exact_records(cat, &ids, EXACT_ORDER)
}

fn rationality(cat: &[IdentityRecord]) -> Outcome {
    let ids = ["TENTH-1", "TENTH-2", "TENTH-3", "TENTH-4"];
    for id in ids {
        if find(cat, id).expr.iter().all(|s| s.rational.is_empty()) {
            return Err(format!("{id} carries no rationality check"));
        }
    }
    exact_records(cat, &ids, EXACT_ORDER)
}

fn mutation_sensitivity(cat: &[IdentityRecord]) -> Outcome {
    let mutants = random_mutations(cat, MUTANTS, MUTANT_SEED);
    if mutants.len() != MUTANTS {
        return Err(format!("only {} mutants", mutants.len()));
    }
    let mut bad = Vec::new();
    for (r, m) in &mutants {
        let e = verify_exact(r, EXACT_ORDER);
        let n = verify_numeric(r, NUMERIC_POINTS, NUMERIC_TOL, NUMERIC_SEED);
        if e.status != Status::Fail || n.status != Status::Fail {
            bad.push(format!("{} {m:?}: exact {}, numeric {}", r.id, e.status, n.status));
        }
    }
    // Every mutation must actually change the equation.
    for (r, m) in &mutants {
        let id = r.id.trim_end_matches("~mutated");
        let original = mutate(find(cat, id), *m);
        if original.expr[0] == find(cat, id).expr[0] {
            bad.push(format!("{id} {m:?} left the equation unchanged"));
        }
    }
    if bad.is_empty() {
        Ok(format!("{MUTANTS} mutants rejected by both engines"))
    } else {
        Err(bad.join("\n    "))
    }
}

fn cli_json(args: &[&str]) -> Result<String, String> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = qsplit::cli::run(args.iter().copied(), &mut out, &mut err);
    if code != 0 {
        return Err(format!("{args:?} exited {code}: {}", String::from_utf8_lossy(&err)));
    }
    String::from_utf8(out).map_err(|e| e.to_string())
}

fn determinism() -> Outcome {
    let runs: [&[&str]; 2] = [
        &["qsplit", "verify-all", "--engine", "numeric", "--points", "5", "--tol", "1e-8", "--seed", "0"],
        &["qsplit", "report", "--family", "JLAW", "--engine", "both", "--order", "30"],
    ];
    for base in runs {
        let a = cli_json(&[base, &["--jobs", "1"]].concat())?;
        let b = cli_json(&[base, &["--jobs", "4"]].concat())?;
        let c = cli_json(&[base, &["--jobs", "3"]].concat())?;
        if a != b || a != c {
            return Err(format!("{base:?}: reports differ between job counts"));
        }
        if a.len() < 100 {
            return Err(format!("{base:?}: suspiciously short report"));
        }
    }
    Ok("byte-identical JSON for --jobs 1, 3 and 4".into())
}

fn main() {
    let cat = build_catalog();
    let criteria: Vec<(&str, Check)> = vec![
        ("1 exact suite", Box::new(|| exact_suite(&cat))),
        ("2 numeric suite", Box::new(|| numeric_suite(&cat))),
        ("3 theta dual forms", Box::new(theta_dual)),
        ("4 splitting closed form", Box::new(splitting)),
        ("5 D_n functional equations", Box::new(|| functional_equations(&cat))),
        (
            "6 sixth-order Appell forms",
            Box::new(|| exact_records(&cat, &["SIXTH-APPELL-PHI", "SIXTH-APPELL-PSI"], SIXTH_ORDER)),
        ),
        ("7 rationality", Box::new(|| rationality(&cat))),
        ("8 mutation sensitivity", Box::new(|| mutation_sensitivity(&cat))),
        ("9 determinism", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        match check() {
            Ok(msg) => println!("PASS  criterion {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  criterion {name}:\n    {msg}");
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
