use std::collections::BTreeMap;

use qsplit::catalog::{build_catalog, families, id_key, parse_catalog, to_json, Engines, Field, Role};
use qsplit::cli;

fn schema(name: &str) -> jsonschema::Validator {
    let path = format!("{}/schema/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn assert_valid(v: &jsonschema::Validator, doc: &serde_json::Value) {
    let errors: Vec<String> = v.iter_errors(doc).take(5).map(|e| format!("{} at {}", e, e.instance_path)).collect();
    assert!(errors.is_empty(), "{errors:#?}");
}

#[test]
fn family_sizes() {
    let cat = build_catalog();
    let mut sizes: BTreeMap<&str, usize> = BTreeMap::new();
    for r in &cat {
        *sizes.entry(r.family.as_str()).or_default() += 1;
    }
    let expect = [
        ("TENTH", 6),
        ("MTC", 3),
        ("SIXTH", 3),
        ("G", 3),
        ("HM-COR", 2),
        ("SPLIT", 3),
        ("N2", 8),
        ("N3", 11),
        ("N4", 1),
        ("PRELIM", 7),
        ("JLAW", 9),
        ("PROD", 5),
        ("WEIER", 3),
        ("ASD", 1),
        ("DN-FE", 5),
        ("TH8", 11),
    ];
    for (f, n) in expect {
        assert_eq!(sizes.get(f), Some(&n), "family {f}");
    }
    assert_eq!(cat.len(), expect.iter().map(|e| e.1).sum::<usize>());
    assert_eq!(families().len(), expect.len());
}

#[test]
fn ids_are_unique_and_sorted() {
    let cat = build_catalog();
    for w in cat.windows(2) {
        assert!(id_key(&w[0].id) < id_key(&w[1].id), "{} then {}", w[0].id, w[1].id);
    }
}

#[test]
fn every_record_is_well_formed() {
    for r in build_catalog() {
        r.validate().unwrap();
        assert!(!r.provenance.section.is_empty(), "{}", r.id);
        assert!(!r.provenance.quote.is_empty(), "{}", r.id);
        assert!(r.free_vars.iter().filter(|v| v.role == Role::Formal).count() <= 1, "{}", r.id);
        for sub in &r.expr {
            assert!(sub.expr.terms.len() >= 2, "{} {} is trivially zero", r.id, sub.label);
            if r.field == Field::Q {
                assert!(sub.expr.is_rational(), "{} {} uses ω outside a Q(ω) record", r.id, sub.label);
            }
        }
    }
}

#[test]
fn only_the_fourth_roots_record_is_numeric_only() {
    let numeric: Vec<String> = build_catalog().into_iter().filter(|r| r.engines == Engines::Numeric).map(|r| r.id).collect();
    assert_eq!(numeric, ["JLAW-ROOTS-4"]);
}

#[test]
fn dump_round_trips_and_is_stable() {
    let cat = build_catalog();
    let text = to_json(&cat).unwrap();
    assert!(text.ends_with('\n'));
    assert_eq!(parse_catalog(&text).unwrap(), cat);
    assert_eq!(to_json(&parse_catalog(&text).unwrap()).unwrap(), text);
}

#[test]
fn dump_matches_schema() {
    let text = to_json(&build_catalog()).unwrap();
    assert_valid(&schema("catalog.schema.json"), &serde_json::from_str(&text).unwrap());
}

#[test]
fn reports_match_schema() {
    let v = schema("report.schema.json");
    for args in [
        &["qsplit", "report", "--engine", "numeric", "--family", "JLAW"][..],
        &["qsplit", "report", "JLAW-FLIP", "JLAW-ROOTS-4", "--order", "12", "--timings"],
        &["qsplit", "report", "--family", "TENTH", "--tag", "numeric-only"],
    ] {
        let mut out = Vec::new();
        let code = cli::run(args.iter().copied(), &mut out, &mut Vec::new());
        assert_eq!(code, 0, "{args:?}");
        assert_valid(&v, &serde_json::from_slice(&out).unwrap());
    }
}

#[test]
fn schema_rejects_a_broken_record() {
    let mut doc: serde_json::Value = serde_json::from_str(&to_json(&build_catalog()[..1]).unwrap()).unwrap();
    doc[0]["scale"] = 0.into();
    assert!(!schema("catalog.schema.json").is_valid(&doc));
}
