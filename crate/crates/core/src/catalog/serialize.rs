use crate::error::{Error, Result};

use super::record::IdentityRecord;
use super::records::id_key;

/// Renders records as pretty JSON, sorted by id, with sorted keys and a
/// trailing newline.
pub fn to_json(records: &[IdentityRecord]) -> Result<String> {
    let mut records: Vec<&IdentityRecord> = records.iter().collect();
    records.sort_by_key(|r| id_key(&r.id));
    // Routing through `Value` sorts object keys (serde_json's map is a BTreeMap).
    let value = serde_json::to_value(records).map_err(|e| Error::Parse(e.to_string()))?;
    let mut out = serde_json::to_string_pretty(&value).map_err(|e| Error::Parse(e.to_string()))?;
    out.push('\n');
    Ok(out)
}

/// Parses and validates a catalog document.
pub fn parse_catalog(text: &str) -> Result<Vec<IdentityRecord>> {
    let records: Vec<IdentityRecord> = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("catalog line {} column {}: {e}", e.line(), e.column())))?;
    let mut seen = std::collections::BTreeSet::new();
    for r in &records {
        if !seen.insert(r.id.as_str()) {
            return Err(Error::Parse(format!("duplicate id {}", r.id)));
        }
        r.validate()?;
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_catalog;

    #[test]
    fn round_trip() {
        let cat = build_catalog();
        let text = to_json(&cat).unwrap();
        assert!(text.ends_with('\n'));
        assert_eq!(parse_catalog(&text).unwrap(), cat);
        assert_eq!(to_json(&parse_catalog(&text).unwrap()).unwrap(), text);
    }

    #[test]
    fn missing_expr_is_reported() {
        let cat = build_catalog();
        let mut v = serde_json::to_value(&cat[..1]).unwrap();
        v[0].as_object_mut().unwrap().remove("expr");
        let err = parse_catalog(&v.to_string()).unwrap_err();
        assert!(err.to_string().contains("expr"), "{err}");
    }

    #[test]
    fn duplicate_ids_are_rejected() {
        let cat = build_catalog();
        let two = vec![cat[0].clone(), cat[0].clone()];
        assert!(parse_catalog(&to_json(&two).unwrap()).is_err());
    }
}
