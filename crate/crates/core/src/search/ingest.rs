//! Line-oriented field tables: `label<TAB>[c0,...,c7]` or JSON lines
//! `{"label": ..., "coeffs": [...]}`. Blank lines and `#` comments are
//! ignored.

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;

use crate::algebra::{factor_over_z, IntPolynomial};

use super::SearchError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldRecord {
    pub label: String,
    #[serde(serialize_with = "serialize_poly")]
    pub coeffs: IntPolynomial,
}

fn serialize_poly<S: serde::Serializer>(p: &IntPolynomial, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_list_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IngestWarning {
    pub line: usize,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IngestResult {
    /// Sorted by label, one record per polynomial.
    pub records: Vec<FieldRecord>,
    pub warnings: Vec<IngestWarning>,
    pub duplicates: usize,
}

pub const EXPECTED_DEGREE: usize = 7;

fn parse_line(line: &str) -> Result<(String, IntPolynomial), String> {
    if line.starts_with('{') {
        let v: Value = serde_json::from_str(line).map_err(|e| format!("invalid JSON: {e}"))?;
        let label = v.get("label").and_then(Value::as_str).ok_or("missing string field \"label\"")?;
        let coeffs = v.get("coeffs").and_then(Value::as_array).ok_or("missing array field \"coeffs\"")?;
        let coeffs: Result<Vec<BigInt>, String> = coeffs
            .iter()
            .map(|c| match c {
                Value::Number(n) if n.is_i64() || n.is_u64() => {
                    n.to_string().parse::<BigInt>().map_err(|e| e.to_string())
                }
                Value::String(s) => s.trim().parse::<BigInt>().map_err(|_| format!("bad coefficient {s:?}")),
                other => Err(format!("bad coefficient {other}")),
            })
            .collect();
        return Ok((label.to_string(), IntPolynomial::new(coeffs?)));
    }
    let (label, poly) = line.split_once('\t').ok_or("expected label<TAB>[coefficients]")?;
    let label = label.trim();
    if label.is_empty() {
        return Err("empty label".into());
    }
    let poly = IntPolynomial::parse_list(poly.trim()).map_err(|e| e.to_string())?;
    Ok((label.to_string(), poly))
}

fn validate(f: &IntPolynomial) -> Result<(), String> {
    if f.deg() != EXPECTED_DEGREE || f.is_zero() {
        return Err(format!("degree {} is not {EXPECTED_DEGREE}", f.deg()));
    }
    if !f.is_monic() {
        return Err("not monic".into());
    }
    let fac = factor_over_z(f).map_err(|e| e.to_string())?;
    if fac.factors.len() != 1 || fac.factors[0].1 != 1 {
        return Err("reducible".into());
    }
    Ok(())
}

/// Parses and validates records; bad lines become warnings. Duplicate
/// polynomials keep the smallest label.
pub fn ingest_str(text: &str) -> IngestResult {
    let mut by_poly: BTreeMap<Vec<BigInt>, String> = BTreeMap::new();
    let mut out = IngestResult::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parsed = parse_line(line).and_then(|(label, f)| validate(&f).map(|_| (label, f)));
        match parsed {
            Ok((label, f)) => {
                let key = f.coeffs().to_vec();
                match by_poly.get_mut(&key) {
                    Some(existing) => {
                        out.duplicates += 1;
                        if label < *existing {
                            *existing = label;
                        }
                    }
                    None => {
                        by_poly.insert(key, label);
                    }
                }
            }
            Err(reason) => out.warnings.push(IngestWarning { line: i + 1, reason }),
        }
    }
    out.records = by_poly
        .into_iter()
        .map(|(c, label)| FieldRecord { label, coeffs: IntPolynomial::new(c) })
        .collect();
    out.records.sort_by(|a, b| a.label.cmp(&b.label).then_with(|| a.coeffs.cmp_canonical(&b.coeffs)));
    out
}

pub fn ingest(path: &Path) -> Result<IngestResult, SearchError> {
    let text = std::fs::read_to_string(path).map_err(|e| SearchError::Io(format!("{}: {e}", path.display())))?;
    Ok(ingest_str(&text))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_and_warnings() {
        let text = "# comment\n\
                    a\t[1,-2,-1,3,-5,4,-3,1]\n\
                    {\"label\": \"b\", \"coeffs\": [4,-1,2,-2,-2,-1,0,1]}\n\
                    c\t[1,0,1]\n\
                    d\t[-1,0,0,0,0,0,0,1]\n\
                    garbage\n\
                    z\t[1,-2,-1,3,-5,4,-3,1]\n\
                    \n";
        let r = ingest_str(text);
        assert_eq!(r.records.len(), 2);
        assert_eq!(r.records[0].label, "a");
        assert_eq!(r.records[1].label, "b");
        assert_eq!(r.duplicates, 1);
        let lines: Vec<usize> = r.warnings.iter().map(|w| w.line).collect();
        assert_eq!(lines, vec![4, 5, 6]);
        assert!(ingest_str("").records.is_empty());
    }
}
