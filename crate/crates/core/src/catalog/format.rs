//! The algebra document format.
//!
//! A document is UTF-8 JSON with scalars written as strings. The canonical
//! form produced by [`serialize`] has sorted keys, one bracket per line,
//! only nonzero brackets, sorted by `(i, j)`:
//!
//! ```text
//! {
//!   "brackets": [
//!     {"coeffs": ["0", "0", "1"], "i": 0, "j": 1}
//!   ],
//!   "dim": 3,
//!   "field": {"type": "Q"},
//!   "names": ["x", "y", "z"]
//! }
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::Value;

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::Vector;

/// An algebra together with free-form string tags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub algebra: LieAlgebra,
    pub meta: BTreeMap<String, String>,
}

impl AlgebraDocument {
    pub fn new(algebra: LieAlgebra) -> Self {
        AlgebraDocument {
            algebra,
            meta: BTreeMap::new(),
        }
    }

    pub fn with_meta(mut self, key: &str, value: impl ToString) -> Self {
        self.meta.insert(key.to_string(), value.to_string());
        self
    }
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn json_list<'a>(items: impl Iterator<Item = String> + 'a) -> String {
    format!("[{}]", items.collect::<Vec<_>>().join(", "))
}

fn field_json(field: Field) -> String {
    match field.modulus() {
        None => r#"{"type": "Q"}"#.to_string(),
        Some(p) => format!(r#"{{"p": {p}, "type": "GF"}}"#),
    }
}

pub fn serialize(l: &LieAlgebra) -> String {
    serialize_document(&AlgebraDocument::new(l.clone()))
}

pub fn serialize_document(doc: &AlgebraDocument) -> String {
    let l = &doc.algebra;
    let mut out = String::from("{\n");
    let brackets = l.nonzero_brackets();
    if brackets.is_empty() {
        out.push_str("  \"brackets\": [],\n");
    } else {
        out.push_str("  \"brackets\": [\n");
        for (k, (i, j, c)) in brackets.iter().enumerate() {
            let coeffs = json_list(c.iter().map(|x| json_str(&x.to_string())));
            let sep = if k + 1 == brackets.len() { "" } else { "," };
            let _ = writeln!(out, "    {{\"coeffs\": {coeffs}, \"i\": {i}, \"j\": {j}}}{sep}");
        }
        out.push_str("  ],\n");
    }
    let _ = writeln!(out, "  \"dim\": {},", l.dim());
    let _ = writeln!(out, "  \"field\": {},", field_json(l.field()));
    if !doc.meta.is_empty() {
        let entries: Vec<String> = doc
            .meta
            .iter()
            .map(|(k, v)| format!("{}: {}", json_str(k), json_str(v)))
            .collect();
        let _ = writeln!(out, "  \"meta\": {{{}}},", entries.join(", "));
    }
    let _ = writeln!(out, "  \"names\": {}", json_list(l.names().iter().map(|n| json_str(n))));
    out.push_str("}\n");
    out
}

pub fn parse(text: &str) -> Result<LieAlgebra> {
    Ok(parse_document(text)?.algebra)
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

fn get<'a>(obj: &'a serde_json::Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| malformed(format!("missing key \"{key}\"")))
}

fn as_index(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| malformed(format!("{what} must be a non-negative integer")))
}

fn parse_field(v: &Value) -> Result<Field> {
    let obj = v.as_object().ok_or_else(|| malformed("\"field\" must be an object"))?;
    match get(obj, "type")?.as_str() {
        Some("Q") => Ok(Field::Q),
        Some("GF") => {
            let p = get(obj, "p")?.as_u64().ok_or_else(|| malformed("\"p\" must be an integer"))?;
            Field::prime(p)
        }
        _ => Err(malformed("field type must be \"Q\" or \"GF\"")),
    }
}

/// Parses a document and checks the Jacobi identity.
pub fn parse_document(text: &str) -> Result<AlgebraDocument> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let obj = value.as_object().ok_or_else(|| malformed("document must be an object"))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "brackets" | "dim" | "field" | "meta" | "names") {
            return Err(malformed(format!("unexpected key \"{key}\"")));
        }
    }
    let field = parse_field(get(obj, "field")?)?;
    let dim = as_index(get(obj, "dim")?, "\"dim\"")?;
    let names: Vec<String> = get(obj, "names")?
        .as_array()
        .ok_or_else(|| malformed("\"names\" must be an array"))?
        .iter()
        .map(|n| n.as_str().map(str::to_string).ok_or_else(|| malformed("names must be strings")))
        .collect::<Result<_>>()?;
    if names.len() != dim {
        return Err(malformed(format!("{} names for dimension {dim}", names.len())));
    }
    let mut brackets = Vec::new();
    for entry in get(obj, "brackets")?
        .as_array()
        .ok_or_else(|| malformed("\"brackets\" must be an array"))?
    {
        let e = entry.as_object().ok_or_else(|| malformed("bracket entries must be objects"))?;
        let i = as_index(get(e, "i")?, "\"i\"")?;
        let j = as_index(get(e, "j")?, "\"j\"")?;
        let coeffs: Vector = get(e, "coeffs")?
            .as_array()
            .ok_or_else(|| malformed("\"coeffs\" must be an array"))?
            .iter()
            .map(|c| {
                c.as_str()
                    .ok_or_else(|| malformed("coefficients must be strings"))
                    .and_then(|s| field.parse(s))
            })
            .collect::<Result<_>>()?;
        if coeffs.len() != dim {
            return Err(malformed(format!("bracket ({i}, {j}) has {} coefficients, expected {dim}", coeffs.len())));
        }
        brackets.push((i, j, coeffs));
    }
    let mut meta = BTreeMap::new();
    if let Some(m) = obj.get("meta") {
        let m = m.as_object().ok_or_else(|| malformed("\"meta\" must be an object"))?;
        for (k, v) in m {
            let v = v.as_str().ok_or_else(|| malformed("meta values must be strings"))?;
            meta.insert(k.clone(), v.to_string());
        }
    }
    let algebra = LieAlgebra::from_brackets(field, names, &brackets)?;
    Ok(AlgebraDocument { algebra, meta })
}

#[cfg(test)]
mod tests {
    use super::*;

    const H3: &str = r#"{
  "brackets": [
    {"coeffs": ["0", "0", "1"], "i": 0, "j": 1}
  ],
  "dim": 3,
  "field": {"type": "Q"},
  "names": ["x", "y", "z"]
}
"#;

    #[test]
    fn heisenberg_round_trip() {
        let l = parse(H3).unwrap();
        assert_eq!(l.dim(), 3);
        assert_eq!(l.basis_bracket(0, 1), vec![Field::Q.zero(), Field::Q.zero(), Field::Q.one()]);
        assert_eq!(serialize(&l), H3);
    }

    #[test]
    fn jacobi_violation_reported() {
        let bad = r#"{"field": {"type": "Q"}, "dim": 3, "names": ["a", "b", "c"], "brackets": [
            {"i": 0, "j": 1, "coeffs": ["1", "0", "0"]},
            {"i": 1, "j": 2, "coeffs": ["0", "1", "0"]},
            {"i": 0, "j": 2, "coeffs": ["0", "0", "1"]}]}"#;
        assert_eq!(parse(bad), Err(Error::JacobiViolation(0, 1, 2)));
    }

    #[test]
    fn syntax_errors_have_positions() {
        match parse("{\n  \"dim\": 3,\n  oops\n}") {
            Err(Error::Syntax { line, column, .. }) => {
                assert_eq!(line, 3);
                assert!(column > 0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn index_errors() {
        let doc = r#"{"field": {"type": "GF", "p": 3}, "dim": 2, "names": ["a", "b"],
            "brackets": [{"i": 1, "j": 0, "coeffs": ["1", "0"]}]}"#;
        assert!(matches!(parse(doc), Err(Error::IndexOutOfRange(_))));
        let doc = r#"{"field": {"type": "GF", "p": 3}, "dim": 2, "names": ["a", "b"],
            "brackets": [{"i": 0, "j": 5, "coeffs": ["1", "0"]}]}"#;
        assert!(matches!(parse(doc), Err(Error::IndexOutOfRange(_))));
    }

    #[test]
    fn meta_and_prime_fields() {
        let doc = r#"{
  "brackets": [],
  "dim": 2,
  "field": {"p": 5, "type": "GF"},
  "meta": {"origin": "test", "seed": "7"},
  "names": ["e0", "e1"]
}
"#;
        let d = parse_document(doc).unwrap();
        assert_eq!(d.meta.get("seed").map(String::as_str), Some("7"));
        assert_eq!(serialize_document(&d), doc);
    }
}
