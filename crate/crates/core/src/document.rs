//! JSON interchange for covers.
//!
//! A cover is written as
//! `{"source_rhs": .., "target_rhs": .., "f1": .., "f2": .., "degree": n}`
//! with every expression in the text syntax of [`crate::exact::text`]. Since
//! the printed forms are canonical, parse-then-print is the identity on any
//! document this module produced.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::curves::{Cover, CoverMap, HyperellipticCurve};
use crate::error::{Error, Result};
use crate::exact::{parse_ratfunc, parse_tx_poly};
use crate::family::FamilyCertificate;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverDocument {
    pub source_rhs: String,
    pub target_rhs: String,
    pub f1: String,
    pub f2: String,
    pub degree: usize,
}

/// Summary of a [`FamilyCertificate`] as it appears next to a cover document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateBlock {
    pub identity_ok: bool,
    pub pullback: String,
    pub ramification_index: usize,
    pub rh_balanced: bool,
}

impl From<&FamilyCertificate> for CertificateBlock {
    fn from(c: &FamilyCertificate) -> Self {
        CertificateBlock {
            identity_ok: c.identity.holds,
            pullback: c.pullback.to_string(),
            ramification_index: c.ramification.ramification_index,
            rh_balanced: c.ramification.riemann_hurwitz_balanced,
        }
    }
}

fn field_error(field: &str, message: impl ToString) -> Error {
    Error::Field { field: field.to_string(), message: message.to_string() }
}

impl CoverDocument {
    pub fn from_cover(cover: &Cover) -> Self {
        CoverDocument {
            source_rhs: cover.source.rhs().to_string(),
            target_rhs: cover.target.rhs().to_string(),
            f1: cover.map.f1.to_string(),
            f2: cover.map.f2.to_string(),
            degree: cover.degree,
        }
    }

    /// Parses every field, reporting the first one that fails.
    pub fn to_cover(&self) -> Result<Cover> {
        let curve = |field: &str, src: &str| {
            parse_tx_poly(src)
                .and_then(HyperellipticCurve::new)
                .map_err(|e| field_error(field, e))
        };
        let source = curve("source_rhs", &self.source_rhs)?;
        let target = curve("target_rhs", &self.target_rhs)?;
        let f1 = parse_ratfunc(&self.f1).map_err(|e| field_error("f1", e))?;
        let f2 = parse_ratfunc(&self.f2).map_err(|e| field_error("f2", e))?;
        if self.degree == 0 {
            return Err(field_error("degree", "must be positive"));
        }
        Ok(Cover { source, target, map: CoverMap { f1, f2 }, degree: self.degree })
    }

    /// Reads a document from a JSON value: either the document itself or an
    /// object carrying it under `"cover"`.
    pub fn from_value(value: &Value) -> Result<Self> {
        let obj = match value.get("cover") {
            Some(inner) => inner,
            None => value,
        };
        let obj = obj
            .as_object()
            .ok_or_else(|| field_error("cover", "expected a JSON object"))?;
        let text = |field: &str| -> Result<String> {
            match obj.get(field) {
                Some(Value::String(s)) => Ok(s.clone()),
                Some(_) => Err(field_error(field, "expected a string")),
                None => Err(field_error(field, "missing")),
            }
        };
        let degree = match obj.get("degree") {
            Some(v) => v
                .as_u64()
                .and_then(|d| usize::try_from(d).ok())
                .ok_or_else(|| field_error("degree", "expected a non-negative integer"))?,
            None => return Err(field_error("degree", "missing")),
        };
        Ok(CoverDocument {
            source_rhs: text("source_rhs")?,
            target_rhs: text("target_rhs")?,
            f1: text("f1")?,
            f2: text("f2")?,
            degree,
        })
    }

    pub fn from_json(src: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(src)
            .map_err(|e| Error::Parse { position: 0, message: format!("not valid JSON: {e}") })?;
        Self::from_value(&value)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain strings and integers always serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::build_family;

    #[test]
    fn genus_two_document() {
        let doc = CoverDocument::from_cover(&build_family(2).unwrap().cover);
        assert_eq!(doc.f1, "x^3/(9*x^2+24*x+16)");
        assert_eq!(doc.target_rhs, "x^3+(1+t)*x^2+t*x");
        assert_eq!(doc.degree, 3);
    }

    #[test]
    fn round_trip_is_bit_exact() {
        for g in 1..=7 {
            let cover = build_family(g).unwrap().cover;
            let json = CoverDocument::from_cover(&cover).to_json();
            let back = CoverDocument::from_json(&json).unwrap().to_cover().unwrap();
            assert_eq!(back, cover);
            assert_eq!(CoverDocument::from_cover(&back).to_json(), json);
        }
    }

    #[test]
    fn nested_under_cover_key() {
        let doc = CoverDocument::from_cover(&build_family(3).unwrap().cover);
        let wrapped = serde_json::json!({ "command": "generate", "cover": doc });
        assert_eq!(CoverDocument::from_value(&wrapped).unwrap(), doc);
    }

    #[test]
    fn errors_name_the_field() {
        let mut doc = CoverDocument::from_cover(&build_family(2).unwrap().cover);
        doc.f2 = "x*(x+".into();
        let err = doc.to_cover().unwrap_err();
        assert!(matches!(&err, Error::Field { field, .. } if field == "f2"), "{err}");

        let missing = r#"{"source_rhs": "x^3+x", "target_rhs": "x^3+x", "f1": "x", "degree": 1}"#;
        let err = CoverDocument::from_json(missing).unwrap_err();
        assert!(err.to_string().contains("`f2`"), "{err}");

        let bad_degree = r#"{"source_rhs": "x^3+x", "target_rhs": "x^3+x", "f1": "x", "f2": "1", "degree": "3"}"#;
        let err = CoverDocument::from_json(bad_degree).unwrap_err();
        assert!(err.to_string().contains("`degree`"), "{err}");

        let mut doc = CoverDocument::from_cover(&build_family(1).unwrap().cover);
        doc.source_rhs = "x+1".into();
        let err = doc.to_cover().unwrap_err();
        assert!(matches!(&err, Error::Field { field, .. } if field == "source_rhs"), "{err}");
    }
}
