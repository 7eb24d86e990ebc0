//! Canonical JSON for polynomials, tableaux and patterns.
//!
//! Objects are built as [`serde_json::Value`] maps, whose keys serialize in
//! sorted order, and printed compactly, so parsing and re-serializing a
//! canonical document reproduces it byte for byte. Coefficients are written
//! as exact JSON integers of any size.

use std::collections::BTreeSet;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::algebra::LaurentPolynomial;
use crate::combinat::{AlphabetKind, GTPattern, KingPattern, Letter, OrthogonalPattern, Tableau};
use crate::error::{Error, Result};

/// A parsed input document: a tableau or one of the pattern kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Tableau(Tableau),
    Gt(GTPattern),
    King(KingPattern),
    Orthogonal(OrthogonalPattern),
}

impl Document {
    pub fn to_value(&self) -> Value {
        match self {
            Document::Tableau(t) => tableau_to_value(t),
            Document::Gt(p) => gt_to_value(p),
            Document::King(p) => king_to_value(p),
            Document::Orthogonal(p) => orthogonal_to_value(p),
        }
    }

    pub fn from_value(v: &Value) -> Result<Self> {
        let rows = field(v, "rows")?.as_array().ok_or_else(|| parse_err("`rows` must be an array"))?;
        let textual = rows.iter().flat_map(|r| r.as_array().into_iter().flatten()).any(Value::is_string);
        if textual || v.get("shape").is_some() {
            return tableau_from_value(v).map(Document::Tableau);
        }
        match str_field(v, "kind")? {
            "gt" => gt_from_value(v).map(Document::Gt),
            "king" => king_from_value(v).map(Document::King),
            "orthogonal" => orthogonal_from_value(v).map(Document::Orthogonal),
            "ssyt" => tableau_from_value(v).map(Document::Tableau),
            other => Err(parse_err(format!("unknown pattern kind `{other}`"))),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::from_value(&parse_value(s)?)
    }
}

pub fn parse_value(s: &str) -> Result<Value> {
    serde_json::from_str(s).map_err(|e| parse_err(e.to_string()))
}

/// Compact, key-sorted rendering.
pub fn to_canonical_string(v: &Value) -> String {
    serde_json::to_string(v).expect("values always serialize")
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| parse_err(format!("missing field `{key}`")))
}

fn str_field<'a>(v: &'a Value, key: &str) -> Result<&'a str> {
    field(v, key)?.as_str().ok_or_else(|| parse_err(format!("`{key}` must be a string")))
}

fn usize_field(v: &Value, key: &str) -> Result<usize> {
    field(v, key)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| parse_err(format!("`{key}` must be a nonnegative integer")))
}

fn int_array<T: TryFrom<i64>>(v: &Value, what: &str) -> Result<Vec<T>> {
    v.as_array()
        .ok_or_else(|| parse_err(format!("{what} must be an array")))?
        .iter()
        .map(|x| {
            x.as_i64().and_then(|x| T::try_from(x).ok()).ok_or_else(|| parse_err(format!("bad integer in {what}")))
        })
        .collect()
}

pub fn poly_to_value(f: &LaurentPolynomial) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .map(|(m, c)| {
            let coef = Number::from_str(&c.to_string()).expect("integers are valid JSON numbers");
            json!({ "exp": m.exponents(), "coef": coef })
        })
        .collect();
    json!({ "nvars": f.nvars(), "terms": terms })
}

pub fn poly_from_value(v: &Value) -> Result<LaurentPolynomial> {
    let nvars = usize_field(v, "nvars")?;
    let terms = field(v, "terms")?.as_array().ok_or_else(|| parse_err("`terms` must be an array"))?;
    let mut parsed = Vec::with_capacity(terms.len());
    for t in terms {
        let exp: Vec<i32> = int_array(field(t, "exp")?, "`exp`")?;
        let coef = match field(t, "coef")? {
            Value::Number(n) => {
                BigInt::from_str(&n.to_string()).map_err(|_| parse_err(format!("bad coefficient {n}")))?
            }
            _ => return Err(parse_err("`coef` must be an integer")),
        };
        parsed.push((exp, coef));
    }
    LaurentPolynomial::from_terms(nvars, parsed)
}

pub fn tableau_to_value(t: &Tableau) -> Value {
    let rows: Vec<Vec<String>> =
        t.rows().iter().map(|r| r.iter().map(|&l| letter_to_string(t.kind(), l)).collect()).collect();
    json!({ "kind": t.kind().name(), "n": t.kind().n(), "shape": t.shape().parts(), "rows": rows })
}

fn letter_to_string(kind: AlphabetKind, l: Letter) -> String {
    match kind {
        AlphabetKind::TypeA(_) => l.0.to_string(),
        _ => l.to_signed_string(),
    }
}

pub fn tableau_from_value(v: &Value) -> Result<Tableau> {
    let n = usize_field(v, "n")?;
    let kind = match str_field(v, "kind")? {
        "ssyt" => AlphabetKind::TypeA(n),
        "king" => AlphabetKind::Signed(n),
        "orthogonal" => AlphabetKind::SignedInf(n),
        other => return Err(parse_err(format!("unknown tableau kind `{other}`"))),
    };
    let rows = field(v, "rows")?.as_array().ok_or_else(|| parse_err("`rows` must be an array"))?;
    let mut letters = Vec::with_capacity(rows.len());
    for row in rows {
        let row = row.as_array().ok_or_else(|| parse_err("tableau rows must be arrays"))?;
        let parsed: Result<Vec<Letter>> = row
            .iter()
            .map(|c| {
                let s = c.as_str().ok_or_else(|| parse_err("tableau entries must be strings"))?;
                match kind {
                    AlphabetKind::TypeA(_) => Letter::parse_plain(s),
                    _ => Letter::parse_signed(s),
                }
            })
            .collect();
        letters.push(parsed?);
    }
    let t = Tableau::new(kind, letters)?;
    if let Some(shape) = v.get("shape") {
        let shape: Vec<u32> = int_array(shape, "`shape`")?;
        if shape.as_slice() != t.shape().parts() {
            return Err(Error::ShapeMismatch(format!("declared shape {shape:?} but rows give {}", t.shape())));
        }
    }
    Ok(t)
}

fn rows_value(p: &GTPattern) -> Value {
    json!(p.rows())
}

fn rows_from_value(v: &Value) -> Result<GTPattern> {
    let rows = field(v, "rows")?.as_array().ok_or_else(|| parse_err("`rows` must be an array"))?;
    let rows: Vec<Vec<i64>> = rows.iter().map(|r| int_array(r, "pattern row")).collect::<Result<_>>()?;
    GTPattern::from_padded_rows(rows)
}

pub fn gt_to_value(p: &GTPattern) -> Value {
    json!({ "kind": "gt", "rows": rows_value(p) })
}

pub fn king_to_value(p: &KingPattern) -> Value {
    json!({ "kind": "king", "rows": rows_value(p.as_gt()) })
}

pub fn orthogonal_to_value(p: &OrthogonalPattern) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), "orthogonal".into());
    m.insert("rows".into(), rows_value(p.king().as_gt()));
    m.insert("circled".into(), json!(p.circled()));
    Value::Object(m)
}

pub fn gt_from_value(v: &Value) -> Result<GTPattern> {
    let p = rows_from_value(v)?;
    if !crate::combinat::validate_gt(&p) {
        return Err(Error::InvalidPattern("rows do not interlace".into()));
    }
    Ok(p)
}

pub fn king_from_value(v: &Value) -> Result<KingPattern> {
    KingPattern::new(rows_from_value(v)?)
}

pub fn orthogonal_from_value(v: &Value) -> Result<OrthogonalPattern> {
    let circled: BTreeSet<usize> = match v.get("circled") {
        Some(c) => int_array::<usize>(c, "`circled`")?.into_iter().collect(),
        None => BTreeSet::new(),
    };
    OrthogonalPattern::new(king_from_value(v)?, circled)
}
