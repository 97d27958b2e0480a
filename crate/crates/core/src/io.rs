//! Interchange formats.
//!
//! * Tableau: `{"kind":"tableau","inner":[..],"rows":[[..],..]}`, rows bottom
//!   to top; `inner` is omitted for straight shapes.
//! * GT pattern: `{"kind":"gt","shape":"triangular"|"parallelogram","rows":[..]}`,
//!   rows apex first; non-integer entries are `"p/q"` strings.
//! * Matrix: `{"kind":"matrix","rows":[[..],..]}`, or CSV with one matrix row
//!   per line.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::gt::{GtPattern, GtShape, RationalPattern};
use crate::partition::Partition;
use crate::spectral::FrameMatrix;
use crate::tableau::{Label, Tableau};

/// Any object the formats can carry.
#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Tableau(Tableau),
    Pattern(RationalPattern),
    Matrix(FrameMatrix),
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum Repr {
    Tableau {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        inner: Option<Vec<usize>>,
        rows: Vec<Vec<Label>>,
    },
    Gt {
        shape: ShapeRepr,
        rows: Vec<Vec<Value>>,
    },
    Matrix {
        rows: Vec<Vec<f64>>,
    },
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum ShapeRepr {
    Triangular,
    Parallelogram,
}

fn schema_error(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

/// Parses a JSON document, or a CSV matrix when the text is not JSON.
pub fn parse_document(text: &str) -> Result<Document> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_csv_matrix(text).map(Document::Matrix)
    }
}

pub fn parse_json(text: &str) -> Result<Document> {
    let repr: Repr = serde_json::from_str(text).map_err(schema_error)?;
    match repr {
        Repr::Tableau { inner, rows } => {
            let inner = Partition::new(inner.unwrap_or_default())?;
            Ok(Document::Tableau(Tableau::skew(inner, rows)))
        }
        Repr::Gt { shape, rows } => {
            let shape = match shape {
                ShapeRepr::Triangular => GtShape::Triangular,
                ShapeRepr::Parallelogram => GtShape::Parallelogram,
            };
            let rows = rows
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(j, v)| parse_entry(v, i + 1, j + 1))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Document::Pattern(GtPattern::new(shape, rows)))
        }
        Repr::Matrix { rows } => FrameMatrix::from_rows(&rows).map(Document::Matrix),
    }
}

fn parse_entry(v: &Value, row: usize, col: usize) -> Result<BigRational> {
    let bad = |what: &str| Error::Parse(format!("GT entry at row {row}, column {col}: {what}"));
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|i| BigRational::from_integer(BigInt::from(i)))
            .ok_or_else(|| bad("non-integer numbers must be written as \"p/q\" strings")),
        Value::String(s) => parse_rational(s).ok_or_else(|| bad(&format!("cannot parse {s:?} as p/q"))),
        _ => Err(bad("expected a number or a \"p/q\" string")),
    }
}

/// Parses `"p"` or `"p/q"` with `q != 0`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim().parse::<BigInt>().ok()?, q.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::from(1)),
    };
    if q == BigInt::from(0) {
        return None;
    }
    Some(BigRational::new(p, q))
}

/// Parses a matrix given either as JSON or as CSV.
pub fn parse_matrix(text: &str) -> Result<FrameMatrix> {
    match parse_document(text)? {
        Document::Matrix(m) => Ok(m),
        _ => Err(Error::Parse("expected a matrix".into())),
    }
}

pub fn parse_csv_matrix(text: &str) -> Result<FrameMatrix> {
    let rows = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .enumerate()
        .map(|(i, line)| {
            line.split(',')
                .enumerate()
                .map(|(j, cell)| {
                    cell.trim().parse::<f64>().map_err(|_| {
                        Error::Parse(format!(
                            "CSV row {}, column {}: {:?} is not a number",
                            i + 1,
                            j + 1,
                            cell.trim()
                        ))
                    })
                })
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    FrameMatrix::from_rows(&rows)
}

pub fn tableau_to_json(tableau: &Tableau) -> Value {
    let inner = (!tableau.is_straight()).then(|| tableau.inner().parts().to_vec());
    serde_json::to_value(Repr::Tableau { inner, rows: tableau.rows().to_vec() })
        .expect("tableau serializes")
}

/// Entries that can be written into the GT schema.
pub trait JsonEntry {
    fn to_json(&self) -> Value;
}

impl JsonEntry for i64 {
    fn to_json(&self) -> Value {
        Value::from(*self)
    }
}

impl JsonEntry for BigRational {
    fn to_json(&self) -> Value {
        if self.is_integer() {
            if let Ok(i) = i64::try_from(self.to_integer()) {
                return Value::from(i);
            }
        }
        Value::String(self.to_string())
    }
}

pub fn pattern_to_json<E: crate::gt::Entry + JsonEntry>(pattern: &GtPattern<E>) -> Value {
    let shape = match pattern.shape() {
        GtShape::Triangular => ShapeRepr::Triangular,
        GtShape::Parallelogram => ShapeRepr::Parallelogram,
    };
    let rows = pattern
        .rows()
        .iter()
        .map(|row| row.iter().map(JsonEntry::to_json).collect())
        .collect();
    serde_json::to_value(Repr::Gt { shape, rows }).expect("pattern serializes")
}

pub fn matrix_to_json(matrix: &FrameMatrix) -> Value {
    serde_json::to_value(Repr::Matrix { rows: matrix.to_rows() }).expect("matrix serializes")
}

pub fn document_to_json(doc: &Document) -> Value {
    match doc {
        Document::Tableau(t) => tableau_to_json(t),
        Document::Pattern(p) => pattern_to_json(p),
        Document::Matrix(m) => matrix_to_json(m),
    }
}
