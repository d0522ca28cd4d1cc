//! Text formats for matrices, chain complexes and presentations.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::abelian::{AbelianError, ChainComplex, IntMatrix};
use crate::grouppres::{Presentation, PresentationError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("matrix, line {line}: {msg}")]
    Matrix { line: usize, msg: String },
    #[error("complex: {0}")]
    Complex(String),
    #[error("complex: {0}")]
    Abelian(#[from] AbelianError),
    #[error("presentation: {0}")]
    Presentation(#[from] PresentationError),
}

/// `rows cols` followed by row-major integers; `#` starts a comment line.
pub fn parse_matrix(text: &str) -> Result<IntMatrix, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut entries = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| FormatError::Matrix { line: i + 1, msg };
        let mut toks = line.split_whitespace();
        if header.is_none() {
            let mut dim = || -> Result<usize, FormatError> {
                toks.next()
                    .ok_or_else(|| err("expected `rows cols`".into()))?
                    .parse()
                    .map_err(|_| err("bad dimension".into()))
            };
            header = Some((dim()?, dim()?));
        }
        for t in toks {
            entries.push(t.parse::<BigInt>().map_err(|_| err(format!("bad integer {t:?}")))?);
        }
    }
    let (rows, cols) = header.ok_or(FormatError::Matrix {
        line: 0,
        msg: "empty input".into(),
    })?;
    if entries.len() != rows * cols {
        return Err(FormatError::Matrix {
            line: 0,
            msg: format!("{rows}x{cols} matrix needs {} entries, got {}", rows * cols, entries.len()),
        });
    }
    Ok(IntMatrix::from_entries(rows, cols, entries)?)
}

pub fn write_matrix(m: &IntMatrix) -> String {
    let mut s = format!("{} {}\n", m.rows(), m.cols());
    for r in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|c| m.get(r, c).to_string()).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Value>,
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    dims: Vec<usize>,
    boundaries: Vec<MatrixJson>,
}

fn int_from_json(v: &Value) -> Result<BigInt, FormatError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from))
            .ok_or_else(|| FormatError::Complex(format!("not an integer: {n}"))),
        Value::String(s) => s.parse().map_err(|_| FormatError::Complex(format!("not an integer: {s:?}"))),
        other => Err(FormatError::Complex(format!("not an integer: {other}"))),
    }
}

fn int_to_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(n.to_string()),
    }
}

/// JSON object `{"dims": [...], "boundaries": [{"rows", "cols", "entries"}]}`
/// where `boundaries[k]` is the map from degree `k+1` to degree `k`.
pub fn parse_complex(text: &str) -> Result<ChainComplex, FormatError> {
    let raw: ComplexJson = serde_json::from_str(text).map_err(|e| FormatError::Complex(e.to_string()))?;
    let mut mats = Vec::new();
    for (k, m) in raw.boundaries.iter().enumerate() {
        let entries = m.entries.iter().map(int_from_json).collect::<Result<Vec<_>, _>>()?;
        let mat = IntMatrix::from_entries(m.rows, m.cols, entries)
            .map_err(|e| FormatError::Complex(format!("boundary of degree {}: {e}", k + 1)))?;
        mats.push(mat);
    }
    Ok(ChainComplex::new(raw.dims, mats)?)
}

pub fn write_complex(c: &ChainComplex) -> String {
    let raw = ComplexJson {
        dims: c.dims().to_vec(),
        boundaries: c
            .boundaries()
            .iter()
            .map(|m| MatrixJson {
                rows: m.rows(),
                cols: m.cols(),
                entries: m.entries().iter().map(int_to_json).collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&raw).expect("serializable") + "\n"
}

pub fn parse_presentation(text: &str) -> Result<Presentation, FormatError> {
    Ok(Presentation::parse(text)?)
}

pub fn write_presentation(p: &Presentation) -> String {
    p.to_text()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_format() {
        let m = parse_matrix("# example\n2 2\n2 4\n6 8\n").unwrap();
        assert_eq!(m, IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]));
        assert_eq!(parse_matrix(&write_matrix(&m)).unwrap(), m);
        assert_eq!(parse_matrix("2 3 1 2 3 4 5 6").unwrap().get(1, 0), &BigInt::from(4));
        let empty = parse_matrix("0 3\n").unwrap();
        assert_eq!((empty.rows(), empty.cols()), (0, 3));
        assert!(matches!(parse_matrix("2 2\n1 2 3"), Err(FormatError::Matrix { .. })));
        assert!(parse_matrix("2 x\n").is_err());
        assert!(parse_matrix("").is_err());
        let big = parse_matrix("1 1\n123456789012345678901234567890\n").unwrap();
        assert_eq!(parse_matrix(&write_matrix(&big)).unwrap(), big);
    }

    #[test]
    fn complex_format() {
        let text = r#"{"dims": [1, 2, 1], "boundaries": [
            {"rows": 1, "cols": 2, "entries": [0, 0]},
            {"rows": 2, "cols": 1, "entries": [0, 2]}]}"#;
        let c = parse_complex(text).unwrap();
        assert_eq!(c.homology()[1].to_string(), "Z + Z/2");
        assert_eq!(parse_complex(&write_complex(&c)).unwrap(), c);
        let bad = r#"{"dims": [1, 2, 1], "boundaries": [
            {"rows": 1, "cols": 2, "entries": [1, 1]},
            {"rows": 2, "cols": 1, "entries": [1, 0]}]}"#;
        let e = parse_complex(bad).unwrap_err();
        assert!(e.to_string().contains("degree 2"), "{e}");
        let shape = r#"{"dims": [1, 2], "boundaries": [{"rows": 1, "cols": 2, "entries": [1]}]}"#;
        assert!(parse_complex(shape).is_err());
        let strs = r#"{"dims": [1, 1], "boundaries": [{"rows": 1, "cols": 1, "entries": ["99999999999999999999999"]}]}"#;
        let c = parse_complex(strs).unwrap();
        assert_eq!(parse_complex(&write_complex(&c)).unwrap(), c);
    }

    #[test]
    fn presentation_format() {
        let p = parse_presentation("gens: a b c\nrel: a b a^-1 b^-1 c^-1\n").unwrap();
        assert_eq!(p.relators().len(), 1);
        assert_eq!(parse_presentation(&write_presentation(&p)).unwrap(), p);
        assert!(parse_presentation("gens: a\nrel: b\n").is_err());
    }
}
