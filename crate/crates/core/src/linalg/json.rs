//! Matrix and vector JSON: `{"rows": m, "cols": n, "entries": [[scalar, …], …]}`.

use serde_json::{json, Value};

use super::{Matrix, Vector};
use crate::error::ParseError;
use crate::scalar_core::format::{scalar_from_json, scalar_to_json};
use crate::scalar_core::EltScalar;

pub fn vector_to_json(v: &Vector<EltScalar>) -> Value {
    Value::Array(v.entries().iter().map(scalar_to_json).collect())
}

pub fn vector_from_json(v: &Value) -> Result<Vector<EltScalar>, ParseError> {
    let items = v
        .as_array()
        .ok_or_else(|| ParseError::new("vector must be a JSON array"))?;
    items
        .iter()
        .enumerate()
        .map(|(i, x)| {
            scalar_from_json(x).map_err(|e| ParseError::new(format!("entry {i}: {}", e.message)))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Vector)
}

pub fn matrix_to_json(m: &Matrix<EltScalar>) -> Value {
    let entries: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array((0..m.cols()).map(|j| scalar_to_json(m.get(i, j))).collect()))
        .collect();
    json!({"rows": m.rows(), "cols": m.cols(), "entries": entries})
}

pub fn matrix_from_json(v: &Value) -> Result<Matrix<EltScalar>, ParseError> {
    let dim = |key: &str| {
        v.get(key)
            .and_then(Value::as_u64)
            .map(|n| n as usize)
            .ok_or_else(|| ParseError::new(format!("missing or invalid `{key}`")))
    };
    let rows = dim("rows")?;
    let cols = dim("cols")?;
    let entries = v
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| ParseError::new("missing `entries` array"))?;
    if entries.len() != rows {
        return Err(ParseError::new(format!(
            "`entries` has {} rows, expected {rows}",
            entries.len()
        )));
    }
    let mut flat = Vec::with_capacity(rows * cols);
    for (i, row) in entries.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| ParseError::new(format!("row {i} is not an array")))?;
        if row.len() != cols {
            return Err(ParseError::new(format!(
                "row {i} has {} entries, expected {cols}",
                row.len()
            )));
        }
        for (j, x) in row.iter().enumerate() {
            flat.push(
                scalar_from_json(x)
                    .map_err(|e| ParseError::new(format!("entry ({i},{j}): {}", e.message)))?,
            );
        }
    }
    Matrix::new(rows, cols, flat).map_err(|e| ParseError::new(e.to_string()))
}
