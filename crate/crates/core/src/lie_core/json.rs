//! Structure-constant JSON:
//! `{"dim": n, "base": ["x1", …], "alpha": [{"i": 1, "j": 2, "l": 3, "scalar": …}, …]}`.
//!
//! Indices are 1-based. Omitted entries are `0_R`; an entry whose mirror
//! `(j, i, l)` is omitted fills the mirror with its negation.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::algebra::{FreeLieAlgebra, StructureConstants};
use crate::error::{ParseError, Result};
use crate::scalar_core::format::{scalar_from_json, scalar_to_json};
use crate::scalar_core::{EltScalar, NegationSemiring};

/// Reads the tensor and labels without verifying the axioms.
pub fn constants_from_json(v: &Value) -> std::result::Result<(StructureConstants, Vec<String>), ParseError> {
    let dim = v
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| ParseError::new("missing or invalid `dim`"))? as usize;
    let labels = match v.get("base") {
        None => (1..=dim).map(|i| format!("x{i}")).collect(),
        Some(b) => {
            let items = b
                .as_array()
                .ok_or_else(|| ParseError::new("`base` must be an array of strings"))?;
            let labels: Vec<String> = items
                .iter()
                .map(|x| x.as_str().map(str::to_owned))
                .collect::<Option<_>>()
                .ok_or_else(|| ParseError::new("`base` must be an array of strings"))?;
            if labels.len() != dim {
                return Err(ParseError::new(format!(
                    "`base` has {} labels, expected {dim}",
                    labels.len()
                )));
            }
            labels
        }
    };
    let entries = match v.get("alpha") {
        None => &[][..],
        Some(a) => a
            .as_array()
            .ok_or_else(|| ParseError::new("`alpha` must be an array"))?
            .as_slice(),
    };
    let mut explicit: BTreeMap<(usize, usize, usize), EltScalar> = BTreeMap::new();
    for (k, e) in entries.iter().enumerate() {
        let index = |key: &str| -> std::result::Result<usize, ParseError> {
            let x = e
                .get(key)
                .and_then(Value::as_u64)
                .ok_or_else(|| ParseError::new(format!("alpha[{k}]: missing or invalid `{key}`")))?
                as usize;
            if x == 0 || x > dim {
                return Err(ParseError::new(format!(
                    "alpha[{k}]: `{key}` = {x} is outside 1..={dim}"
                )));
            }
            Ok(x - 1)
        };
        let (i, j, l) = (index("i")?, index("j")?, index("l")?);
        let s = e
            .get("scalar")
            .ok_or_else(|| ParseError::new(format!("alpha[{k}]: missing `scalar`")))?;
        let s = scalar_from_json(s)
            .map_err(|err| ParseError::new(format!("alpha[{k}]: {}", err.message)))?;
        if explicit.insert((i, j, l), s).is_some() {
            return Err(ParseError::new(format!(
                "alpha[{k}]: duplicate entry ({},{},{})",
                i + 1,
                j + 1,
                l + 1
            )));
        }
    }
    let mut c = StructureConstants::zero(dim);
    for (&(i, j, l), s) in &explicit {
        c.set(i, j, l, s.clone());
        if !explicit.contains_key(&(j, i, l)) {
            c.set(j, i, l, s.negate());
        }
    }
    Ok((c, labels))
}

/// Reads and verifies an algebra; violations are reported with 1-based indices.
pub fn algebra_from_json(v: &Value) -> Result<FreeLieAlgebra> {
    let (c, labels) = constants_from_json(v)?;
    FreeLieAlgebra::new(c, labels)
}

/// Writes every non-bottom entry.
pub fn algebra_to_json(l: &FreeLieAlgebra) -> Value {
    let n = l.dim();
    let mut alpha = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let s = l.constants().get(i, j, k);
                if !s.is_bottom() {
                    alpha.push(json!({"i": i + 1, "j": j + 1, "l": k + 1, "scalar": scalar_to_json(s)}));
                }
            }
        }
    }
    json!({"dim": n, "base": l.labels(), "alpha": alpha})
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn round_trip_sl2() {
        let l = FreeLieAlgebra::sl2_type();
        let text = algebra_to_json(&l).to_string();
        let back = algebra_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, l);
    }

    #[test]
    fn upper_half_is_enough() {
        let v = json!({
            "dim": 3,
            "base": ["e", "f", "h"],
            "alpha": [
                {"i": 1, "j": 2, "l": 3, "scalar": {"t": "0", "layer": "1"}},
                {"i": 3, "j": 1, "l": 1, "scalar": {"t": "0", "layer": "2"}},
                {"i": 3, "j": 2, "l": 2, "scalar": {"t": "0", "layer": "-2"}}
            ]
        });
        assert_eq!(algebra_from_json(&v).unwrap(), FreeLieAlgebra::sl2_type());
    }

    #[test]
    fn reports_violations() {
        let v = json!({
            "dim": 1,
            "alpha": [{"i": 1, "j": 1, "l": 1, "scalar": {"t": "0", "layer": "1"}}]
        });
        match algebra_from_json(&v) {
            Err(Error::InvalidConstants(msg)) => assert!(msg.contains("(1,1,1)") || msg.contains("α(1,1,1)")),
            other => panic!("unexpected {other:?}"),
        }
        let v = json!({"dim": 2, "alpha": [{"i": 3, "j": 1, "l": 1, "scalar": "bottom"}]});
        assert!(matches!(algebra_from_json(&v), Err(Error::Parse(_))));
    }
}
