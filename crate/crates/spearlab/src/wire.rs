//! JSON wire formats for spaces, operators, certificates and fuzz reports.
//!
//! Scalars are JSON integers or `"p/q"` strings with `q > 0`. Floating
//! point literals are rejected everywhere on the exact path; only the fuzz
//! reports emit floats.

use crate::error::{Error, Result};
use crate::operators::LinOp;
use crate::rational::{format_scalar, parse_scalar, RatMatrix, RatVector, Rational};
use crate::spaces::{PolyhedralSpace, SpaceRef};
use crate::speartest::Certificate;
use serde_json::{json, Map, Value};
use std::sync::Arc;

/// Report schema identifier emitted by the CLI.
pub const SCHEMA: &str = "spearlab/1";

pub fn scalar_to_value(r: &Rational) -> Value {
    if r.denom() == &num_bigint::BigInt::from(1) {
        if let Ok(n) = i64::try_from(r.numer().clone()) {
            return json!(n);
        }
    }
    json!(format_scalar(r))
}

pub fn scalar_from_value(v: &Value) -> Result<Rational> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_integer(i.into()))
            } else {
                Err(Error::InvalidInput(format!(
                    "scalar `{n}` is not an integer; floats are rejected on the exact path"
                )))
            }
        }
        Value::String(s) => parse_scalar(s),
        other => Err(Error::InvalidInput(format!(
            "scalar must be an integer or \"p/q\" string, got {other}"
        ))),
    }
}

pub fn vector_to_value(v: &RatVector) -> Value {
    Value::Array(v.iter().map(scalar_to_value).collect())
}

pub fn vector_from_value(v: &Value) -> Result<RatVector> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::InvalidInput(format!("vector must be an array, got {v}")))?;
    if arr.is_empty() {
        return Err(Error::InvalidInput("vector must be nonempty".into()));
    }
    Ok(RatVector::new(
        arr.iter().map(scalar_from_value).collect::<Result<_>>()?,
    ))
}

pub fn matrix_to_value(m: &RatMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_to_value(&m.row_vec(i))).collect())
}

pub fn matrix_from_value(v: &Value) -> Result<RatMatrix> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::InvalidInput("matrix must be an array of rows".into()))?;
    let rows = arr.iter().map(vector_from_value).collect::<Result<Vec<_>>>()?;
    RatMatrix::from_rows(rows)
}

/// Serializes a space as `{"label", "dim", "ball_vertices"}`.
pub fn space_to_value(space: &PolyhedralSpace) -> Value {
    json!({
        "label": space.label(),
        "dim": space.dim(),
        "ball_vertices": space.vertices().iter().map(vector_to_value).collect::<Vec<_>>(),
    })
}

/// Loads a space document: `label`, `dim`, and exactly one of
/// `ball_vertices` (symmetrized on load) or `facet_normals`.
pub fn space_from_value(v: &Value) -> Result<PolyhedralSpace> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::InvalidInput("space document must be an object".into()))?;
    let label = obj
        .get("label")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::InvalidInput("space document needs a string `label`".into()))?;
    let dim = obj
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::InvalidInput("space document needs an integer `dim`".into()))?
        as usize;
    let vectors = |key: &str| -> Result<Vec<RatVector>> {
        obj[key]
            .as_array()
            .ok_or_else(|| Error::InvalidInput(format!("`{key}` must be an array")))?
            .iter()
            .map(vector_from_value)
            .collect()
    };
    match (obj.contains_key("ball_vertices"), obj.contains_key("facet_normals")) {
        (true, false) => PolyhedralSpace::from_vertices(label, dim, &vectors("ball_vertices")?),
        (false, true) => PolyhedralSpace::from_facet_normals(label, dim, &vectors("facet_normals")?),
        _ => Err(Error::InvalidInput(
            "space document needs exactly one of `ball_vertices` or `facet_normals`".into(),
        )),
    }
}

pub fn operator_to_value(op: &LinOp) -> Value {
    json!({
        "label": op.label(),
        "domain": space_to_value(op.domain()),
        "codomain": space_to_value(op.codomain()),
        "matrix": matrix_to_value(op.matrix()),
    })
}

/// Loads an operator document: `label`, `matrix`, and `domain`/`codomain`
/// given either inline as space objects or as strings resolved by `lookup`
/// (workspace labels or fixture names).
pub fn operator_from_value(
    v: &Value,
    lookup: &dyn Fn(&str) -> Result<SpaceRef>,
) -> Result<LinOp> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::InvalidInput("operator document must be an object".into()))?;
    let label = obj
        .get("label")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::InvalidInput("operator document needs a string `label`".into()))?;
    let resolve = |key: &str| -> Result<SpaceRef> {
        match obj.get(key) {
            Some(Value::String(s)) => lookup(s),
            Some(spec @ Value::Object(_)) => Ok(Arc::new(space_from_value(spec)?)),
            _ => Err(Error::InvalidInput(format!(
                "`{key}` must be a space label or an inline space object"
            ))),
        }
    };
    let domain = resolve("domain")?;
    let codomain = resolve("codomain")?;
    let matrix = matrix_from_value(
        obj.get("matrix")
            .ok_or_else(|| Error::InvalidInput("operator document needs a `matrix`".into()))?,
    )?;
    LinOp::new_shared(label, domain, codomain, matrix)
}

/// Certificate JSON: `{"decision", "criterion", "witnesses": [{"kind",
/// "vector", "value"}]}` with the scalar encoding used everywhere else.
pub fn certificate_to_value(cert: &Certificate) -> Value {
    json!({
        "decision": cert.decision,
        "criterion": cert.criterion,
        "witnesses": cert.witnesses.iter().map(|w| json!({
            "kind": serde_json::to_value(w.kind).expect("kind serializes"),
            "vector": vector_to_value(&w.vector),
            "value": format_scalar(&w.value),
        })).collect::<Vec<_>>(),
    })
}

/// Wraps a payload in the versioned report envelope.
pub fn report(command: &str, payload: Value) -> Value {
    let mut obj = Map::new();
    obj.insert("schema".into(), json!(SCHEMA));
    obj.insert("command".into(), json!(command));
    match payload {
        Value::Object(m) => obj.extend(m),
        other => {
            obj.insert("result".into(), other);
        }
    }
    Value::Object(obj)
}
