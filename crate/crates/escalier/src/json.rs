//! JSON encodings shared by the CLI and the golden tests.
//!
//! Field elements serialize as `"0"` or `"a^k"`, terms as exponent arrays,
//! escaliers as `{"vars", "terms", "minimal_basis"}`, polynomials as term
//! lists in decreasing lex order (leading term first).

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::field::PrimeField;
use crate::gf2m::{Field, FieldElem, Gf2mError};
use crate::monomial::{Escalier, MonomialError, Term, VarOrder};
use crate::pointideal::{Correspondence, PointIdealError, PointSet};
use crate::poly::SparsePoly;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("expected {expected}, got {got}")]
    Shape { expected: &'static str, got: String },
    #[error(transparent)]
    Gf2m(#[from] Gf2mError),
    #[error(transparent)]
    Monomial(#[from] MonomialError),
    #[error(transparent)]
    Points(#[from] PointIdealError),
    #[error(transparent)]
    Parse(#[from] serde_json::Error),
}

fn shape(expected: &'static str, got: &Value) -> JsonError {
    JsonError::Shape { expected, got: got.to_string() }
}

pub fn elem_to_json(field: &Field, e: FieldElem) -> Value {
    Value::String(field.format_elem(e))
}

pub fn elem_from_json(field: &Field, v: &Value) -> Result<FieldElem, JsonError> {
    let s = v.as_str().ok_or_else(|| shape("element string", v))?;
    Ok(field.parse_elem(s)?)
}

pub fn term_to_json(t: &Term) -> Value {
    Value::Array(t.exps().iter().map(|&e| json!(e)).collect())
}

pub fn term_from_json(v: &Value) -> Result<Term, JsonError> {
    let arr = v.as_array().ok_or_else(|| shape("exponent array", v))?;
    let exps: Option<Vec<u32>> = arr.iter().map(|x| x.as_u64().map(|u| u as u32)).collect();
    exps.map(Term::new).ok_or_else(|| shape("nonnegative exponents", v))
}

pub fn terms_from_json(v: &Value) -> Result<Vec<Term>, JsonError> {
    let arr = v.as_array().ok_or_else(|| shape("array of terms", v))?;
    arr.iter().map(term_from_json).collect()
}

pub fn escalier_to_json(esc: &Escalier, order: &VarOrder) -> Value {
    json!({
        "vars": order.names(),
        "terms": esc.terms().iter().map(term_to_json).collect::<Vec<_>>(),
        "minimal_basis": esc.minimal_basis().iter().map(term_to_json).collect::<Vec<_>>(),
    })
}

pub fn poly_to_json(field: &Field, p: &SparsePoly<Field>, order: &VarOrder) -> Value {
    let terms: Vec<Value> = p
        .iter()
        .collect::<Vec<_>>()
        .into_iter()
        .rev()
        .map(|(t, &c)| json!({"term": term_to_json(t), "coeff": elem_to_json(field, c)}))
        .collect();
    json!({"vars": order.names(), "terms": terms})
}

pub fn polys_to_json(field: &Field, ps: &[SparsePoly<Field>], order: &VarOrder) -> Value {
    Value::Array(ps.iter().map(|p| poly_to_json(field, p, order)).collect())
}

pub fn pointset_to_json(field: &Field, pts: &PointSet<Field>) -> Value {
    json!({
        "vars": pts.order().names(),
        "points": pts
            .points()
            .iter()
            .map(|p| Value::Array(p.iter().map(|&e| elem_to_json(field, e)).collect()))
            .collect::<Vec<_>>(),
    })
}

pub fn points_from_json(field: &Field, v: &Value, order: VarOrder) -> Result<PointSet<Field>, JsonError> {
    let arr = match v {
        Value::Array(a) => a,
        Value::Object(o) => o
            .get("points")
            .and_then(Value::as_array)
            .ok_or_else(|| shape("{\"points\": [...]}", v))?,
        _ => return Err(shape("array of points", v)),
    };
    let mut pts = Vec::with_capacity(arr.len());
    for row in arr {
        let coords = row.as_array().ok_or_else(|| shape("coordinate array", row))?;
        pts.push(coords.iter().map(|c| elem_from_json(field, c)).collect::<Result<Vec<_>, _>>()?);
    }
    Ok(PointSet::new(order, pts)?)
}

pub fn prime_points_from_json(
    field: &PrimeField,
    v: &Value,
    order: VarOrder,
) -> Result<PointSet<PrimeField>, JsonError> {
    let arr = v.as_array().ok_or_else(|| shape("array of points", v))?;
    let mut pts = Vec::with_capacity(arr.len());
    for row in arr {
        let coords = row.as_array().ok_or_else(|| shape("coordinate array", row))?;
        let p: Option<Vec<u64>> = coords.iter().map(Value::as_u64).collect();
        let p = p.ok_or_else(|| shape("integer coordinates", row))?;
        pts.push(p.into_iter().map(|x| x % field.modulus()).collect());
    }
    Ok(PointSet::new(order, pts)?)
}

pub fn correspondence_to_json(field: &Field, c: &Correspondence<Field>) -> Value {
    Value::Array(
        c.pairs()
            .iter()
            .map(|(p, t)| {
                json!({
                    "point": Value::Array(p.iter().map(|&e| elem_to_json(field, e)).collect()),
                    "term": term_to_json(t),
                })
            })
            .collect(),
    )
}

pub fn prime_poly_to_json(p: &SparsePoly<PrimeField>, order: &VarOrder) -> Value {
    let terms: Vec<Value> = p
        .iter()
        .collect::<Vec<_>>()
        .into_iter()
        .rev()
        .map(|(t, &c)| json!({"term": term_to_json(t), "coeff": c}))
        .collect();
    json!({"vars": order.names(), "terms": terms})
}

pub fn prime_correspondence_to_json(c: &Correspondence<PrimeField>) -> Value {
    Value::Array(
        c.pairs()
            .iter()
            .map(|(p, t)| json!({"point": p, "term": term_to_json(t)}))
            .collect(),
    )
}

/// Build an object with deterministic (insertion-independent) key order.
pub fn obj(entries: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in entries {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}
