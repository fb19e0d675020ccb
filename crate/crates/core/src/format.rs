//! JSON encodings of orders, ideals, presentations, matrices and verdicts.
//!
//! Integers are written as JSON numbers of any size; on input a decimal
//! string is accepted as well.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::decide::{Question, Verdict};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::order::{OrderElement, OrderPresentation, TwoGenIdeal};
use crate::quotient::QuotientCertificate;
use crate::ring::FiniteRingPresentation;

fn err(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

pub fn int_from_json(v: &Value) -> Result<BigInt> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.trim().to_string(),
        other => return Err(err(format!("expected an integer, found {other}"))),
    };
    BigInt::from_str(&text).map_err(|_| err(format!("not an integer: {text}")))
}

pub fn int_to_json(x: &BigInt) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("decimal integers are valid JSON numbers"))
}

fn usize_from_json(v: &Value, what: &str) -> Result<usize> {
    v.as_u64().and_then(|x| usize::try_from(x).ok()).ok_or_else(|| err(format!("{what} must be a nonnegative integer")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| err(format!("{what} must be an array")))
}

pub fn ints_from_json(v: &Value, what: &str) -> Result<Vec<BigInt>> {
    array(v, what)?.iter().map(int_from_json).collect()
}

pub fn ints_to_json(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(int_to_json).collect())
}

fn cube_from_json(v: &Value, n: usize, what: &str) -> Result<Vec<Vec<Vec<BigInt>>>> {
    let outer = array(v, what)?;
    if outer.len() != n {
        return Err(err(format!("{what} has {} slices, expected {n}", outer.len())));
    }
    outer
        .iter()
        .map(|row| {
            let row = array(row, what)?;
            if row.len() != n {
                return Err(err(format!("{what} row of length {}, expected {n}", row.len())));
            }
            row.iter()
                .map(|cell| {
                    let c = ints_from_json(cell, what)?;
                    if c.len() != n {
                        return Err(err(format!("{what} entry of length {}, expected {n}", c.len())));
                    }
                    Ok(c)
                })
                .collect()
        })
        .collect()
}

fn cube_to_json(c: &[Vec<Vec<BigInt>>]) -> Value {
    Value::Array(c.iter().map(|row| Value::Array(row.iter().map(|cell| ints_to_json(cell)).collect())).collect())
}

fn field<'a>(obj: &'a Value, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| err(format!("missing field \"{key}\"")))
}

/// `{"rank": n, "one": [...], "table": [[[...]]]}` with
/// `table[i][j][k] = c_ijk`.
pub fn order_from_json(v: &Value) -> Result<OrderPresentation> {
    let n = usize_from_json(field(v, "rank")?, "rank")?;
    if n == 0 {
        return Err(err("rank must be at least 1"));
    }
    let one = ints_from_json(field(v, "one")?, "one")?;
    let table = cube_from_json(field(v, "table")?, n, "table")?;
    OrderPresentation::from_nested(table, one)
}

pub fn order_to_json(o: &OrderPresentation) -> Value {
    json!({
        "rank": o.rank(),
        "one": ints_to_json(&o.one().coords),
        "table": cube_to_json(&o.table_nested()),
    })
}

/// `{"alpha": [...], "beta": [...], "h": "..."}`; `h` is optional.
pub fn ideal_from_json(v: &Value, rank: usize) -> Result<(TwoGenIdeal, Option<BigInt>)> {
    let alpha = ints_from_json(field(v, "alpha")?, "alpha")?;
    let beta = ints_from_json(field(v, "beta")?, "beta")?;
    for (name, x) in [("alpha", &alpha), ("beta", &beta)] {
        if x.len() != rank {
            return Err(err(format!("{name} has {} coordinates, the ring has rank {rank}", x.len())));
        }
    }
    let h = v.get("h").filter(|h| !h.is_null()).map(int_from_json).transpose()?;
    Ok((TwoGenIdeal::new(OrderElement::new(alpha), OrderElement::new(beta))?, h))
}

pub fn ideal_to_json(i: &TwoGenIdeal, h: Option<&BigInt>) -> Value {
    let mut obj = Map::new();
    obj.insert("alpha".into(), ints_to_json(&i.alpha.coords));
    obj.insert("beta".into(), ints_to_json(&i.beta.coords));
    if let Some(h) = h {
        obj.insert("h".into(), Value::String(h.to_string()));
    }
    Value::Object(obj)
}

/// `{"m": m, "d": [...], "l": [[[...]]]}`.
pub fn presentation_from_json(v: &Value) -> Result<FiniteRingPresentation> {
    let m = usize_from_json(field(v, "m")?, "m")?;
    let d = ints_from_json(field(v, "d")?, "d")?;
    if d.len() != m {
        return Err(err(format!("d has {} entries, m = {m}", d.len())));
    }
    let l = cube_from_json(field(v, "l")?, m, "l")?;
    FiniteRingPresentation::from_nested(d, l)
}

pub fn presentation_to_json(r: &FiniteRingPresentation) -> Value {
    json!({
        "m": r.m(),
        "d": ints_to_json(r.moduli()),
        "l": cube_to_json(&r.constants_nested()),
    })
}

/// A matrix as an array of rows.
pub fn matrix_from_json(v: &Value) -> Result<IntMatrix> {
    let rows = array(v, "matrix")?.iter().map(|r| ints_from_json(r, "matrix row")).collect::<Result<Vec<_>>>()?;
    IntMatrix::from_rows(rows)
}

pub fn matrix_to_json(m: &IntMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| ints_to_json(r)).collect())
}

pub fn certificate_to_json(c: &QuotientCertificate) -> Value {
    json!({
        "norm": int_to_json(&c.norm),
        "h": int_to_json(&c.h),
        "ideal_hnf": matrix_to_json(&c.ideal_hnf),
        "smith_diagonal": ints_to_json(&c.divisors),
        "V": matrix_to_json(&c.v),
        "U": matrix_to_json(&c.u),
        "V_inverse_mod_h": matrix_to_json(&c.v_inv_mod_h),
    })
}

pub fn verdict_to_json(v: &Verdict) -> Value {
    let mut obj = Map::new();
    let question = match v.question {
        Question::Prime => "is-prime",
        Question::PrimePower => "is-prime-power",
    };
    obj.insert("question".into(), question.into());
    obj.insert("answer".into(), v.answer().into());
    obj.insert("kind".into(), v.kind.as_str().into());
    obj.insert("norm".into(), int_to_json(&v.norm));
    obj.insert("h".into(), int_to_json(&v.h));
    obj.insert("quotient".into(), v.quotient.as_ref().map_or(Value::Null, presentation_to_json));
    let cert = v.certificate.as_ref().map_or(Value::Null, |c| {
        json!({
            "d": ints_to_json(&c.divisors),
            "tower_degrees": c.tower_degrees,
            "characteristic": c.characteristic.as_ref().map_or(Value::Null, int_to_json),
        })
    });
    obj.insert("certificate".into(), cert);
    Value::Object(obj)
}
