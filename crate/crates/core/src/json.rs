//! JSON wire formats used by the CLI and the C API.
//!
//! Rationals are emitted as strings (`"p"` or `"p/q"`) so no consumer ever
//! sees a float; on input, plain JSON integers are accepted too. The formats:
//!
//! * hypermatrix: `{"shape":[2,2,2]|[2,2,2,2],"entries":[...]}` with entries
//!   in lexicographic index order, last index fastest;
//! * binary quartic: 5-element array in A..E coefficient order;
//! * curve point: `"O"` for the point at infinity or `{"x":"..","y":".."}`;
//! * curves: coefficient objects (`{"alpha","beta"}`, `{"a","b","c","d"}`,
//!   `{"e","f","g","h"}`).

use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::bridge::{BridgeParams, UVCurve};
use crate::elliptic::{CubicCurve, CurvePoint, WeierstrassCurve};
use crate::hypermatrix::{Hypermatrix222, Hypermatrix2222};
use crate::invariants::{BinaryQuartic, QuarticInvariants};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::trilinear::{SearchReport, TrilinearSystem};
use crate::Error;

pub fn rational_to_value(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn rational_from_value(v: &Value) -> Result<Rational, Error> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(crate::rational::rat_int(i))
            } else {
                Err(Error::Json(format!(
                    "number `{n}` is not an exact integer; use a string"
                )))
            }
        }
        other => Err(Error::Json(format!("expected a rational, got `{other}`"))),
    }
}

/// A hypermatrix of either supported shape, as parsed from JSON.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HypermatrixJson {
    Cube(Hypermatrix222),
    Tesseract(Hypermatrix2222),
}

pub fn hypermatrix_from_str(text: &str) -> Result<HypermatrixJson, Error> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::Json(format!("invalid JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Json("expected a JSON object".into()))?;
    let shape = obj
        .get("shape")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("missing `shape` array".into()))?;
    let dims: Vec<u64> = shape.iter().filter_map(Value::as_u64).collect();
    let entries = obj
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("missing `entries` array".into()))?;
    let parsed: Result<Vec<Rational>, Error> =
        entries.iter().map(rational_from_value).collect();
    let parsed = parsed?;
    match dims.as_slice() {
        [2, 2, 2] => {
            let arr: [Rational; 8] = parsed
                .try_into()
                .map_err(|_| Error::Json("shape [2,2,2] requires exactly 8 entries".into()))?;
            Ok(HypermatrixJson::Cube(Hypermatrix222::new(arr)))
        }
        [2, 2, 2, 2] => {
            let arr: [Rational; 16] = parsed.try_into().map_err(|_| {
                Error::Json("shape [2,2,2,2] requires exactly 16 entries".into())
            })?;
            Ok(HypermatrixJson::Tesseract(Hypermatrix2222::new(arr)))
        }
        _ => Err(Error::Json(format!(
            "unsupported shape {dims:?}; expected [2,2,2] or [2,2,2,2]"
        ))),
    }
}

pub fn hypermatrix222_to_value(h: &Hypermatrix222) -> Value {
    json!({
        "shape": [2, 2, 2],
        "entries": h.entries().iter().map(rational_to_value).collect::<Vec<_>>(),
    })
}

pub fn hypermatrix2222_to_value(h: &Hypermatrix2222) -> Value {
    json!({
        "shape": [2, 2, 2, 2],
        "entries": h.entries().iter().map(rational_to_value).collect::<Vec<_>>(),
    })
}

/// 5-element array in A..E order.
pub fn quartic_to_value(q: &BinaryQuartic) -> Value {
    Value::Array(q.coefficients().iter().map(|c| rational_to_value(c)).collect())
}

pub fn point_to_value(p: &CurvePoint) -> Value {
    match p {
        CurvePoint::Infinity => Value::String("O".into()),
        CurvePoint::Affine { x, y } => json!({
            "x": rational_to_value(x),
            "y": rational_to_value(y),
        }),
    }
}

pub fn point_from_value(v: &Value) -> Result<CurvePoint, Error> {
    match v {
        Value::String(s) if s == "O" => Ok(CurvePoint::Infinity),
        Value::Object(obj) => {
            let x = obj
                .get("x")
                .ok_or_else(|| Error::Json("point object missing `x`".into()))?;
            let y = obj
                .get("y")
                .ok_or_else(|| Error::Json("point object missing `y`".into()))?;
            Ok(CurvePoint::affine(
                rational_from_value(x)?,
                rational_from_value(y)?,
            ))
        }
        other => Err(Error::Json(format!(
            "expected \"O\" or {{\"x\",\"y\"}}, got `{other}`"
        ))),
    }
}

pub fn point_from_str(text: &str) -> Result<CurvePoint, Error> {
    // bare O accepted without JSON quoting for CLI convenience
    let trimmed = text.trim();
    if trimmed == "O" {
        return Ok(CurvePoint::Infinity);
    }
    let value: Value =
        serde_json::from_str(trimmed).map_err(|e| Error::Json(format!("invalid point: {e}")))?;
    point_from_value(&value)
}

pub fn weierstrass_to_value(c: &WeierstrassCurve) -> Value {
    json!({
        "alpha": rational_to_value(&c.alpha),
        "beta": rational_to_value(&c.beta),
    })
}

pub fn cubic_to_value(c: &CubicCurve) -> Value {
    json!({
        "a": rational_to_value(&c.a),
        "b": rational_to_value(&c.b),
        "c": rational_to_value(&c.c),
        "d": rational_to_value(&c.d),
    })
}

pub fn uv_to_value(uv: &UVCurve) -> Value {
    json!({
        "e": rational_to_value(&uv.e),
        "f": rational_to_value(&uv.f),
        "g": rational_to_value(&uv.g),
        "h": rational_to_value(&uv.h),
    })
}

pub fn params_to_value(bp: &BridgeParams) -> Value {
    json!({
        "k": rational_to_value(&bp.k),
        "m": rational_to_value(&bp.m),
        "p": rational_to_value(&bp.p),
        "r": rational_to_value(&bp.r),
        "s": rational_to_value(&bp.s),
        "t": rational_to_value(&bp.t),
    })
}

/// `{quartic, S, T, delta, J}` with J null on singular quartics.
pub fn invariants_report_value(q: &BinaryQuartic, inv: &QuarticInvariants) -> Value {
    let j = if inv.delta.is_zero() {
        Value::Null
    } else {
        rational_to_value(&(&inv.s * &inv.s * &inv.s / &inv.delta))
    };
    json!({
        "quartic": quartic_to_value(q),
        "S": rational_to_value(&inv.s),
        "T": rational_to_value(&inv.t),
        "delta": rational_to_value(&inv.delta),
        "J": j,
    })
}

fn vector_to_value(v: &crate::hypermatrix::Vector2) -> Value {
    Value::Array(vec![rational_to_value(&v.c0), rational_to_value(&v.c1)])
}

/// Full search report, including the system it was run on so results are
/// reproducible from the output alone.
pub fn search_report_to_value(report: &SearchReport, sys: &TrilinearSystem) -> Value {
    let solutions: Vec<Value> = report
        .solutions
        .iter()
        .map(|f| {
            json!({
                "x": vector_to_value(&f.solution.x),
                "y": vector_to_value(&f.solution.y),
                "z": vector_to_value(&f.solution.z),
                "degenerate": f.degenerate,
            })
        })
        .collect();
    let mut obj = Map::new();
    obj.insert("bound".into(), json!(report.bound));
    obj.insert(
        "candidates_tested".into(),
        json!(report.candidates_tested),
    );
    obj.insert("solutions".into(), Value::Array(solutions));
    obj.insert("quartic".into(), quartic_to_value(&report.quartic));
    obj.insert("S".into(), rational_to_value(&report.invariants.s));
    obj.insert("T".into(), rational_to_value(&report.invariants.t));
    obj.insert("delta".into(), rational_to_value(&report.invariants.delta));
    let j = if report.invariants.delta.is_zero() {
        Value::Null
    } else {
        let s = &report.invariants.s;
        rational_to_value(&(s * s * s / &report.invariants.delta))
    };
    obj.insert("J".into(), j);
    obj.insert("degenerate_quartic".into(), json!(report.quartic_is_zero));
    obj.insert(
        "system".into(),
        hypermatrix2222_to_value(sys.hypermatrix()),
    );
    Value::Object(obj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn hypermatrix_round_trip_and_mixed_entry_forms() {
        let text = r#"{"shape":[2,2,2],"entries":[1,"-3/2",0,2,"5",-1,"7/3",4]}"#;
        let HypermatrixJson::Cube(h) = hypermatrix_from_str(text).unwrap() else {
            panic!("expected cube");
        };
        assert_eq!(*h.get(0, 0, 1), rat(-3, 2));
        assert_eq!(*h.get(1, 1, 0), rat(7, 3));
        let emitted = hypermatrix222_to_value(&h);
        let reparsed = hypermatrix_from_str(&emitted.to_string()).unwrap();
        assert_eq!(reparsed, HypermatrixJson::Cube(h));
    }

    #[test]
    fn hypermatrix_shape_errors() {
        assert!(hypermatrix_from_str(r#"{"shape":[2,2],"entries":[1,2,3,4]}"#).is_err());
        assert!(hypermatrix_from_str(r#"{"shape":[2,2,2],"entries":[1,2]}"#).is_err());
        assert!(hypermatrix_from_str("not json").is_err());
        assert!(hypermatrix_from_str(r#"{"entries":[1]}"#).is_err());
    }

    #[test]
    fn point_round_trip() {
        let p = CurvePoint::affine(rat(-4, 1), rat_int(6));
        let v = point_to_value(&p);
        assert_eq!(point_from_value(&v).unwrap(), p);
        assert_eq!(point_from_str("O").unwrap(), CurvePoint::Infinity);
        assert_eq!(
            point_from_str(r#"{"x":"-4","y":"6"}"#).unwrap(),
            CurvePoint::affine(rat_int(-4), rat_int(6))
        );
        assert!(point_from_str("{\"x\":\"1\"}").is_err());
    }

    #[test]
    fn rational_values() {
        assert_eq!(rational_to_value(&rat(3, 1)), Value::String("3".into()));
        assert_eq!(rational_to_value(&rat(-1, 2)), Value::String("-1/2".into()));
        assert_eq!(rational_from_value(&json!(42)).unwrap(), rat_int(42));
        assert!(rational_from_value(&json!(1.5)).is_err());
    }
}
