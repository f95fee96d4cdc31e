//! Stable JSON encodings. Big integers are written as decimal strings; on
//! input both strings and JSON integers are accepted.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::bianchi::Mat2;
use crate::claim_verifier::{verify_entry_table, ClaimReport};
use crate::error::{Error, Result};
use crate::quadratic_ring::{QuadInt, QuadRat, RingId};
use crate::word_repr::{BoundReport, WordRep};

pub const SCHEMA_VERSION: u32 = 1;

fn int(v: &BigInt) -> Value {
    Value::String(v.to_string())
}

fn parse_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::String(s) => s.trim().parse().map_err(|_| Error::Parse(format!("not an integer: {s:?}"))),
        Value::Number(n) if n.is_i64() || n.is_u64() => {
            n.to_string().parse().map_err(|_| Error::Parse(format!("not an integer: {n}")))
        }
        other => Err(Error::Parse(format!("expected an integer, found {other}"))),
    }
}

/// `["x", "y"]` in the `{1, ω}` basis.
pub fn quad_int(z: &QuadInt) -> Value {
    json!([int(z.x()), int(z.y())])
}

pub fn parse_quad_int(ring: RingId, v: &Value) -> Result<QuadInt> {
    match v.as_array().map(Vec::as_slice) {
        Some([x, y]) => Ok(QuadInt::new(ring, parse_int(x)?, parse_int(y)?)),
        _ => Err(Error::Parse(format!("expected [x, y], found {v}"))),
    }
}

/// `["xn/xd", "yn/yd"]`.
pub fn quad_rat(z: &QuadRat) -> Value {
    json!([z.x().to_string(), z.y().to_string()])
}

/// `{"d": d, "entries": [[a11, a12], [a21, a22]]}`.
pub fn mat2(m: &Mat2) -> Value {
    let [a, b, c, d] = m.entries();
    json!({
        "d": m.ring().d(),
        "entries": [[quad_int(a), quad_int(b)], [quad_int(c), quad_int(d)]],
    })
}

/// Parses the output of [`mat2`]. When `ring` is given it overrides or must
/// agree with the `"d"` field.
pub fn parse_mat2(v: &Value, ring: Option<RingId>) -> Result<Mat2> {
    let ring = match (v.get("d"), ring) {
        (Some(d), Some(r)) => {
            let given = RingId::new(parse_int(d)?.try_into().map_err(|_| Error::Parse("d".into()))?)?;
            if given != r {
                return Err(Error::RingMismatch { left: given, right: r });
            }
            r
        }
        (Some(d), None) => RingId::new(parse_int(d)?.try_into().map_err(|_| Error::Parse("d".into()))?)?,
        (None, Some(r)) => r,
        (None, None) => return Err(Error::Parse("missing field \"d\"".into())),
    };
    let rows = v.get("entries").unwrap_or(v);
    let rows = rows.as_array().filter(|r| r.len() == 2).ok_or_else(|| Error::Parse("expected two rows".into()))?;
    let mut out = Vec::with_capacity(4);
    for row in rows {
        let row = row.as_array().filter(|r| r.len() == 2).ok_or_else(|| Error::Parse("expected two columns".into()))?;
        for e in row {
            out.push(parse_quad_int(ring, e)?);
        }
    }
    let [a, b, c, d]: [QuadInt; 4] = out.try_into().expect("four entries");
    Mat2::new(a, b, c, d)
}

pub fn word_rep(w: &WordRep) -> Value {
    json!({
        "d": w.ring.d(),
        "word": w.to_string(),
        "sign": w.sl_sign.as_i8(),
        "epsilon": w.epsilon,
        "p0": int(&w.p0),
        "q0": int(&w.q0),
        "k": w.k(),
        "blocks": w.blocks.iter().map(|b| json!([int(&b.p), int(&b.q)])).collect::<Vec<_>>(),
    })
}

pub fn bound_report(r: &BoundReport) -> Value {
    json!({
        "norm": int(&r.norm),
        "k": r.k,
        "max_exponent_norm": int(&r.max_exponent_norm),
        "exponent_bound_ok": r.exponent_bound_ok,
        "iteration_limit": r.iteration_limit,
        "iteration_bound_ok": r.iteration_bound_ok,
        "strict_bound_ok": r.strict_bound_ok,
        "head_individual_ok": r.head_individual_ok,
    })
}

/// ω, κ(d), 1/(1−κ(d)), units and entry set for one ring.
pub fn ring_table(r: RingId) -> Value {
    let coords = |v: &[QuadInt]| v.iter().map(quad_int).collect::<Vec<_>>();
    let set = r.entry_candidate_set();
    json!({
        "d": r.d(),
        "omega": r.omega_description(),
        "kappa": r.euclidean_minimum().to_string(),
        "inverse_one_minus_kappa": r.entry_norm_bound().to_string(),
        "units": coords(&r.units()),
        "entry_set": coords(&set),
        "entry_set_size": set.len(),
        "matches_reference": verify_entry_table(r),
    })
}

pub fn claim_report(r: &ClaimReport) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "d": r.ring.d(),
        "candidates": r.candidates_examined,
        "counterexamples": r.counterexamples.iter().map(|(m, n)| json!({"before": mat2(m), "after": mat2(n)})).collect::<Vec<_>>(),
        "holds": r.holds(),
        "ms": r.elapsed.as_millis() as u64,
    })
}
