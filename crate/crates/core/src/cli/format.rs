//! JSON files: game specs, sequence pairs and claimed P-sets.
//!
//! Every document carries `"format": 1`. Reals are written as
//!
//! * an integer, `{"num": n, "den": d}`, or `{"sqrt": d}`;
//! * `{"p": p, "q": q, "d": d, "r": r}` for `(p + q√d)/r`;
//! * `{"interval": "1.4142", "precision": 4}`, the literal `± 10^-precision`,
//!   or `{"lo": R, "hi": R}` with rational bounds;
//! * `{"add": [R, R]}`, `{"sub": …}`, `{"mul": …}`, `{"div": …}`, `{"neg": R}`.
//!
//! JSON floating point numbers are refused.

use std::collections::BTreeSet;

use num_rational::Ratio;
use serde_json::{json, Map, Value};

use crate::board::{GameSpec, MoveGenerator, Position};
use crate::error::{Error, Result};
use crate::sequences::{explicit_pair, BeattyParams, Precision, QuadraticIrrational, Real, SequencePair};

pub const FORMAT_VERSION: u64 = 1;

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn int(v: &Value, what: &str) -> Result<i64> {
    match v {
        Value::Number(n) if n.is_f64() => Err(perr(format!(
            "{what}: floating point value {n} refused; use {{\"interval\": \"…\", \"precision\": n}}"
        ))),
        Value::Number(n) => n.as_i64().ok_or_else(|| perr(format!("{what}: {n} out of range"))),
        _ => Err(perr(format!("{what}: expected an integer, got {v}"))),
    }
}

fn uint(v: &Value, what: &str) -> Result<u64> {
    u64::try_from(int(v, what)?).map_err(|_| perr(format!("{what}: must be non-negative")))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, what: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| perr(format!("{what}: missing field `{key}`")))
}

fn object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| perr(format!("{what}: expected an object")))
}

fn check_version(obj: &Map<String, Value>) -> Result<()> {
    let v = uint(field(obj, "format", "document")?, "format")?;
    if v != FORMAT_VERSION {
        return Err(perr(format!("unsupported format {v}; expected {FORMAT_VERSION}")));
    }
    Ok(())
}

fn ratio_from(v: &Value, what: &str) -> Result<Ratio<i64>> {
    match v {
        Value::Number(_) => Ok(Ratio::from_integer(int(v, what)?)),
        Value::Object(o) => {
            let num = int(field(o, "num", what)?, what)?;
            let den = int(field(o, "den", what)?, what)?;
            if den == 0 {
                return Err(perr(format!("{what}: zero denominator")));
            }
            Ok(Ratio::new(num, den))
        }
        _ => Err(perr(format!("{what}: expected a rational"))),
    }
}

fn ratio_to(r: &Ratio<i64>) -> Value {
    if *r.denom() == 1 {
        json!(r.numer())
    } else {
        json!({"num": r.numer(), "den": r.denom()})
    }
}

pub fn real_from_json(v: &Value) -> Result<Real> {
    let what = "real";
    let o = match v {
        Value::Number(_) => return Ok(Real::int(int(v, what)?)),
        Value::Object(o) => o,
        _ => return Err(perr(format!("{what}: expected a number or object, got {v}"))),
    };
    let pair = |key: &str| -> Result<(Real, Real)> {
        let arr = o[key].as_array().filter(|a| a.len() == 2).ok_or_else(|| perr(format!("`{key}` takes two operands")))?;
        Ok((real_from_json(&arr[0])?, real_from_json(&arr[1])?))
    };
    if o.contains_key("num") {
        return Ok(Real::Rational(ratio_from(v, what)?));
    }
    if let Some(d) = o.get("sqrt") {
        return Ok(Real::sqrt(uint(d, "sqrt")?));
    }
    if o.contains_key("q") {
        let g = |k: &str| int(field(o, k, what)?, k);
        let d = uint(field(o, "d", what)?, "d")?;
        return Ok(Real::Quadratic(QuadraticIrrational::new(g("p")?, g("q")?, d, g("r")?)?));
    }
    if let Some(lit) = o.get("interval") {
        let lit = lit.as_str().ok_or_else(|| perr("`interval` must be a decimal string"))?;
        let digits = uint(field(o, "precision", "interval")?, "precision")?;
        return Real::decimal(lit, u32::try_from(digits).map_err(|_| perr("precision too large"))?);
    }
    if o.contains_key("lo") {
        let lo = ratio_from(field(o, "lo", what)?, "lo")?;
        let hi = ratio_from(field(o, "hi", what)?, "hi")?;
        if lo > hi {
            return Err(perr("interval with lo > hi"));
        }
        return Ok(Real::Enclosure { lo, hi });
    }
    if o.contains_key("add") {
        let (a, b) = pair("add")?;
        return Ok(a + b);
    }
    if o.contains_key("sub") {
        let (a, b) = pair("sub")?;
        return Ok(a - b);
    }
    if o.contains_key("mul") {
        let (a, b) = pair("mul")?;
        return Ok(a * b);
    }
    if o.contains_key("div") {
        let (a, b) = pair("div")?;
        return Ok(a / b);
    }
    if let Some(a) = o.get("neg") {
        return Ok(-real_from_json(a)?);
    }
    Err(perr(format!("unrecognised real {v}")))
}

pub fn real_to_json(r: &Real) -> Value {
    let bin = |k: &str, a: &Real, b: &Real| json!({ k: [real_to_json(a), real_to_json(b)] });
    match r {
        Real::Rational(q) => ratio_to(q),
        Real::Quadratic(q) => json!({"p": q.p(), "q": q.q(), "d": q.d(), "r": q.r()}),
        Real::Enclosure { lo, hi } => json!({"lo": ratio_to(lo), "hi": ratio_to(hi)}),
        Real::Add(a, b) => bin("add", a, b),
        Real::Sub(a, b) => bin("sub", a, b),
        Real::Mul(a, b) => bin("mul", a, b),
        Real::Div(a, b) => bin("div", a, b),
        Real::Neg(a) => json!({"neg": real_to_json(a)}),
    }
}

fn positions_from(v: &Value, what: &str) -> Result<Vec<Position>> {
    let arr = v.as_array().ok_or_else(|| perr(format!("{what}: expected a list of [x, y]")))?;
    arr.iter()
        .map(|p| match p.as_array().map(Vec::as_slice) {
            Some([x, y]) => Ok(Position::new(uint(x, what)?, uint(y, what)?)),
            _ => Err(perr(format!("{what}: expected [x, y], got {p}"))),
        })
        .collect()
}

fn positions_to(ps: &[Position]) -> Value {
    Value::Array(ps.iter().map(|p| json!([p.x, p.y])).collect())
}

fn values_from(v: &Value, what: &str) -> Result<Vec<i64>> {
    v.as_array()
        .ok_or_else(|| perr(format!("{what}: expected a list of integers")))?
        .iter()
        .map(|x| int(x, what))
        .collect()
}

fn generator_from(v: &Value, precision: Precision) -> Result<MoveGenerator> {
    let o = object(v, "generator")?;
    let kind = field(o, "kind", "generator")?.as_str().ok_or_else(|| perr("generator kind must be a string"))?;
    let f = |k: &str| field(o, k, kind);
    Ok(match kind {
        "explicit" => MoveGenerator::Explicit {
            moves: positions_from(f("moves")?, "moves")?,
            complete_to: o.get("complete_to").map(|c| uint(c, "complete_to")).transpose()?,
        },
        "linear" => MoveGenerator::Linear { p: uint(f("p")?, "p")?, q: uint(f("q")?, "q")? },
        "beatty" => MoveGenerator::BeattyHomogeneous { alpha: real_from_json(f("alpha")?)? },
        "beatty-inhomogeneous" => {
            let alpha = real_from_json(f("alpha")?)?;
            let gamma = o.get("gamma").map(real_from_json).transpose()?;
            let delta = o.get("delta").map(real_from_json).transpose()?;
            let params = match (gamma, delta) {
                (Some(g), Some(d)) => BeattyParams::with_shifts(alpha, g, d)?,
                (Some(g), None) => BeattyParams::with_gamma(alpha, g)?,
                (None, Some(d)) => BeattyParams::with_delta(alpha, d)?,
                (None, None) => return Err(perr("beatty-inhomogeneous needs `gamma` or `delta`")),
            };
            MoveGenerator::BeattyInhomogeneous(params.with_precision(precision)?)
        }
        "sequence-pair" => MoveGenerator::SequencePair(explicit_pair(
            &values_from(f("a")?, "a")?,
            &values_from(f("b")?, "b")?,
        )?),
        "star" => MoveGenerator::StarOf {
            game: Box::new(spec_body_from(object(f("game")?, "game")?, precision)?),
            bound: uint(f("bound")?, "bound")?,
        },
        other => return Err(perr(format!("unknown generator kind `{other}`"))),
    })
}

fn generator_to(g: &MoveGenerator) -> Value {
    let mut o = match g {
        MoveGenerator::Explicit { moves, complete_to } => {
            let mut o = json!({"moves": positions_to(moves)});
            if let Some(c) = complete_to {
                o["complete_to"] = json!(c);
            }
            o
        }
        MoveGenerator::Linear { p, q } => json!({"p": p, "q": q}),
        MoveGenerator::BeattyHomogeneous { alpha } => json!({"alpha": real_to_json(alpha)}),
        MoveGenerator::BeattyInhomogeneous(params) => json!({
            "alpha": real_to_json(params.alpha()),
            "gamma": real_to_json(params.gamma()),
            "delta": real_to_json(params.delta()),
        }),
        MoveGenerator::SequencePair(pair) => json!({"a": pair.a(), "b": pair.b()}),
        MoveGenerator::StarOf { game, bound } => json!({"game": spec_body_to(game), "bound": bound}),
    };
    o["kind"] = json!(g.kind());
    o
}

fn spec_body_from(o: &Map<String, Value>, precision: Precision) -> Result<GameSpec> {
    let name = field(o, "name", "game")?.as_str().ok_or_else(|| perr("name must be a string"))?;
    let arity = o.get("arity").map(|a| uint(a, "arity")).transpose()?.unwrap_or(2);
    let symmetric = match o.get("symmetric") {
        None => true,
        Some(Value::Bool(b)) => *b,
        Some(_) => return Err(perr("symmetric must be a boolean")),
    };
    let generators = field(o, "generators", "game")?
        .as_array()
        .ok_or_else(|| perr("generators must be a list"))?
        .iter()
        .map(|g| generator_from(g, precision))
        .collect::<Result<Vec<_>>>()?;
    let spec = GameSpec { name: name.to_string(), arity: arity as usize, generators, symmetric };
    spec.check_arity()?;
    Ok(spec)
}

fn spec_body_to(spec: &GameSpec) -> Value {
    json!({
        "name": spec.name,
        "arity": spec.arity,
        "symmetric": spec.symmetric,
        "generators": spec.generators.iter().map(generator_to).collect::<Vec<_>>(),
    })
}

/// A file read from disk, classified by its fields.
#[derive(Clone, Debug)]
pub enum Document {
    Game(GameSpec),
    Sequence(SequencePair),
    Claimed(BTreeSet<Position>),
}

pub fn parse_document(text: &str) -> Result<Document> {
    let v: Value = serde_json::from_str(text)?;
    let o = object(&v, "document")?;
    check_version(o)?;
    if o.contains_key("generators") {
        Ok(Document::Game(spec_body_from(o, Precision::from_env()?)?))
    } else if o.contains_key("a") {
        Ok(Document::Sequence(explicit_pair(
            &values_from(field(o, "a", "sequence")?, "a")?,
            &values_from(field(o, "b", "sequence")?, "b")?,
        )?))
    } else if let Some(p) = o.get("positions") {
        Ok(Document::Claimed(positions_from(p, "positions")?.into_iter().collect()))
    } else {
        Err(perr("document has none of `generators`, `a`/`b`, `positions`"))
    }
}

pub fn parse_spec(text: &str) -> Result<GameSpec> {
    match parse_document(text)? {
        Document::Game(g) => Ok(g),
        _ => Err(perr("not a game spec document")),
    }
}

/// Canonical pretty-printed spec document.
pub fn spec_to_string(spec: &GameSpec) -> String {
    let mut v = spec_body_to(spec);
    v["format"] = json!(FORMAT_VERSION);
    let mut s = serde_json::to_string_pretty(&v).expect("serialisable");
    s.push('\n');
    s
}

pub fn sequence_to_string(pair: &SequencePair) -> String {
    let v = json!({"format": FORMAT_VERSION, "a": pair.a(), "b": pair.b()});
    let mut s = serde_json::to_string_pretty(&v).expect("serialisable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn round_trip_catalog_specs() {
        for key in ["nim2", "gdwn12", "wythoff-star", "table2-beatty", "table1", "mouse-trap"] {
            let spec = catalog::get(key).unwrap().spec(30).unwrap();
            let text = spec_to_string(&spec);
            let back = parse_spec(&text).unwrap();
            assert_eq!(back, spec, "{key}");
            assert_eq!(spec_to_string(&back), text);
        }
    }

    #[test]
    fn refuses_floats() {
        let doc = r#"{"format":1,"name":"x","generators":[{"kind":"beatty","alpha":1.618}]}"#;
        let e = parse_spec(doc).unwrap_err();
        assert_eq!(e.code(), "parse");
        assert!(e.to_string().contains("interval"));
    }

    #[test]
    fn reals() {
        let v: Value = serde_json::from_str(r#"{"div":[{"add":[1,{"sqrt":5}]},2]}"#).unwrap();
        let r = real_from_json(&v).unwrap().simplify();
        assert_eq!(r, Real::golden_ratio());
        let v: Value = serde_json::from_str(r#"{"interval":"1.41421356","precision":8}"#).unwrap();
        assert!(!real_from_json(&v).unwrap().is_exact());
    }

    #[test]
    fn documents() {
        assert!(matches!(parse_document(r#"{"format":1,"a":[1,2],"b":[4,7]}"#).unwrap(), Document::Sequence(_)));
        assert!(matches!(
            parse_document(r#"{"format":1,"positions":[[0,0],[1,2],[2,1]]}"#).unwrap(),
            Document::Claimed(_)
        ));
        assert_eq!(parse_document(r#"{"format":2,"a":[],"b":[]}"#).unwrap_err().code(), "parse");
        assert_eq!(parse_document("{").unwrap_err().code(), "parse");
    }
}
