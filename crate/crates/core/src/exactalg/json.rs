//! JSON encodings: a rational is the string `"a/b"` (or `"a"` when `b = 1`),
//! a q-polynomial is `{"coeffs": ["c0", "c1", ...]}` in ascending degree.

use num_rational::BigRational;
use serde_json::{json, Value};

use super::Poly;
use crate::error::{Error, Result};

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let value: BigRational = t
        .parse()
        .map_err(|_| Error::parse(s, "expected an integer or a/b rational"))?;
    Ok(value)
}

pub fn rational_to_json(r: &BigRational) -> Value {
    Value::String(r.to_string())
}

pub fn rational_from_json(v: &Value) -> Result<BigRational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
        other => Err(Error::parse(
            other.to_string(),
            "expected a rational string",
        )),
    }
}

pub fn qpoly_to_json(p: &Poly<BigRational>) -> Value {
    json!({ "coeffs": p.coeffs().iter().map(rational_to_json).collect::<Vec<_>>() })
}

pub fn qpoly_from_json(v: &Value) -> Result<Poly<BigRational>> {
    let coeffs = v
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::parse(v.to_string(), "expected {\"coeffs\": [...]}"))?;
    let coeffs = coeffs
        .iter()
        .map(rational_from_json)
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_strings() {
        let r = parse_rational("6/4").unwrap();
        assert_eq!(rational_to_json(&r), json!("3/2"));
        assert_eq!(
            rational_to_json(&parse_rational("-4/2").unwrap()),
            json!("-2")
        );
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn qpoly_round_trip() {
        let v = json!({"coeffs": ["1", "0", "1/3", "0"]});
        let p = qpoly_from_json(&v).unwrap();
        assert_eq!(p.degree(), Some(2));
        assert_eq!(qpoly_to_json(&p), json!({"coeffs": ["1", "0", "1/3"]}));
        assert_eq!(qpoly_to_json(&Poly::new(vec![])), json!({"coeffs": []}));
    }
}
