//! Exact values as JSON and text. Rationals are canonical `p/q` strings.

use serde_json::{json, Value};

use crate::exactalg::{IntPolynomial, LaurentProfile, QSqrtScalar, Rational, TruncatedSeries};

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn rationals<'a>(rs: impl IntoIterator<Item = &'a Rational>) -> Value {
    Value::Array(rs.into_iter().map(rational).collect())
}

pub fn qsqrt(x: &QSqrtScalar) -> Value {
    json!({ "a": x.a().to_string(), "b": x.b().to_string() })
}

pub fn poly(p: &IntPolynomial) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

pub fn series(s: &TruncatedSeries) -> Value {
    rationals(s.coeffs())
}

pub fn laurent(p: &LaurentProfile) -> Value {
    Value::Array(
        p.terms()
            .map(|(k, c)| json!({ "exp": k, "a": c.a().to_string(), "b": c.b().to_string() }))
            .collect(),
    )
}

pub fn laurent_text(p: &LaurentProfile) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.terms()
        .map(|(k, c)| format!("({c})*Z^{k}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn series_text(s: &TruncatedSeries) -> String {
    s.coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| format!("u^{j}: {c}"))
        .collect::<Vec<_>>()
        .join(", ")
}
