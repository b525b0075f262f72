//! Exact values as JSON: integers as numbers when they fit in `u64`,
//! rationals as `"p/q"` strings, cyclotomics as `{conductor, coefficients}`.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use relfrob::{Cyclo, QPoly, Rational};
use serde_json::{json, Value};

pub fn nat(n: &BigUint) -> Value {
    match n.to_u64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

pub fn nat128(n: u128) -> Value {
    match u64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

pub fn rational(r: &Rational) -> Value {
    json!(r.to_string())
}

pub fn cyclo(c: &Cyclo) -> Value {
    json!({
        "conductor": c.conductor(),
        "coefficients": c.coeffs().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
    })
}

/// Dense coefficient list from the lowest exponent upward.
pub fn poly(p: &QPoly) -> Value {
    let lo = p.min_exponent().unwrap_or(0);
    let hi = p.max_exponent().unwrap_or(0);
    json!({
        "variable": p.variable(),
        "min_exponent": lo,
        "coefficients": (lo..=hi).map(|e| p.coeff(e).to_string()).collect::<Vec<_>>(),
        "display": p.to_string(),
    })
}

/// Flattens a report into `path<TAB>value` lines, one per leaf, with array
/// indices as path segments.
pub fn to_tsv(v: &Value) -> String {
    fn walk(v: &Value, path: &mut Vec<String>, out: &mut String) {
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    path.push(k.clone());
                    walk(x, path, out);
                    path.pop();
                }
            }
            Value::Array(a) => {
                for (i, x) in a.iter().enumerate() {
                    path.push(i.to_string());
                    walk(x, path, out);
                    path.pop();
                }
            }
            Value::String(s) => out.push_str(&format!("{}\t{}\n", path.join("."), s)),
            other => out.push_str(&format!("{}\t{}\n", path.join("."), other)),
        }
    }
    let mut out = String::new();
    walk(v, &mut Vec::new(), &mut out);
    out
}
