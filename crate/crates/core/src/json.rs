//! Number formatting shared by the JSON and CSV writers: every finite value is
//! printed with 17 significant digits, non-finite values as strings.

use serde::Serializer;
use serde_json::Value;

use crate::Complex;

pub fn sig17(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else if x.is_nan() {
        "nan".to_owned()
    } else if x > 0.0 {
        "inf".to_owned()
    } else {
        "-inf".to_owned()
    }
}

pub fn number(x: f64) -> Value {
    if x.is_finite() {
        Value::Number(sig17(x).parse().expect("formatted float is a JSON number"))
    } else {
        Value::String(sig17(x))
    }
}

pub fn complex(z: Complex) -> Value {
    serde_json::json!({ "re": number(z.re), "im": number(z.im) })
}

pub fn serialize_f64<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&number(*x), s)
}

pub fn serialize_opt_f64<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => serialize_f64(v, s),
        None => s.serialize_none(),
    }
}

pub fn serialize_vec_f64<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
    let v: Vec<Value> = xs.iter().map(|&x| number(x)).collect();
    serde::Serialize::serialize(&v, s)
}

pub fn serialize_complex<S: Serializer>(z: &Complex, s: S) -> Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&complex(*z), s)
}
