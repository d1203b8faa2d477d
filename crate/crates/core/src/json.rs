//! Big integers as bare JSON numbers (no precision loss).

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{Number, Value};

pub fn big_value(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("decimal integer is a JSON number"))
}

pub fn value_big(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string()).ok(),
        Value::String(s) => BigInt::from_str(s).ok(),
        _ => None,
    }
}

/// `#[serde(with = "json::big")]`
pub mod big {
    use super::*;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        big_value(v).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let v = Value::deserialize(d)?;
        value_big(&v).ok_or_else(|| serde::de::Error::custom("expected an integer"))
    }
}

/// `#[serde(with = "json::big_vec")]`
pub mod big_vec {
    use super::*;
    use serde::{Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(big_value).collect::<Vec<_>>().serialize(s)
    }
}
