//! JSON helpers shared by the descriptor types.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::Value;

use crate::error::{Error, Result};

const SAFE: u64 = 1 << 53;

/// Integers below 2^53 become JSON numbers, larger ones decimal strings.
pub fn int_value(v: &BigUint) -> Value {
    match v.to_u64() {
        Some(x) if x < SAFE => Value::from(x),
        _ => Value::String(v.to_string()),
    }
}

pub fn value_int(v: &Value) -> Result<BigUint> {
    match v {
        Value::Number(n) => n
            .as_u64()
            .map(BigUint::from)
            .ok_or_else(|| Error::Parse(format!("expected a nonnegative integer, got {n}"))),
        Value::String(s) => s
            .parse::<BigUint>()
            .map_err(|_| Error::Parse(format!("expected a decimal integer, got {s:?}"))),
        other => Err(Error::Parse(format!("expected an integer, got {other}"))),
    }
}
