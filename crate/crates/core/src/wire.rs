//! Small helpers for the documented JSON wire formats.

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Largest magnitude serialised as a plain JSON number. Beyond this,
/// values are written as decimal strings so consumers that parse JSON
/// numbers as doubles cannot silently lose precision.
pub const JSON_SAFE_MAGNITUDE: i128 = 1 << 53;

/// An integer that crosses the JSON boundary safely: a number while it
/// fits in 53 bits, a decimal string beyond that. Both forms are accepted
/// when reading.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct JsonInt(pub i128);

impl From<i128> for JsonInt {
    fn from(v: i128) -> Self {
        JsonInt(v)
    }
}

impl From<u64> for JsonInt {
    fn from(v: u64) -> Self {
        JsonInt(i128::from(v))
    }
}

impl From<i64> for JsonInt {
    fn from(v: i64) -> Self {
        JsonInt(i128::from(v))
    }
}

impl fmt::Display for JsonInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.0.abs() <= JSON_SAFE_MAGNITUDE {
            serializer.serialize_i64(self.0 as i64)
        } else {
            serializer.serialize_str(&self.0.to_string())
        }
    }
}

struct JsonIntVisitor;

impl<'de> Visitor<'de> for JsonIntVisitor {
    type Value = JsonInt;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an integer or a decimal string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
        Ok(JsonInt(i128::from(v)))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
        Ok(JsonInt(i128::from(v)))
    }

    fn visit_i128<E: de::Error>(self, v: i128) -> Result<JsonInt, E> {
        Ok(JsonInt(v))
    }

    fn visit_u128<E: de::Error>(self, v: u128) -> Result<JsonInt, E> {
        i128::try_from(v)
            .map(JsonInt)
            .map_err(|_| E::custom("integer out of range"))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonInt, E> {
        v.parse::<i128>()
            .map(JsonInt)
            .map_err(|_| E::custom(format!("not a decimal integer: {v:?}")))
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<JsonInt, D::Error> {
        deserializer.deserialize_any(JsonIntVisitor)
    }
}
