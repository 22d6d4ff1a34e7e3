//! Serde adapters for exact types whose native encodings are not
//! human-readable (big integers become decimal strings).

pub(crate) mod big_int {
    use std::str::FromStr;

    use serde::{Deserialize, Deserializer, Serializer};

    use crate::exact::Int;

    pub fn serialize<S: Serializer>(x: &Int, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Int, D::Error> {
        let raw = String::deserialize(d)?;
        Int::from_str(&raw).map_err(serde::de::Error::custom)
    }
}
