//! Serde helpers that render integers as decimal strings, so JSON consumers
//! never lose precision past the 53-bit float mantissa.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::Serializer;

pub mod dec {
    use super::*;

    pub fn serialize<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }
}

pub mod dec_opt {
    use super::*;

    pub fn serialize<T: Display, S: Serializer>(v: &Option<T>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => s.collect_str(x),
            None => s.serialize_none(),
        }
    }
}

pub mod dec_map {
    use super::*;
    use serde::ser::SerializeMap;

    pub fn serialize<K, V, S>(map: &BTreeMap<K, V>, s: S) -> Result<S::Ok, S::Error>
    where
        K: Display,
        V: Display,
        S: Serializer,
    {
        let mut out = s.serialize_map(Some(map.len()))?;
        for (k, v) in map {
            out.serialize_entry(&k.to_string(), &v.to_string())?;
        }
        out.end()
    }
}
