//! Serialization helpers shared by the report types and the CLI.

use std::fmt::Display;

use serde::Serializer;

/// Version tag carried by every JSON document.
pub const SCHEMA: &str = "lefdet/1";

/// Serializes ring elements through their `Display` form, so rationals come
/// out as `"p"` or `"p/q"` strings and never as floats.
pub fn ser_display<T: Display, S: Serializer>(value: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

pub fn ser_display_opt<T: Display, S: Serializer>(value: &Option<T>, s: S) -> Result<S::Ok, S::Error> {
    match value {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}
