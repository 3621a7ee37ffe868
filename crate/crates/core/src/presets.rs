//! Built-in algebras.

use crate::error::{Error, Result};
use crate::format::{parse_algebra, AlgebraFile};

const A1: &str = r#"{
  "name": "A1",
  "vertices": ["1"]
}"#;

const A2: &str = r#"{
  "name": "A2",
  "vertices": ["1", "2"],
  "arrows": [{"name": "a", "from": "1", "to": "2"}]
}"#;

const A3: &str = r#"{
  "name": "A3",
  "vertices": ["1", "2", "3"],
  "arrows": [
    {"name": "a", "from": "1", "to": "2"},
    {"name": "b", "from": "2", "to": "3"}
  ]
}"#;

const N3: &str = r#"{
  "name": "N3",
  "vertices": ["1"],
  "arrows": [{"name": "x", "from": "1", "to": "1"}],
  "relations": [{"terms": [{"coeff": "1", "path": ["x", "x", "x"]}]}]
}"#;

const KRONECKER: &str = r#"{
  "name": "kronecker",
  "vertices": ["1", "2"],
  "arrows": [
    {"name": "a", "from": "1", "to": "2"},
    {"name": "b", "from": "1", "to": "2"}
  ]
}"#;

/// `1 -> 2 -> 3` with a shortcut `1 -> 3` and `ab = 0`, ordered `2 < 1 < 3`.
/// Quasi-hereditary, with `Δ(1) = P(1)/S(3)`; `S(1)` is not Δ-filtered.
const QH4: &str = r#"{
  "name": "QH4",
  "vertices": ["1", "2", "3"],
  "arrows": [
    {"name": "a", "from": "1", "to": "2"},
    {"name": "b", "from": "2", "to": "3"},
    {"name": "c", "from": "1", "to": "3"}
  ],
  "relations": [{"terms": [{"coeff": "1", "path": ["a", "b"]}]}],
  "qh_order": ["2", "1", "3"]
}"#;

const ALL: [(&str, &str); 6] = [("A1", A1), ("A2", A2), ("A3", A3), ("N3", N3), ("kronecker", KRONECKER), ("QH4", QH4)];

pub fn preset_names() -> Vec<&'static str> {
    ALL.iter().map(|(n, _)| *n).collect()
}

pub fn preset_text(name: &str) -> Option<&'static str> {
    ALL.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub fn preset(name: &str) -> Result<AlgebraFile> {
    let text = preset_text(name).ok_or_else(|| {
        Error::InvalidInput(format!("unknown preset '{name}' (known: {})", preset_names().join(", ")))
    })?;
    parse_algebra(text)
}

pub fn presets() -> Vec<(&'static str, AlgebraFile)> {
    ALL.iter().map(|(n, t)| (*n, parse_algebra(t).expect("presets are valid"))).collect()
}
