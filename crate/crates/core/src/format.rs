//! The JSON algebra file format.
//!
//! ```json
//! {
//!   "name": "N3",
//!   "vertices": ["v"],
//!   "arrows": [{"name": "x", "from": "v", "to": "v"}],
//!   "relations": [{"terms": [{"coeff": "1", "path": ["x", "x", "x"]}]}],
//!   "qh_order": ["v"]
//! }
//! ```
//!
//! Paths list arrow names in traversal order. Coefficients are rational
//! strings such as `"-1/2"`.

use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{Algebra, Arrow, Path, Quiver, Relation};
use crate::error::{Error, Result};
use crate::linalg::{fmt_rat, Rat};
use crate::qh::QhOrder;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub relations: Vec<RelationSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub qh_order: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub name: String,
    pub from: String,
    pub to: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationSpec {
    pub terms: Vec<TermSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub coeff: Coeff,
    pub path: Vec<String>,
}

/// A rational coefficient written as a string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coeff(pub Rat);

impl Serialize for Coeff {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rat(&self.0))
    }
}

impl<'de> Deserialize<'de> for Coeff {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Coeff, D::Error> {
        struct V;
        impl de::Visitor<'_> for V {
            type Value = Coeff;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational number as a string, e.g. \"-1/2\"")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Coeff, E> {
                parse_rational(v).map(Coeff).ok_or_else(|| E::custom(format!("bad coefficient '{v}'")))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Coeff, E> {
                Ok(Coeff(crate::linalg::rat(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Coeff, E> {
                i64::try_from(v).map(|v| Coeff(crate::linalg::rat(v))).map_err(|_| E::custom("coefficient too large"))
            }
        }
        d.deserialize_any(V)
    }
}

fn parse_rational(s: &str) -> Option<Rat> {
    let s = s.trim().replace('\u{2212}', "-");
    let r = Rat::from_str(&s).ok()?;
    Some(r)
}

/// Parses and validates an algebra file.
pub fn parse_algebra(text: &str) -> Result<AlgebraFile> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: strip_position(&e.to_string()),
    })?;
    file.validate()?;
    Ok(file)
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

impl AlgebraFile {
    pub fn validate(&self) -> Result<()> {
        self.build().map(|_| ())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    fn quiver(&self) -> Result<Quiver> {
        if self.vertices.is_empty() {
            return Err(Error::Validation("no vertices".into()));
        }
        let vertex = |name: &str, arrow: &str| {
            self.vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::Validation(format!("arrow '{arrow}' uses unknown vertex '{name}'")))
        };
        let arrows = self
            .arrows
            .iter()
            .map(|a| {
                Ok(Arrow { name: a.name.clone(), source: vertex(&a.from, &a.name)?, target: vertex(&a.to, &a.name)? })
            })
            .collect::<Result<Vec<_>>>()?;
        Quiver::new(self.vertices.clone(), arrows)
    }

    /// The algebra and the vertex order (the listed order when absent).
    pub fn build(&self) -> Result<(Algebra, QhOrder)> {
        let q = self.quiver()?;
        let mut rels = Vec::new();
        for (ri, r) in self.relations.iter().enumerate() {
            let mut terms = Vec::new();
            for t in &r.terms {
                let arrows = t
                    .path
                    .iter()
                    .map(|a| {
                        q.arrow_index(a)
                            .ok_or_else(|| Error::Validation(format!("relation {}: unknown arrow '{a}'", ri + 1)))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let path = Path::from_arrows(&q, arrows)
                    .map_err(|e| Error::Validation(format!("relation {}: {}", ri + 1, inner(e))))?;
                terms.push((t.coeff.0.clone(), path));
            }
            rels.push(
                Relation::new(terms).map_err(|e| Error::Validation(format!("relation {}: {}", ri + 1, inner(e))))?,
            );
        }
        let order = match &self.qh_order {
            None => QhOrder::natural(self.vertices.len()),
            Some(names) => {
                let idx = names
                    .iter()
                    .map(|n| {
                        q.vertex_index(n)
                            .ok_or_else(|| Error::Validation(format!("qh_order names unknown vertex '{n}'")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                if idx.len() != self.vertices.len() {
                    return Err(Error::Validation("qh_order must list every vertex exactly once".into()));
                }
                QhOrder::new(idx)?
            }
        };
        let alg = Algebra::new(&self.name, q, rels)?;
        Ok((alg, order))
    }
}

fn inner(e: Error) -> String {
    match e {
        Error::Validation(m) => m,
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A2: &str = r#"{
  "name": "A2",
  "vertices": ["1", "2"],
  "arrows": [{"name": "a", "from": "1", "to": "2"}]
}"#;

    #[test]
    fn parses_a2() {
        let f = parse_algebra(A2).unwrap();
        let (a, order) = f.build().unwrap();
        assert_eq!(a.vertex_count(), 2);
        assert_eq!(a.arrow_count(), 1);
        assert_eq!(order.order(), &[0, 1]);
        assert_eq!(parse_algebra(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn positioned_errors() {
        let bad = "{\n  \"name\": \"x\",\n  \"vertices\": [\"1\",]\n}";
        match parse_algebra(bad) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        let bad_coeff = r#"{"name":"x","vertices":["v"],"arrows":[{"name":"x","from":"v","to":"v"}],
"relations":[{"terms":[{"coeff":"1/0x","path":["x","x"]}]}]}"#;
        match parse_algebra(bad_coeff) {
            Err(Error::Parse { line, message, .. }) => {
                assert_eq!(line, 2);
                assert!(message.contains("bad coefficient"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn validation_errors() {
        let unknown = r#"{"name":"x","vertices":["1","2"],"arrows":[{"name":"a","from":"1","to":"2"}],
"relations":[{"terms":[{"coeff":"1","path":["a","b"]}]}]}"#;
        assert!(matches!(parse_algebra(unknown), Err(Error::Validation(m)) if m.contains("unknown arrow 'b'")));
        let nonpar = r#"{"name":"x","vertices":["1","2","3"],
"arrows":[{"name":"a","from":"1","to":"2"},{"name":"b","from":"2","to":"3"},{"name":"c","from":"2","to":"2"}],
"relations":[{"terms":[{"coeff":"1","path":["a","b"]},{"coeff":"-1/2","path":["a","c"]}]}]}"#;
        assert!(matches!(parse_algebra(nonpar), Err(Error::Validation(m)) if m.contains("parallel")));
        let order = r#"{"name":"x","vertices":["1","2"],"qh_order":["1","1"]}"#;
        assert!(matches!(parse_algebra(order), Err(Error::Validation(_))));
    }
}
