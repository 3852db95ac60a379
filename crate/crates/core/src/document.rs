//! The `.bss.json` document format.
//!
//! ```json
//! {
//!   "universe": ["u1", "u2"],
//!   "pairs": [
//!     {"pos": "e1", "neg": "e2"}
//!   ],
//!   "assignments": [
//!     {"param": "e1", "positive": ["u1"], "negative": ["u2"]}
//!   ]
//! }
//! ```
//!
//! The order of `pairs` defines the negation bijection. Parameters absent from
//! `assignments` are `(∅, ∅)`. [`serialize`] emits the canonical form: sets in
//! universe order, assignments in parameter order, `(∅, ∅)` entries omitted,
//! two-space indentation, LF line endings and a trailing newline.

use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::{Assignment, BipolarSoftSet};
use crate::space::ParameterSpace;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairRecord {
    pub pos: String,
    pub neg: String,
}

/// Raw, unvalidated document contents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub universe: Vec<String>,
    pub pairs: Vec<PairRecord>,
    #[serde(default)]
    pub assignments: Vec<Assignment>,
}

impl Document {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::from_json(&e))
    }

    pub fn space(&self) -> Result<ParameterSpace> {
        ParameterSpace::new(
            self.universe.iter().cloned(),
            self.pairs.iter().map(|p| (p.pos.clone(), p.neg.clone())),
        )
    }

    pub fn into_set(self) -> Result<BipolarSoftSet> {
        let space = Arc::new(self.space()?);
        BipolarSoftSet::new(space, self.assignments)
    }

    /// The canonical document of a set.
    pub fn of(set: &BipolarSoftSet) -> Self {
        let space = set.space();
        Document {
            universe: space.universe().to_vec(),
            pairs: space
                .pairs()
                .map(|(pos, neg)| PairRecord {
                    pos: pos.into(),
                    neg: neg.into(),
                })
                .collect(),
            assignments: set
                .assignments()
                .into_iter()
                .filter(|a| !(a.positive.is_empty() && a.negative.is_empty()))
                .collect(),
        }
    }
}

pub fn parse(text: &str) -> Result<BipolarSoftSet> {
    Document::from_json(text)?.into_set()
}

/// Canonical text of a set. Equal sets always produce identical bytes.
pub fn serialize(set: &BipolarSoftSet) -> String {
    let doc = Document::of(set);
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"universe\": {},", string_array(&doc.universe));
    out.push_str("  \"pairs\": [");
    push_lines(
        &mut out,
        doc.pairs
            .iter()
            .map(|p| format!("{{\"pos\": {}, \"neg\": {}}}", quote(&p.pos), quote(&p.neg))),
    );
    out.push_str("],\n");
    out.push_str("  \"assignments\": [");
    push_lines(
        &mut out,
        doc.assignments.iter().map(|a| {
            format!(
                "{{\"param\": {}, \"positive\": {}, \"negative\": {}}}",
                quote(&a.param),
                string_array(&a.positive),
                string_array(&a.negative)
            )
        }),
    );
    out.push_str("]\n}\n");
    out
}

pub fn read_file(path: impl AsRef<Path>) -> Result<BipolarSoftSet, ReadError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| ReadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse(&text).map_err(ReadError::Invalid)
}

#[derive(Debug, thiserror::Error)]
pub enum ReadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Invalid(#[from] Error),
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn string_array(items: &[String]) -> String {
    let quoted: Vec<String> = items.iter().map(|s| quote(s)).collect();
    format!("[{}]", quoted.join(", "))
}

fn push_lines(out: &mut String, lines: impl Iterator<Item = String>) {
    let lines: Vec<String> = lines.collect();
    if lines.is_empty() {
        return;
    }
    out.push('\n');
    for (idx, line) in lines.iter().enumerate() {
        out.push_str("    ");
        out.push_str(line);
        if idx + 1 < lines.len() {
            out.push(',');
        }
        out.push('\n');
    }
    out.push_str("  ");
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = r#"{
  "universe": ["u1", "u2", "u3"],
  "pairs": [
    {"pos": "e1", "neg": "e2"},
    {"pos": "e3", "neg": "e4"}
  ],
  "assignments": [
    {"param": "e3", "positive": ["u3", "u1"], "negative": ["u2"]}
  ]
}
"#;

    #[test]
    fn canonical_form() {
        let set = parse(SMALL).unwrap();
        assert_eq!(
            serialize(&set),
            r#"{
  "universe": ["u1", "u2", "u3"],
  "pairs": [
    {"pos": "e1", "neg": "e2"},
    {"pos": "e3", "neg": "e4"}
  ],
  "assignments": [
    {"param": "e3", "positive": ["u1", "u3"], "negative": ["u2"]}
  ]
}
"#
        );
    }

    #[test]
    fn empty_assignments_render_inline() {
        let set = parse(r#"{"universe": ["a"], "pairs": [{"pos": "p", "neg": "q"}]}"#).unwrap();
        assert_eq!(
            serialize(&set),
            "{\n  \"universe\": [\"a\"],\n  \"pairs\": [\n    {\"pos\": \"p\", \"neg\": \"q\"}\n  ],\n  \"assignments\": []\n}\n"
        );
    }

    #[test]
    fn escapes_identifiers() {
        let set = parse(r#"{"universe": ["a\"b"], "pairs": [{"pos": "(p,q)", "neg": "n\\m"}],
            "assignments": [{"param": "(p,q)", "positive": ["a\"b"]}]}"#)
        .unwrap();
        let text = serialize(&set);
        assert!(text.contains(r#""a\"b""#));
        assert_eq!(parse(&text).unwrap(), set);
    }

    #[test]
    fn overlap_is_a_domain_error() {
        let text = r#"{"universe": ["u1"], "pairs": [{"pos": "e1", "neg": "e2"}],
            "assignments": [{"param": "e1", "positive": ["u1"], "negative": ["u1"]}]}"#;
        assert_eq!(
            parse(text).unwrap_err(),
            Error::DisjointnessViolation {
                param: "e1".into(),
                witnesses: vec!["u1".into()]
            }
        );
    }

    #[test]
    fn malformed_reports_location() {
        let err = parse("{\n  \"universe\": [\"u1\",\n  \"pairs\": 3\n}").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        let err = parse(r#"{"universe": ["u1"], "pairs": [], "extra": 1}"#).unwrap_err();
        assert!(err.is_parse(), "{err:?}");
        let missing = parse(r#"{"universe": ["u1"]}"#).unwrap_err();
        assert!(missing.is_parse());
    }

    #[test]
    fn semantic_errors_surface() {
        let empty_pairs = parse(r#"{"universe": ["u1"], "pairs": []}"#).unwrap_err();
        assert_eq!(empty_pairs, Error::EmptyParameters);
        let unknown = parse(
            r#"{"universe": ["u1"], "pairs": [{"pos": "e1", "neg": "e2"}],
                "assignments": [{"param": "e2", "negative": ["u1"]}]}"#,
        )
        .unwrap_err();
        assert_eq!(unknown, Error::UnknownParameter("e2".into()));
    }
}
