//! Problem files: a TOML document describing one matrix, the minor size and
//! the analyses to run.
//!
//! ```toml
//! format = 1
//! field = "rationals"        # or a prime such as 32003 (the default)
//! order = "grevlex"          # or "lex"
//! variables = ["x", "y", "z"]
//! t = 2
//!
//! [matrix]
//! kind = "ordinary"          # or "symmetric", "alternating"
//! entries = [["x", "y", "z"], ["y", "z", "x"]]
//!
//! [[requested]]
//! analysis = "bounds"
//! k = "1..4"
//! ```
//!
//! For alternating matrices `t` is half the Pfaffian size.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use reesbound::gs::SValue;
use reesbound::instance::ProblemInstance;
use reesbound::matrix::{MatrixKind, PolyMatrix};
use reesbound::poly::{parse_poly, FieldSpec, MonomialOrder, PolyError, Polynomial, Ring, RingRef};
use serde::{Deserialize, Deserializer, Serialize};

use crate::CliError;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub format: u32,
    #[serde(default, skip_serializing_if = "Option::is_none", deserialize_with = "number_or_text")]
    pub field: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    pub variables: Vec<String>,
    pub t: u32,
    pub matrix: MatrixSpec,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub requested: Vec<Analysis>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixSpec {
    pub kind: String,
    pub entries: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "analysis", rename_all = "snake_case", deny_unknown_fields)]
pub enum Analysis {
    Height,
    Gs {
        #[serde(deserialize_with = "text_or_number")]
        s: String,
    },
    Specialize,
    Bounds {
        #[serde(deserialize_with = "text_or_number")]
        k: String,
    },
    Classify,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum NumberOrText {
    Number(u64),
    Text(String),
}

impl NumberOrText {
    fn into_string(self) -> String {
        match self {
            NumberOrText::Number(v) => v.to_string(),
            NumberOrText::Text(s) => s,
        }
    }
}

fn number_or_text<'de, D: Deserializer<'de>>(d: D) -> Result<Option<String>, D::Error> {
    Ok(Some(NumberOrText::deserialize(d)?.into_string()))
}

fn text_or_number<'de, D: Deserializer<'de>>(d: D) -> Result<String, D::Error> {
    Ok(NumberOrText::deserialize(d)?.into_string())
}

/// An inclusive range of powers `k`, written `3` or `1..5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PowerRange {
    pub first: u32,
    pub last: u32,
}

impl PowerRange {
    const MAX_LEN: u32 = 10_000;

    pub fn iter(self) -> impl Iterator<Item = u32> {
        self.first..=self.last
    }
}

impl FromStr for PowerRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |part: &str| {
            part.trim()
                .parse::<u32>()
                .ok()
                .filter(|&k| k >= 1)
                .ok_or_else(|| format!("expected a power k >= 1 or a range a..b, got `{s}`"))
        };
        let (first, last) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let k = parse(s)?;
                (k, k)
            }
        };
        if first > last {
            return Err(format!("empty range `{s}`"));
        }
        if last - first >= Self::MAX_LEN {
            return Err(format!("range `{s}` has more than {} powers", Self::MAX_LEN));
        }
        Ok(PowerRange { first, last })
    }
}

impl fmt::Display for PowerRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.first == self.last {
            write!(f, "{}", self.first)
        } else {
            write!(f, "{}..{}", self.first, self.last)
        }
    }
}

/// A requested analysis with its arguments parsed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Request {
    Height,
    Gs(SValue),
    Specialize,
    Bounds(PowerRange),
    Classify,
}

/// Command-line choices that take precedence over the file.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Overrides {
    pub field: Option<FieldSpec>,
    pub order: Option<MonomialOrder>,
}

/// A problem whose matrix has been built and checked.
#[derive(Clone, Debug)]
pub struct Problem {
    pub matrix: PolyMatrix,
    pub t: u32,
    pub requests: Vec<Request>,
}

pub fn parse_field(text: &str) -> Result<FieldSpec, String> {
    match text.trim().to_ascii_lowercase().as_str() {
        "rationals" | "q" | "qq" => Ok(FieldSpec::Rationals),
        other => {
            let p = other
                .parse::<u64>()
                .map_err(|_| format!("unknown field `{text}` (expected `rationals` or a prime)"))?;
            FieldSpec::prime(p).map_err(|e| e.to_string())
        }
    }
}

pub fn parse_order(text: &str) -> Result<MonomialOrder, String> {
    text.parse()
}

fn schema(key: &str, message: impl fmt::Display) -> CliError {
    CliError::Input(format!("schema error at `{key}`: {message}"))
}

/// Reads and validates a problem file.
pub fn load_problem(path: &Path) -> Result<ProblemFile, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let file = ProblemFile::from_toml(&text)?;
    file.build(Overrides::default())?;
    Ok(file)
}

impl ProblemFile {
    pub fn from_toml(text: &str) -> Result<ProblemFile, CliError> {
        let file: ProblemFile = toml::from_str(text).map_err(|e| {
            let line = e.span().map(|span| text[..span.start].lines().count().max(1));
            let at = line.map(|l| format!(" (line {l})")).unwrap_or_default();
            CliError::Input(format!("schema error{at}: {}", e.message().trim()))
        })?;
        if file.format != FORMAT_VERSION {
            return Err(schema("format", format!("unsupported version {} (expected {FORMAT_VERSION})", file.format)));
        }
        Ok(file)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("problem files serialize")
    }

    fn ring(&self, overrides: Overrides) -> Result<RingRef, CliError> {
        let field = match (overrides.field, &self.field) {
            (Some(f), _) => f,
            (None, Some(text)) => parse_field(text).map_err(|e| schema("field", e))?,
            (None, None) => FieldSpec::default(),
        };
        let order = match (overrides.order, &self.order) {
            (Some(o), _) => o,
            (None, Some(text)) => parse_order(text).map_err(|e| schema("order", e))?,
            (None, None) => MonomialOrder::default(),
        };
        Ring::new(self.variables.clone(), field, order).map_err(|e| schema("variables", e))
    }

    /// Parses the entries, checks the matrix kind and the range of `t`.
    pub fn build(&self, overrides: Overrides) -> Result<Problem, CliError> {
        let ring = self.ring(overrides)?;
        let kind: MatrixKind = self.matrix.kind.parse().map_err(|e| schema("matrix.kind", e))?;
        if self.matrix.entries.is_empty() || self.matrix.entries[0].is_empty() {
            return Err(schema("matrix.entries", "the matrix is empty"));
        }
        let mut rows = Vec::with_capacity(self.matrix.entries.len());
        for (i, row) in self.matrix.entries.iter().enumerate() {
            let parsed: Result<Vec<Polynomial>, CliError> = row
                .iter()
                .enumerate()
                .map(|(j, text)| parse_poly(text, &ring).map_err(|e| entry_error(i, j, text, &e)))
                .collect();
            rows.push(parsed?);
        }
        let matrix = PolyMatrix::new(&ring, kind, rows).map_err(|e| schema("matrix.entries", e))?;
        ProblemInstance::shape(kind, matrix.nrows() as u32, matrix.ncols() as u32, self.t)
            .map_err(|e| schema("t", e))?;
        let requests = self.requested.iter().map(Analysis::request).collect::<Result<_, _>>()?;
        Ok(Problem { matrix, t: self.t, requests })
    }
}

impl Analysis {
    fn request(&self) -> Result<Request, CliError> {
        Ok(match self {
            Analysis::Height => Request::Height,
            Analysis::Gs { s } => Request::Gs(s.parse().map_err(|e| schema("requested.s", e))?),
            Analysis::Specialize => Request::Specialize,
            Analysis::Bounds { k } => Request::Bounds(k.parse().map_err(|e| schema("requested.k", e))?),
            Analysis::Classify => Request::Classify,
        })
    }
}

/// A parse error with the offending text and a caret under the position.
fn entry_error(i: usize, j: usize, text: &str, e: &PolyError) -> CliError {
    let mut message = format!("matrix entry ({}, {}): {e}", i + 1, j + 1);
    if let Some(pos) = e.position() {
        let column = text[..pos.min(text.len())].chars().count();
        message.push_str(&format!("\n    {text}\n    {}^", " ".repeat(column)));
    }
    CliError::Input(message)
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str =
        "format = 1\nvariables = [\"x\"]\nt = 1\n[matrix]\nkind = \"ordinary\"\nentries = [[\"x\"]]\n";

    #[test]
    fn minimal_file_loads() {
        let f = ProblemFile::from_toml(MINIMAL).unwrap();
        let p = f.build(Overrides::default()).unwrap();
        assert_eq!((p.matrix.nrows(), p.t), (1, 1));
        assert_eq!(p.matrix.ring().field(), FieldSpec::default());
    }

    #[test]
    fn structured_round_trip() {
        let text = "format = 1\nfield = 7\norder = \"lex\"\nvariables = [\"a\", \"b\"]\nt = 2\n\
                    [matrix]\nkind = \"symmetric\"\nentries = [[\"a\", \"b\"], [\"b\", \"a^2\"]]\n\
                    [[requested]]\nanalysis = \"gs\"\ns = 3\n[[requested]]\nanalysis = \"bounds\"\nk = \"2..4\"\n";
        let f = ProblemFile::from_toml(text).unwrap();
        assert_eq!(f.field.as_deref(), Some("7"));
        assert_eq!(ProblemFile::from_toml(&f.to_toml()).unwrap(), f);
        let p = f.build(Overrides::default()).unwrap();
        assert_eq!(p.requests, vec![Request::Gs(SValue::Finite(3)), Request::Bounds(PowerRange { first: 2, last: 4 })]);
    }

    #[test]
    fn schema_errors_name_the_key() {
        let asym = MINIMAL.replace("\nt = 1", "\nt = 1\nextra = 3");
        assert!(ProblemFile::from_toml(&asym).unwrap_err().to_string().contains("extra"));
        let missing = MINIMAL.replace("\nt = 1\n", "\n");
        assert!(ProblemFile::from_toml(&missing).unwrap_err().to_string().contains("`t`"));
        let sym = "format = 1\nvariables = [\"x\", \"y\"]\nt = 1\n[matrix]\nkind = \"symmetric\"\n\
                   entries = [[\"x\", \"y\"], [\"x\", \"y\"]]\n";
        let err = ProblemFile::from_toml(sym).unwrap().build(Overrides::default()).unwrap_err();
        assert!(err.to_string().contains("matrix.entries") && err.to_string().contains("symmetric"), "{err}");
        let version = MINIMAL.replace("format = 1", "format = 2");
        assert!(ProblemFile::from_toml(&version).unwrap_err().to_string().contains("`format`"));
        let t = MINIMAL.replace("\nt = 1", "\nt = 2");
        assert!(ProblemFile::from_toml(&t)
            .unwrap()
            .build(Overrides::default())
            .unwrap_err()
            .to_string()
            .contains("`t`"));
    }

    #[test]
    fn entry_errors_point_at_the_position() {
        let bad =
            MINIMAL.replace("variables = [\"x\"]", "variables = [\"x\", \"y\"]").replace("[[\"x\"]]", "[[\"x+*y\"]]");
        let err = ProblemFile::from_toml(&bad).unwrap().build(Overrides::default()).unwrap_err().to_string();
        assert!(err.contains("entry (1, 1)") && err.contains("position 2"), "{err}");
        assert!(err.ends_with("x+*y\n      ^"), "{err}");
    }

    #[test]
    fn power_ranges() {
        assert_eq!("3".parse::<PowerRange>().unwrap(), PowerRange { first: 3, last: 3 });
        assert_eq!("1..=4".parse::<PowerRange>().unwrap().iter().count(), 4);
        assert_eq!("2..5".parse::<PowerRange>().unwrap().to_string(), "2..5");
        for bad in ["0", "5..2", "x", "1..100000"] {
            assert!(bad.parse::<PowerRange>().is_err(), "{bad}");
        }
    }

    #[test]
    fn fields() {
        assert_eq!(parse_field("rationals").unwrap(), FieldSpec::Rationals);
        assert_eq!(parse_field("101").unwrap(), FieldSpec::Prime(101));
        assert!(parse_field("100").is_err());
    }
}
