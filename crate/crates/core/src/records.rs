//! Flat key/value text records for certificates and construction results.
//!
//! Records have a fixed field order for stable diffs and are self-delimiting
//! in streams (terminated by a blank line or end of input):
//!
//! ```text
//! record: certificate
//! target: F
//! value: 6
//! witness: 0,2,4,5,8,9
//! route: exhaustive
//! basis: -
//! ```

use thiserror::Error;

use crate::bitset::{parse_vertex_set, SetParseError};
use crate::construct::{Claim, ConstructionResult};
use crate::oracle::{Certificate, Route, Stat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecordError {
    #[error("empty record")]
    Empty,
    #[error("missing field `{0}`")]
    MissingField(&'static str),
    #[error("expected field `{expected}`, found `{found}`")]
    UnexpectedField {
        expected: &'static str,
        found: String,
    },
    #[error("malformed line `{0}`")]
    MalformedLine(String),
    #[error("unknown record type `{0}`")]
    UnknownType(String),
    #[error("invalid value for `{field}`: {message}")]
    InvalidValue {
        field: &'static str,
        message: String,
    },
    #[error("invalid set for `{field}`: {source}")]
    InvalidSet {
        field: &'static str,
        source: SetParseError,
    },
}

/// A parsed record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Record {
    Certificate(Certificate),
    Construction(ConstructionResult),
}

/// Renders a certificate record; fields in fixed order, `-` for no basis.
pub fn certificate_record(cert: &Certificate) -> String {
    format!(
        "record: certificate\ntarget: {}\nvalue: {}\nwitness: {}\nroute: {}\nbasis: {}\n",
        cert.target,
        cert.value,
        cert.witness,
        cert.route,
        cert.basis.as_deref().unwrap_or("-"),
    )
}

/// Renders a construction record; the set uses the command-line set syntax.
pub fn construction_record(result: &ConstructionResult) -> String {
    let claims = result
        .claims
        .iter()
        .map(Claim::to_string)
        .collect::<Vec<_>>()
        .join(",");
    format!(
        "record: construction\nsource: {}\npredicted_size: {}\nclaims: {}\nset: {}\n",
        result.source, result.predicted_size, claims, result.set,
    )
}

struct Fields<'a> {
    lines: std::iter::Peekable<std::str::Lines<'a>>,
}

impl<'a> Fields<'a> {
    fn new(text: &'a str) -> Fields<'a> {
        Fields {
            lines: text.lines().peekable(),
        }
    }

    fn take(&mut self, key: &'static str) -> Result<&'a str, RecordError> {
        let line = loop {
            match self.lines.next() {
                None => return Err(RecordError::MissingField(key)),
                Some(l) if l.trim().is_empty() => continue,
                Some(l) => break l,
            }
        };
        let (k, v) = line
            .split_once(':')
            .ok_or_else(|| RecordError::MalformedLine(line.to_string()))?;
        if k.trim() != key {
            return Err(RecordError::UnexpectedField {
                expected: key,
                found: k.trim().to_string(),
            });
        }
        Ok(v.trim())
    }
}

fn parse_usize(field: &'static str, text: &str) -> Result<usize, RecordError> {
    text.parse().map_err(|_| RecordError::InvalidValue {
        field,
        message: format!("`{text}` is not a number"),
    })
}

/// Parses one record (certificate or construction).
pub fn parse_record(text: &str) -> Result<Record, RecordError> {
    let mut fields = Fields::new(text);
    let kind = fields.take("record")?;
    match kind {
        "certificate" => {
            let target = match fields.take("target")? {
                "Z" => Stat::Z,
                "F" => Stat::F,
                other => {
                    return Err(RecordError::InvalidValue {
                        field: "target",
                        message: format!("`{other}` is not Z or F"),
                    })
                }
            };
            let value = parse_usize("value", fields.take("value")?)?;
            let witness = parse_vertex_set(fields.take("witness")?).map_err(|source| {
                RecordError::InvalidSet {
                    field: "witness",
                    source,
                }
            })?;
            let route = match fields.take("route")? {
                "exhaustive" => Route::Exhaustive,
                "structural" => Route::Structural,
                other => {
                    return Err(RecordError::InvalidValue {
                        field: "route",
                        message: format!("`{other}` is not a route"),
                    })
                }
            };
            let basis = match fields.take("basis")? {
                "-" => None,
                text => Some(text.to_string()),
            };
            Ok(Record::Certificate(Certificate {
                target,
                value,
                witness,
                route,
                basis,
            }))
        }
        "construction" => {
            let source = fields.take("source")?.to_string();
            let predicted_size = parse_usize("predicted_size", fields.take("predicted_size")?)?;
            let claims_text = fields.take("claims")?;
            let mut claims = Vec::new();
            if !claims_text.is_empty() && claims_text != "-" {
                for item in claims_text.split(',') {
                    claims.push(item.trim().parse::<Claim>().map_err(|message| {
                        RecordError::InvalidValue {
                            field: "claims",
                            message,
                        }
                    })?);
                }
            }
            let set = parse_vertex_set(fields.take("set")?).map_err(|source| {
                RecordError::InvalidSet {
                    field: "set",
                    source,
                }
            })?;
            Ok(Record::Construction(ConstructionResult {
                set,
                predicted_size,
                claims,
                source,
            }))
        }
        "" => Err(RecordError::Empty),
        other => Err(RecordError::UnknownType(other.to_string())),
    }
}
