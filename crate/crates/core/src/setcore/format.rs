//! Text formats for families and t-set systems.
//!
//! * JSON: `{"n": 5, "k": 3, "sets": [[1,2,3], [1,2,4]]}`
//! * lines: a header `n=5 k=3`, then one set per line as ascending integers.
//!
//! t-set systems use the same layouts with the key `t` in place of `k`.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::Value;

use super::family::{Family, TSetSystem};
use super::kset::KSet;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Lines,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "lines" => Ok(Format::Lines),
            other => Err(Error::InvalidParameters(format!("unknown format {other:?}"))),
        }
    }
}

impl Format {
    /// Guesses the format from the first non-blank character.
    pub fn sniff(text: &str) -> Format {
        if text.trim_start().starts_with('{') {
            Format::Json
        } else {
            Format::Lines
        }
    }
}

pub fn serialize_family(family: &Family, format: Format) -> String {
    serialize_with_key(family, "k", format)
}

pub fn parse_family(text: &str, format: Format) -> Result<Family> {
    parse_with_key(text, "k", format)
}

pub fn serialize_tsets(system: &TSetSystem, format: Format) -> String {
    serialize_with_key(system.as_family(), "t", format)
}

pub fn parse_tsets(text: &str, format: Format) -> Result<TSetSystem> {
    parse_with_key(text, "t", format).map(TSetSystem::from_family)
}

fn serialize_with_key(family: &Family, key: &str, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => {
            write!(out, "{{\"n\": {}, \"{key}\": {}, \"sets\": [", family.n(), family.k()).unwrap();
            for (i, set) in family.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push('[');
                for (j, e) in set.iter().enumerate() {
                    if j > 0 {
                        out.push(',');
                    }
                    write!(out, "{e}").unwrap();
                }
                out.push(']');
            }
            out.push_str("]}\n");
        }
        Format::Lines => {
            writeln!(out, "n={} {key}={}", family.n(), family.k()).unwrap();
            for set in family {
                let line: Vec<String> = set.iter().map(|e| e.to_string()).collect();
                writeln!(out, "{}", line.join(" ")).unwrap();
            }
        }
    }
    out
}

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { location: location.into(), message: message.into() }
}

fn relocate(err: Error, location: String) -> Error {
    match err {
        Error::InvariantViolation { message, .. } => Error::InvariantViolation { location, message },
        Error::InvalidParameters(message) => Error::InvariantViolation { location, message },
        other => other,
    }
}

fn parse_with_key(text: &str, key: &str, format: Format) -> Result<Family> {
    match format {
        Format::Json => parse_json(text, key),
        Format::Lines => parse_lines(text, key),
    }
}

fn parse_u32(value: &Value, location: &str) -> Result<u32> {
    value
        .as_u64()
        .and_then(|v| u32::try_from(v).ok())
        .ok_or_else(|| parse_err(location, format!("expected a nonnegative integer, found {value}")))
}

fn parse_json(text: &str, key: &str) -> Result<Family> {
    let root: Value = serde_json::from_str(text)
        .map_err(|e| parse_err(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    let obj = root.as_object().ok_or_else(|| parse_err("root", "expected an object"))?;
    let n = parse_u32(obj.get("n").ok_or_else(|| parse_err("n", "missing field"))?, "n")?;
    let k = parse_u32(obj.get(key).ok_or_else(|| parse_err(key, "missing field"))?, key)?;
    let sets = obj
        .get("sets")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("sets", "missing or not an array"))?;
    let mut members = Vec::with_capacity(sets.len());
    for (i, set) in sets.iter().enumerate() {
        let location = format!("sets[{i}]");
        let elems = set.as_array().ok_or_else(|| parse_err(&location, "expected an array"))?;
        let elems = elems
            .iter()
            .enumerate()
            .map(|(j, v)| parse_u32(v, &format!("sets[{i}][{j}]")))
            .collect::<Result<Vec<u32>>>()?;
        members.push(check_set(&elems, n, k).map_err(|e| relocate(e, location))?);
    }
    Family::new(n, k, members)
}

fn check_set(elems: &[u32], n: u32, k: u32) -> Result<KSet> {
    if let Some(&e) = elems.iter().find(|&&e| e == 0 || e > n) {
        return Err(Error::InvalidParameters(format!("element {e} outside 1..={n}")));
    }
    let set = KSet::from_elements(elems.iter().copied())?;
    if set.len() != k as usize {
        return Err(Error::InvalidParameters(format!("{set} has {} elements, expected {k}", set.len())));
    }
    Ok(set)
}

fn parse_lines(text: &str, key: &str) -> Result<Family> {
    let mut lines: Vec<&str> = text.split('\n').collect();
    if lines.last() == Some(&"") {
        lines.pop();
    }
    let header = lines.first().ok_or_else(|| parse_err("line 1", "missing header"))?;
    let (n, k) = parse_header(header.trim_end_matches('\r'), key)?;
    let mut members = Vec::new();
    for (idx, raw) in lines.iter().enumerate().skip(1) {
        let line = raw.trim_end_matches('\r');
        let location = format!("line {}", idx + 1);
        // A blank line is the empty set when k = 0 and is ignored otherwise.
        if line.trim().is_empty() && k > 0 {
            continue;
        }
        let elems = line
            .split_whitespace()
            .map(|tok| tok.parse::<u32>().map_err(|_| parse_err(&location, format!("bad integer {tok:?}"))))
            .collect::<Result<Vec<u32>>>()?;
        members.push(check_set(&elems, n, k).map_err(|e| relocate(e, location))?);
    }
    // Duplicates are reported with the line of the second occurrence.
    let mut seen = std::collections::HashMap::new();
    for (i, m) in members.iter().enumerate() {
        if let Some(first) = seen.insert(*m, i) {
            return Err(Error::InvariantViolation {
                location: format!("set {} (first seen as set {})", i + 1, first + 1),
                message: format!("duplicate set {m}"),
            });
        }
    }
    Family::new(n, k, members)
}

fn parse_header(header: &str, key: &str) -> Result<(u32, u32)> {
    let mut n = None;
    let mut k = None;
    for tok in header.split_whitespace() {
        let (name, value) = tok
            .split_once('=')
            .ok_or_else(|| parse_err("line 1", format!("expected name=value, found {tok:?}")))?;
        let value: u32 = value.parse().map_err(|_| parse_err("line 1", format!("bad integer in {tok:?}")))?;
        match name {
            "n" => n = Some(value),
            _ if name == key => k = Some(value),
            _ => return Err(parse_err("line 1", format!("unexpected header field {name:?}"))),
        }
    }
    match (n, k) {
        (Some(n), Some(k)) => Ok((n, k)),
        _ => Err(parse_err("line 1", format!("header must be \"n=<int> {key}=<int>\""))),
    }
}
