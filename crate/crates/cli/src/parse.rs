//! Command-line syntax for sets, set lists and parameter grids.

use tmatch::{Error, KSet, Result};

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

/// `"1 2 3"` or `"1,2,3"`.
pub fn set(text: &str) -> Result<KSet> {
    let elems = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<u32>().map_err(|_| usage(format!("bad element {s:?} in set {text:?}"))))
        .collect::<Result<Vec<u32>>>()?;
    let set = KSet::from_elements(elems.iter().copied())?;
    if set.len() != elems.len() {
        return Err(usage(format!("repeated element in set {text:?}")));
    }
    Ok(set)
}

/// Semicolon-separated sets: `"1 2;3 4"`.
pub fn set_list(text: &str) -> Result<Vec<KSet>> {
    text.split(';').filter(|s| !s.trim().is_empty()).map(set).collect()
}

/// A grid axis: `7`, `7,8,10`, or an inclusive range `6..9`.
pub fn grid(text: &str) -> Result<Vec<u32>> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let num = |s: &str| s.trim().parse::<u32>().map_err(|_| usage(format!("bad grid value {s:?}")));
        match part.split_once("..") {
            Some((lo, hi)) => {
                let (lo, hi) = (num(lo)?, num(hi.trim_start_matches('='))?);
                if lo > hi {
                    return Err(usage(format!("empty range {part:?}")));
                }
                out.extend(lo..=hi);
            }
            None => out.push(num(part)?),
        }
    }
    if out.is_empty() {
        return Err(usage(format!("empty grid {text:?}")));
    }
    Ok(out)
}
