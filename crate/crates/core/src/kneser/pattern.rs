use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::PatternGraph;

fn parse_err(location: &str, message: impl Into<String>) -> Error {
    Error::Parse { location: location.into(), message: message.into() }
}

/// Parses a builtin pattern name: `K{m}` (complete), `K{a}x{b}` (complete
/// bipartite) or `K{a0},{a1},...` (complete multipartite).
pub fn parse_builtin(name: &str) -> Result<PatternGraph> {
    let body = name
        .trim()
        .strip_prefix('K')
        .ok_or_else(|| parse_err("pattern", format!("unknown pattern name {name:?}")))?;
    let sep = if body.contains('x') { 'x' } else { ',' };
    let parts = body
        .split(sep)
        .map(|p| p.trim().parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| parse_err("pattern", format!("bad part sizes in {name:?}")))?;
    if sep == 'x' && parts.len() != 2 {
        return Err(parse_err("pattern", format!("{name:?}: K{{a}}x{{b}} takes two sizes")));
    }
    if parts.len() == 1 {
        return Ok(PatternGraph::complete(parts[0]));
    }
    if parts.contains(&0) {
        return Err(parse_err("pattern", format!("{name:?}: parts must be nonempty")));
    }
    Ok(PatternGraph::complete_multipartite(&parts))
}

/// Parses `{"vertices": m, "edges": [[u, v], ...]}` with 1-based vertices.
pub fn parse_pattern_json(text: &str) -> Result<PatternGraph> {
    let root: Value = serde_json::from_str(text)
        .map_err(|e| parse_err(&format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    let vertices = root
        .get("vertices")
        .and_then(Value::as_u64)
        .ok_or_else(|| parse_err("vertices", "expected a nonnegative integer"))? as usize;
    let edges = root
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("edges", "expected an array of pairs"))?;
    let mut pairs = Vec::with_capacity(edges.len());
    for (i, e) in edges.iter().enumerate() {
        let loc = format!("edges[{i}]");
        let pair = e.as_array().filter(|p| p.len() == 2).ok_or_else(|| parse_err(&loc, "expected [u, v]"))?;
        let mut ends = [0usize; 2];
        for (j, x) in pair.iter().enumerate() {
            let v = x.as_u64().ok_or_else(|| parse_err(&loc, "vertices must be integers"))? as usize;
            if v == 0 || v > vertices {
                return Err(parse_err(&loc, format!("vertex {v} outside 1..={vertices}")));
            }
            ends[j] = v - 1;
        }
        if ends[0] == ends[1] {
            return Err(parse_err(&loc, "loops are not allowed"));
        }
        pairs.push((ends[0], ends[1]));
    }
    PatternGraph::from_edges(vertices, &pairs)
}

/// A builtin name, or JSON when the text starts with `{`.
pub fn parse_pattern(text: &str) -> Result<PatternGraph> {
    if text.trim_start().starts_with('{') {
        parse_pattern_json(text)
    } else {
        parse_builtin(text)
    }
}

/// The JSON pattern format, 1-based.
pub fn pattern_to_json(g: &PatternGraph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges().into_iter().map(|(u, v)| [u + 1, v + 1]).collect();
    json!({ "vertices": g.vertex_count(), "edges": edges })
}
