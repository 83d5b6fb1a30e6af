//! Text formats for multigraphs.
//!
//! The edge-list format is line based. `#` starts a comment. An optional
//! first data line `vertices N` fixes the vertex count; otherwise it is one
//! more than the largest id mentioned. Every other data line is `u v m`
//! (two vertex ids and a positive multiplicity). Repeated pairs accumulate
//! and self-loops are ignored with a warning.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::multigraph::MultiGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: MultiGraph,
    pub warnings: Vec<String>,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_edge_list(text: &str) -> Result<ParsedGraph> {
    let mut declared: Option<usize> = None;
    let mut seen_data = false;
    let mut edges: Vec<(usize, usize, usize, BigUint)> = Vec::new();
    let mut largest: Option<usize> = None;

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens[0] == "vertices" {
            if seen_data {
                return Err(parse_error(line, "`vertices` header must come first"));
            }
            let [_, count] = tokens[..] else {
                return Err(parse_error(line, "expected `vertices N`"));
            };
            let count = count
                .parse()
                .map_err(|_| parse_error(line, format!("bad vertex count `{count}`")))?;
            declared = Some(count);
            seen_data = true;
            continue;
        }
        seen_data = true;
        let [u, v, m] = tokens[..] else {
            return Err(parse_error(line, "expected `u v multiplicity`"));
        };
        let id = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| parse_error(line, format!("bad vertex id `{t}`")))
        };
        let (u, v) = (id(u)?, id(v)?);
        let m: BigUint = m
            .parse()
            .map_err(|_| parse_error(line, format!("bad multiplicity `{m}`")))?;
        if m.is_zero() {
            return Err(parse_error(line, "multiplicity must be positive"));
        }
        if let Some(n) = declared {
            if u >= n || v >= n {
                return Err(parse_error(
                    line,
                    format!("vertex {} out of range for {n} vertices", u.max(v)),
                ));
            }
        }
        largest = Some(largest.unwrap_or(0).max(u).max(v));
        edges.push((line, u, v, m));
    }

    let vertex_count = match (declared, largest) {
        (Some(n), _) => n,
        (None, Some(max)) => max + 1,
        (None, None) => return Err(parse_error(0, "no vertices")),
    };
    if vertex_count == 0 {
        return Err(parse_error(0, "no vertices"));
    }
    let mut graph = MultiGraph::new(vertex_count);
    let mut warnings = Vec::new();
    for (line, u, v, m) in edges {
        if u == v {
            warnings.push(format!("line {line}: self-loop on vertex {u} ignored"));
            continue;
        }
        graph.insert_edges(u, v, m)?;
    }
    Ok(ParsedGraph { graph, warnings })
}

/// Edge list with a `vertices` header, one line per adjacent pair.
pub fn write_edge_list(g: &MultiGraph) -> String {
    let mut out = format!("vertices {}\n", g.vertex_count());
    for (u, v, m) in g.edges() {
        out.push_str(&format!("{u} {v} {m}\n"));
    }
    out
}

/// Graphviz DOT with one `u -- v;` statement per parallel edge.
pub fn write_dot(g: &MultiGraph) -> Result<String> {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v, m) in g.edges() {
        let copies = m
            .to_usize()
            .ok_or_else(|| Error::MultiplicityTooLarge(m.to_string()))?;
        for _ in 0..copies {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// `{"vertices": N, "edges": [{"u", "v", "mult"}]}` with one record per
/// adjacent pair. Multiplicities beyond `u64` are written as decimal strings.
pub fn to_json(g: &MultiGraph) -> Value {
    let edges: Vec<Value> = g
        .edges()
        .map(|(u, v, m)| {
            let mult = match m.to_u64() {
                Some(small) => json!(small),
                None => json!(m.to_string()),
            };
            json!({ "u": u, "v": v, "mult": mult })
        })
        .collect();
    json!({ "vertices": g.vertex_count(), "edges": edges })
}

pub fn write_json(g: &MultiGraph) -> String {
    let mut out = serde_json::to_string_pretty(&to_json(g)).expect("json value serializes");
    out.push('\n');
    out
}
