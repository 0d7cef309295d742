//! Edge-list text: an optional first line `# nodes: N`, other `#` lines
//! are comments, every remaining nonblank line is `u v`.
//!
//! Without a header the graph has `1 + max id` nodes. Duplicate arcs
//! collapse; loops are kept, and the lines holding them are reported.

use std::fmt::Write;

use centrality_core::{Graph, Node};

use crate::FormatError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeList {
    pub graph: Graph,
    /// 1-based numbers of the lines holding a loop `x x`.
    pub loop_lines: Vec<usize>,
}

fn parse_header(line: &str) -> Option<&str> {
    let rest = line.strip_prefix('#')?.trim_start();
    Some(rest.strip_prefix("nodes:")?.trim())
}

fn parse_id(token: &str, line: usize) -> Result<Node, FormatError> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(FormatError::parse(line, format!("expected a node id, found `{token}`")));
    }
    token.parse().map_err(|_| FormatError::Range {
        line,
        id: token.to_string(),
        n: usize::MAX,
    })
}

pub fn parse(text: &str) -> Result<EdgeList, FormatError> {
    let mut declared = None;
    let mut arcs = Vec::new();
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let number = i + 1;
        let line = raw.trim();
        if i == 0 {
            if let Some(n) = parse_header(line) {
                let n = n
                    .parse::<usize>()
                    .map_err(|_| FormatError::parse(number, format!("bad node count `{n}`")))?;
                declared = Some(n);
                continue;
            }
        }
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (Some(u), Some(v), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(FormatError::parse(number, format!("expected `u v`, found `{line}`")));
        };
        arcs.push((parse_id(u, number)?, parse_id(v, number)?));
        lines.push(number);
    }
    let needed = arcs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = match declared {
        Some(n) => {
            if let Some(pos) = arcs.iter().position(|&(u, v)| u.max(v) >= n) {
                let (u, v) = arcs[pos];
                return Err(FormatError::Range {
                    line: lines[pos],
                    id: u.max(v).to_string(),
                    n,
                });
            }
            n
        }
        None => needed,
    };
    let loop_lines = arcs
        .iter()
        .zip(&lines)
        .filter(|((u, v), _)| u == v)
        .map(|(_, &l)| l)
        .collect();
    Ok(EdgeList {
        graph: Graph::from_arcs(n, arcs)?,
        loop_lines,
    })
}

/// The header line, then arcs sorted by source and target.
pub fn serialize(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.num_arcs());
    writeln!(out, "# nodes: {}", g.num_nodes()).unwrap();
    for (u, v) in g.arcs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
