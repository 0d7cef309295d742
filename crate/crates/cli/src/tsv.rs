//! Score vectors as TSV.
//!
//! ```text
//! # measure: pagerank
//! # alpha: 0.5
//! node<TAB>score
//! 0<TAB>0.25
//! ```
//!
//! Floats use the shortest representation that parses back to the same
//! value; exact scores are written as `p/q` fractions.

use std::fmt::Write;

use centrality_core::exact::{self, Rational};
use centrality_core::{Measure, ScoreVector};

use crate::FormatError;

/// `(key, value)` pairs of the `#` lines, in output order.
pub fn header(sv: &ScoreVector) -> Vec<(&'static str, String)> {
    let mut h = vec![("measure", sv.measure.id().to_string())];
    let p = &sv.params;
    if let Some(a) = p.alpha {
        h.push(("alpha", format!("{a:?}")));
    }
    if let Some(b) = p.beta {
        h.push(("beta", format!("{b:?}")));
    }
    if let Some(t) = p.tol {
        h.push(("tol", format!("{t:?}")));
    }
    if let Some(i) = p.iterations {
        h.push(("iterations", i.to_string()));
    }
    if let Some(r) = p.residual {
        h.push(("residual", format!("{r:?}")));
    }
    h.push(("normalized", sv.normalized.to_string()));
    h.push(("degenerate", sv.degenerate.to_string()));
    h
}

fn write_header(out: &mut String, pairs: &[(&str, String)]) {
    for (k, v) in pairs {
        writeln!(out, "# {k}: {v}").unwrap();
    }
    out.push_str("node\tscore\n");
}

pub fn write_scores(sv: &ScoreVector, extra: &[(&'static str, String)]) -> String {
    let mut pairs = header(sv);
    pairs.extend_from_slice(extra);
    let mut out = String::new();
    write_header(&mut out, &pairs);
    for (x, s) in sv.scores.iter().enumerate() {
        writeln!(out, "{x}\t{s:?}").unwrap();
    }
    out
}

pub fn write_exact(measure: Measure, scores: &[Rational]) -> String {
    let mut out = String::new();
    write_header(
        &mut out,
        &[("measure", measure.id().to_string()), ("exact", "true".to_string())],
    );
    for (x, s) in scores.iter().enumerate() {
        writeln!(out, "{x}\t{s}").unwrap();
    }
    out
}

/// The ranking as `rank node score` lines, ranks from 1.
pub fn write_ranking(sv: &ScoreVector, order: &[usize], top: Option<usize>) -> String {
    let mut out = String::new();
    for (k, v) in header(sv) {
        writeln!(out, "# {k}: {v}").unwrap();
    }
    out.push_str("rank\tnode\tscore\n");
    for (r, &x) in order.iter().take(top.unwrap_or(usize::MAX)).enumerate() {
        writeln!(out, "{}\t{x}\t{:?}", r + 1, sv.scores[x]).unwrap();
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct ParsedScores {
    pub header: Vec<(String, String)>,
    pub scores: Vec<f64>,
}

fn parse_value(s: &str, line: usize) -> Result<f64, FormatError> {
    let bad = || FormatError::parse(line, format!("bad score `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let (p, q): (i128, i128) = (p.parse().map_err(|_| bad())?, q.parse().map_err(|_| bad())?);
            if q == 0 {
                return Err(bad());
            }
            Ok(exact::to_f64(&exact::frac(p, q)))
        }
        None => s.parse().map_err(|_| bad()),
    }
}

/// Reads what [`write_scores`] or [`write_exact`] produce. Nodes must be
/// listed as `0, 1, …` in order.
pub fn parse_scores(text: &str) -> Result<ParsedScores, FormatError> {
    let mut header = Vec::new();
    let mut scores = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if let Some(rest) = raw.strip_prefix('#') {
            if let Some((k, v)) = rest.split_once(':') {
                header.push((k.trim().to_string(), v.trim().to_string()));
            }
            continue;
        }
        if raw.trim().is_empty() || raw == "node\tscore" {
            continue;
        }
        let Some((node, value)) = raw.split_once('\t') else {
            return Err(FormatError::parse(line, "expected `node<TAB>score`"));
        };
        if node.parse::<usize>().ok() != Some(scores.len()) {
            return Err(FormatError::parse(line, format!("expected node {}, found `{node}`", scores.len())));
        }
        scores.push(parse_value(value, line)?);
    }
    Ok(ParsedScores { header, scores })
}
