//! Text renderings of axiom verdicts and evaluation runs.

use std::fmt::Write;

use centrality_core::axioms::{expected_verdicts, Axiom, AxiomVerdict, MatrixRow};
use centrality_core::retrieval::EvalRun;

/// One `measure<TAB>axiom<TAB>verdict<TAB>witness` line per verdict.
pub fn verdict_lines(verdicts: &[&AxiomVerdict]) -> String {
    let mut out = String::from("measure\taxiom\tverdict\twitness\n");
    for v in verdicts {
        writeln!(out, "{}\t{}\t{}\t{}", v.measure.id(), v.axiom, v.verdict, v.witness.summary()).unwrap();
    }
    out
}

/// An aligned table of the rows; a `*` marks verdicts that differ from the
/// reference matrix.
pub fn matrix(rows: &[MatrixRow]) -> String {
    let name_width = rows.iter().map(|r| r.measure.display_name().chars().count()).max().unwrap_or(0).max(10);
    let mut out = String::new();
    write!(out, "{:<name_width$}", "centrality").unwrap();
    for a in Axiom::ALL {
        write!(out, "  {:<13}", a.id()).unwrap();
    }
    out.push('\n');
    for r in rows {
        let name = r.measure.display_name();
        let pad = name_width - name.chars().count();
        write!(out, "{name}{:pad$}", "").unwrap();
        let expected = expected_verdicts(r.measure);
        for (v, e) in r.verdicts().iter().zip(expected) {
            let mark = if *v == e { "" } else { " *" };
            write!(out, "  {:<13}", format!("{}{mark}", v.label())).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn eval_report(run: &EvalRun, per_query: bool) -> String {
    let k = run.k;
    let mut out = String::new();
    writeln!(out, "# ranker: {}", run.ranker.id()).unwrap();
    writeln!(out, "# queries: {}", run.results.len()).unwrap();
    writeln!(out, "# mean P@{k}: {:?}", run.mean_precision).unwrap();
    writeln!(out, "# mean NDCG@{k}: {:?}", run.mean_ndcg).unwrap();
    writeln!(out, "# null-score queries: {}", run.null_score_queries).unwrap();
    if per_query {
        writeln!(out, "query\tmatched\tP@{k}\tNDCG@{k}\tflags").unwrap();
        for r in &run.results {
            let mut flags = Vec::new();
            if r.empty {
                flags.push("empty");
            }
            if r.degenerate {
                flags.push("degenerate");
            }
            let flags = if flags.is_empty() { "-".to_string() } else { flags.join(",") };
            writeln!(out, "{}\t{}\t{:?}\t{:?}\t{flags}", r.query, r.matched.len(), r.precision, r.ndcg).unwrap();
        }
    }
    out
}
