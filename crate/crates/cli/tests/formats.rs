use centrality::corpus::{read_corpus, write_corpus};
use centrality::edgelist;
use centrality::tsv::{parse_scores, write_scores};
use centrality_core::retrieval::{synthetic_corpus, SyntheticConfig};
use centrality_core::{compute, Graph, Measure, SpectralParams};
use proptest::prelude::*;

fn graph() -> impl Strategy<Value = Graph> {
    (0..20usize).prop_flat_map(|n| {
        let arcs = if n == 0 {
            Just(Vec::new()).boxed()
        } else {
            proptest::collection::vec((0..n, 0..n), 0..60).boxed()
        };
        arcs.prop_map(move |a| Graph::from_arcs(n, a).unwrap())
    })
}

proptest! {
    #[test]
    fn edge_lists_round_trip(g in graph()) {
        let text = edgelist::serialize(&g);
        let back = edgelist::parse(&text).unwrap();
        prop_assert_eq!(&back.graph, &g);
        prop_assert_eq!(back.loop_lines.len(), g.num_loops());
        prop_assert_eq!(edgelist::serialize(&back.graph), text);
    }

    #[test]
    fn score_files_round_trip(g in graph().prop_filter("nonempty", |g| g.num_nodes() > 0)) {
        for m in [Measure::Harmonic, Measure::PageRank, Measure::Salsa, Measure::Lin] {
            let sv = compute(&g, m, &SpectralParams::default()).unwrap();
            prop_assert_eq!(parse_scores(&write_scores(&sv, &[])).unwrap().scores, sv.scores);
        }
    }

    #[test]
    fn whitespace_and_comments_are_ignored(g in graph()) {
        let mut text = String::from("# nodes: ");
        text.push_str(&g.num_nodes().to_string());
        text.push('\n');
        for (u, v) in g.arcs() {
            text.push_str(&format!("  {u}\t {v}  \n# comment\n\n"));
        }
        prop_assert_eq!(edgelist::parse(&text).unwrap().graph, g);
    }
}

#[test]
fn corpus_directory_round_trip() {
    let (corpus, queries) = synthetic_corpus(&SyntheticConfig::default()).unwrap();
    let dir = tempfile::tempdir().unwrap();
    write_corpus(dir.path(), &corpus, &queries).unwrap();
    let (c, q) = read_corpus(dir.path()).unwrap();
    assert_eq!(c, corpus);
    assert_eq!(q, queries);
}

#[test]
fn corpus_errors_name_the_file() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("graph.txt"), "0 1\n").unwrap();
    std::fs::write(dir.path().join("index.tsv"), "a\t0,7\n").unwrap();
    std::fs::write(dir.path().join("queries.tsv"), "q\ta\n").unwrap();
    std::fs::write(dir.path().join("qrels.tsv"), "").unwrap();
    let err = read_corpus(dir.path()).unwrap_err().to_string();
    assert!(err.contains("index.tsv") || err.contains("line 1"), "{err}");
    std::fs::write(dir.path().join("index.tsv"), "a\t0,1\n").unwrap();
    std::fs::write(dir.path().join("qrels.tsv"), "q\t1\tx\n").unwrap();
    let err = read_corpus(dir.path()).unwrap_err().to_string();
    assert!(err.contains("qrels.tsv"), "{err}");
}
