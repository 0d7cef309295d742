//! A retrieval corpus stored as a directory:
//!
//! | file          | line format                     |
//! |---------------|---------------------------------|
//! | `graph.txt`   | edge list                       |
//! | `index.tsv`   | `term<TAB>doc,doc,…`            |
//! | `queries.tsv` | `query<TAB>term term …`         |
//! | `qrels.tsv`   | `query<TAB>doc<TAB>grade`       |
//! | `hosts.tsv`   | `doc<TAB>host` (optional)       |
//!
//! Blank lines and lines starting with `#` are skipped everywhere.

use std::collections::BTreeMap;
use std::fmt::Write;
use std::path::Path;

use centrality_core::retrieval::{Corpus, Query};

use crate::{edgelist, FormatError};

fn read(dir: &Path, name: &str) -> Result<String, FormatError> {
    let path = dir.join(name);
    std::fs::read_to_string(&path).map_err(|e| FormatError::io(&path, e))
}

/// Numbered tab-separated fields of the meaningful lines.
fn rows<'a>(text: &'a str, fields: usize) -> impl Iterator<Item = Result<(usize, Vec<&'a str>), FormatError>> + 'a {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
        .map(move |(i, l)| {
            let parts: Vec<&str> = l.split('\t').map(str::trim).collect();
            if parts.len() == fields {
                Ok((i + 1, parts))
            } else {
                Err(FormatError::parse(i + 1, format!("expected {fields} tab-separated fields")))
            }
        })
}

fn doc(s: &str, line: usize, n: usize) -> Result<usize, FormatError> {
    let d: usize = s
        .parse()
        .map_err(|_| FormatError::parse(line, format!("bad document id `{s}`")))?;
    if d >= n {
        return Err(FormatError::Range {
            line,
            id: s.to_string(),
            n,
        });
    }
    Ok(d)
}

fn with_file<T>(name: &str, r: Result<T, FormatError>) -> Result<T, FormatError> {
    r.map_err(|e| e.in_file(name))
}

pub fn read_corpus(dir: &Path) -> Result<(Corpus, Vec<Query>), FormatError> {
    let graph = with_file("graph.txt", edgelist::parse(&read(dir, "graph.txt")?))?.graph;
    let n = graph.num_nodes();

    let mut index: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    let text = read(dir, "index.tsv")?;
    for row in rows(&text, 2) {
        let (line, f) = with_file("index.tsv", row)?;
        let docs = index.entry(f[0].to_string()).or_default();
        for d in f[1].split(',').filter(|s| !s.is_empty()) {
            docs.push(with_file("index.tsv", doc(d.trim(), line, n))?);
        }
    }
    for docs in index.values_mut() {
        docs.sort_unstable();
        docs.dedup();
    }

    let mut queries = Vec::new();
    let text = read(dir, "queries.tsv")?;
    for row in rows(&text, 2) {
        let (_, f) = with_file("queries.tsv", row)?;
        queries.push(Query {
            id: f[0].to_string(),
            terms: f[1].split_whitespace().map(String::from).collect(),
        });
    }

    let mut qrels: BTreeMap<String, BTreeMap<usize, u32>> = BTreeMap::new();
    let text = read(dir, "qrels.tsv")?;
    for row in rows(&text, 3) {
        let (line, f) = with_file("qrels.tsv", row)?;
        let d = with_file("qrels.tsv", doc(f[1], line, n))?;
        let grade: u32 = f[2]
            .parse()
            .map_err(|_| FormatError::parse(line, format!("bad grade `{}` (in qrels.tsv)", f[2])))?;
        qrels.entry(f[0].to_string()).or_default().insert(d, grade);
    }

    let hosts = match std::fs::read_to_string(dir.join("hosts.tsv")) {
        Ok(text) => {
            let mut hosts = vec![None; n];
            for row in rows(&text, 2) {
                let (line, f) = with_file("hosts.tsv", row)?;
                hosts[with_file("hosts.tsv", doc(f[0], line, n))?] = Some(f[1].to_string());
            }
            Some(hosts)
        }
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => None,
        Err(e) => return Err(FormatError::io(dir.join("hosts.tsv"), e)),
    };

    let corpus = Corpus {
        graph,
        index,
        qrels,
        hosts,
    };
    corpus.validate()?;
    Ok((corpus, queries))
}

/// The five files' contents, keyed by file name.
pub fn serialize_corpus(corpus: &Corpus, queries: &[Query]) -> Vec<(&'static str, String)> {
    let mut index = String::new();
    for (term, docs) in &corpus.index {
        let list: Vec<String> = docs.iter().map(usize::to_string).collect();
        writeln!(index, "{term}\t{}", list.join(",")).unwrap();
    }
    let mut qs = String::new();
    for q in queries {
        writeln!(qs, "{}\t{}", q.id, q.terms.join(" ")).unwrap();
    }
    let mut qrels = String::new();
    for (q, judged) in &corpus.qrels {
        for (d, g) in judged {
            writeln!(qrels, "{q}\t{d}\t{g}").unwrap();
        }
    }
    let mut files = vec![
        ("graph.txt", edgelist::serialize(&corpus.graph)),
        ("index.tsv", index),
        ("queries.tsv", qs),
        ("qrels.tsv", qrels),
    ];
    if let Some(hosts) = &corpus.hosts {
        let mut out = String::new();
        for (d, h) in hosts.iter().enumerate() {
            if let Some(h) = h {
                writeln!(out, "{d}\t{h}").unwrap();
            }
        }
        files.push(("hosts.tsv", out));
    }
    files
}

pub fn write_corpus(dir: &Path, corpus: &Corpus, queries: &[Query]) -> Result<(), FormatError> {
    std::fs::create_dir_all(dir).map_err(|e| FormatError::io(dir, e))?;
    for (name, text) in serialize_corpus(corpus, queries) {
        crate::write_output(Some(&dir.join(name)), &text)?;
    }
    Ok(())
}
