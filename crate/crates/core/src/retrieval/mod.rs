//! Ranking-quality evaluation: a conjunctive query selects documents, the
//! subgraph they induce is scored by a centrality measure, and the ranking
//! is judged by P@k and NDCG@k.
//!
//! NDCG uses linear gain and the discount `1/log₂(rank + 1)` (ranks start
//! at 1); the ideal ordering is taken over all judged documents of the
//! query. Ties in the score order are broken by ascending document id.

mod synthetic;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::spectral::SpectralParams;
use crate::{Error, Graph, Measure, Node, Result};

pub use synthetic::{synthetic_corpus, SyntheticConfig};

/// Relevance grades of one query; absent documents have grade 0.
pub type Judgments = BTreeMap<Node, u32>;

#[derive(Clone, Debug, PartialEq)]
pub struct Corpus {
    pub graph: Graph,
    /// Term → sorted, deduplicated document ids.
    pub index: BTreeMap<String, Vec<Node>>,
    /// Query id → judgments.
    pub qrels: BTreeMap<String, Judgments>,
    /// Optional host label per document.
    pub hosts: Option<Vec<Option<String>>>,
}

impl Corpus {
    /// Checks that every indexed, judged or labelled document exists.
    pub fn validate(&self) -> Result<()> {
        let n = self.graph.num_nodes();
        let docs = self
            .index
            .values()
            .flatten()
            .chain(self.qrels.values().flat_map(|j| j.keys()));
        for &d in docs {
            self.graph.check_node(d)?;
        }
        if let Some(h) = &self.hosts {
            if h.len() != n {
                return Err(Error::InvalidParameter(alloc::format!(
                    "host table covers {} documents, graph has {n}",
                    h.len()
                )));
            }
        }
        Ok(())
    }

    /// Documents containing every term; empty when a term is unknown.
    pub fn conjunction(&self, terms: &[String]) -> Vec<Node> {
        let mut iter = terms.iter();
        let Some(first) = iter.next() else {
            return Vec::new();
        };
        let mut docs: BTreeSet<Node> = match self.index.get(first) {
            Some(p) => p.iter().copied().collect(),
            None => return Vec::new(),
        };
        for t in iter {
            let Some(p) = self.index.get(t) else {
                return Vec::new();
            };
            let other: BTreeSet<Node> = p.iter().copied().collect();
            docs = docs.intersection(&other).copied().collect();
        }
        docs.into_iter().collect()
    }

    /// The graph without arcs between documents that share a host label.
    pub fn inter_host_graph(&self) -> Graph {
        let Some(hosts) = &self.hosts else {
            return self.graph.clone();
        };
        let same = |u: Node, v: Node| matches!((&hosts[u], &hosts[v]), (Some(a), Some(b)) if a == b);
        let arcs: Vec<_> = self.graph.arcs().filter(|&(u, v)| !same(u, v)).collect();
        Graph::from_arcs(self.graph.num_nodes(), arcs).expect("same node set")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Query {
    pub id: String,
    pub terms: Vec<String>,
}

/// Subgraph induced by `nodes`, with the original id of each new node.
pub fn induced_subgraph(g: &Graph, nodes: &[Node]) -> Result<(Graph, Vec<Node>)> {
    g.induced_subgraph(nodes)
}

/// Document ids in descending score order, ties by ascending id.
pub fn rank_by(scores: &[f64], ids: &[Node]) -> Vec<Node> {
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]).then(ids[a].cmp(&ids[b])));
    order.into_iter().map(|i| ids[i]).collect()
}

/// Fraction of the first `k` positions holding a document with grade > 0.
pub fn precision_at_k(ranking: &[Node], judgments: &Judgments, k: usize) -> f64 {
    let hits = ranking
        .iter()
        .take(k)
        .filter(|d| judgments.get(d).copied().unwrap_or(0) > 0)
        .count();
    hits as f64 / k as f64
}

fn dcg(grades: impl Iterator<Item = u32>) -> f64 {
    grades
        .enumerate()
        .map(|(i, g)| g as f64 / libm::log2(i as f64 + 2.0))
        .sum()
}

/// `DCG@k / IDCG@k`, or 0 when no judged document has positive grade.
pub fn ndcg_at_k(ranking: &[Node], judgments: &Judgments, k: usize) -> f64 {
    let mut ideal: Vec<u32> = judgments.values().copied().collect();
    ideal.sort_unstable_by(|a, b| b.cmp(a));
    let idcg = dcg(ideal.into_iter().take(k));
    if idcg == 0.0 {
        return 0.0;
    }
    dcg(ranking.iter().take(k).map(|d| judgments.get(d).copied().unwrap_or(0))) / idcg
}

/// How the documents matching a query are ordered.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ranker {
    /// By document id.
    Identity,
    Measure(Measure),
}

impl Ranker {
    pub fn id(&self) -> &'static str {
        match self {
            Ranker::Identity => "none",
            Ranker::Measure(m) => m.id(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EvalOptions {
    pub k: usize,
    /// Drop arcs between documents with the same host label first.
    pub inter_host_only: bool,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self {
            k: 10,
            inter_host_only: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct QueryResult {
    pub query: String,
    /// Corpus ids of the matching documents, ascending.
    pub matched: Vec<Node>,
    pub ranking: Vec<Node>,
    pub precision: f64,
    pub ndcg: f64,
    /// The conjunction matched no document.
    pub empty: bool,
    /// The measure had no nonzero limit on the induced subgraph; the
    /// ranking fell back to id order.
    pub degenerate: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EvalRun {
    pub ranker: Ranker,
    pub k: usize,
    pub results: Vec<QueryResult>,
    pub mean_precision: f64,
    pub mean_ndcg: f64,
    /// Queries with NDCG@k equal to 0.
    pub null_score_queries: usize,
}

fn eval_query(
    corpus: &Corpus,
    graph: &Graph,
    query: &Query,
    ranker: Ranker,
    params: &SpectralParams,
    k: usize,
) -> Result<QueryResult> {
    let matched = corpus.conjunction(&query.terms);
    let (sub, ids) = induced_subgraph(graph, &matched)?;
    let (scores, degenerate) = match ranker {
        Ranker::Identity => (alloc::vec![0.0; ids.len()], false),
        Ranker::Measure(_) if ids.is_empty() => (Vec::new(), false),
        Ranker::Measure(m) => match crate::compute(&sub, m, params) {
            Ok(s) => {
                let d = s.degenerate;
                (s.scores, d)
            }
            Err(Error::DegenerateSpectrum { .. }) => (alloc::vec![0.0; ids.len()], true),
            Err(e) => return Err(e),
        },
    };
    let ranking = rank_by(&scores, &ids);
    let empty_judgments = Judgments::new();
    let judgments = corpus.qrels.get(&query.id).unwrap_or(&empty_judgments);
    Ok(QueryResult {
        query: query.id.clone(),
        empty: matched.is_empty(),
        precision: precision_at_k(&ranking, judgments, k),
        ndcg: ndcg_at_k(&ranking, judgments, k),
        matched,
        ranking,
        degenerate,
    })
}

/// Evaluates `ranker` on every query; results keep the query order.
pub fn run_eval(
    corpus: &Corpus,
    queries: &[Query],
    ranker: Ranker,
    params: &SpectralParams,
    options: &EvalOptions,
) -> Result<EvalRun> {
    if options.k == 0 {
        return Err(Error::InvalidParameter("cutoff k must be positive".into()));
    }
    corpus.validate()?;
    let graph = if options.inter_host_only {
        corpus.inter_host_graph()
    } else {
        corpus.graph.clone()
    };
    let k = options.k;
    #[cfg(feature = "parallel")]
    let results: Vec<QueryResult> = {
        use rayon::prelude::*;
        queries
            .par_iter()
            .map(|q| eval_query(corpus, &graph, q, ranker, params, k))
            .collect::<Result<_>>()?
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<QueryResult> = queries
        .iter()
        .map(|q| eval_query(corpus, &graph, q, ranker, params, k))
        .collect::<Result<_>>()?;
    let count = results.len().max(1) as f64;
    Ok(EvalRun {
        ranker,
        k,
        mean_precision: results.iter().map(|r| r.precision).sum::<f64>() / count,
        mean_ndcg: results.iter().map(|r| r.ndcg).sum::<f64>() / count,
        null_score_queries: results.iter().filter(|r| r.ndcg == 0.0).count(),
        results,
    })
}
