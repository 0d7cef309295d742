//! A seeded corpus whose relevant documents are, by construction, the
//! documents of highest harmonic centrality in their query's subgraph.
//!
//! Every query owns a block of consecutive documents. The last `relevant`
//! documents of a block are hubs: each other document of the block links
//! to several hubs and the hubs form a ring, so the hubs dominate the
//! harmonic ranking of the block while having the largest ids (an
//! id-ordered ranking finds none of them).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{induced_subgraph, rank_by, Corpus, Judgments, Query};
use crate::geometric::harmonic;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct SyntheticConfig {
    pub queries: usize,
    /// Documents per query block.
    pub block: usize,
    /// Hubs (relevant documents) per block.
    pub relevant: usize,
    /// Hubs each non-hub links to.
    pub fan_out: usize,
    /// Probability of an arc between two documents of different blocks.
    pub noise: f64,
    /// Hosts are assigned round-robin.
    pub hosts: usize,
    pub seed: u64,
}

impl Default for SyntheticConfig {
    fn default() -> Self {
        Self {
            queries: 20,
            block: 40,
            relevant: 10,
            fan_out: 4,
            noise: 0.002,
            hosts: 7,
            seed: 0x5eed,
        }
    }
}

fn block_arcs<R: Rng>(start: usize, cfg: &SyntheticConfig, rng: &mut R, arcs: &mut Vec<(usize, usize)>) {
    let plain = cfg.block - cfg.relevant;
    for i in 0..plain {
        for h in sample(rng, cfg.relevant, cfg.fan_out.min(cfg.relevant)) {
            arcs.push((start + i, start + plain + h));
        }
        if rng.gen_bool(0.1) {
            arcs.push((start + i, start + rng.gen_range(0..plain)));
        }
    }
    for h in 0..cfg.relevant {
        arcs.push((start + plain + h, start + plain + (h + 1) % cfg.relevant));
    }
}

/// Builds the corpus and its queries. Grade 2 goes to the top half of the
/// hubs by harmonic centrality, grade 1 to the rest.
pub fn synthetic_corpus(cfg: &SyntheticConfig) -> Result<(Corpus, Vec<Query>)> {
    if cfg.queries < 3 || cfg.relevant == 0 || cfg.block < 2 * cfg.relevant || cfg.fan_out == 0 {
        return Err(Error::InvalidParameter(
            "synthetic corpus needs 3+ queries and blocks at least twice the relevant set".into(),
        ));
    }
    let n = cfg.queries * cfg.block;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut arcs = Vec::new();
    for q in 0..cfg.queries {
        block_arcs(q * cfg.block, cfg, &mut rng, &mut arcs);
    }
    for u in 0..n {
        for v in 0..n {
            if u / cfg.block != v / cfg.block && rng.gen_bool(cfg.noise) {
                arcs.push((u, v));
            }
        }
    }
    let graph = crate::Graph::from_arcs(n, arcs)?;

    // Two terms per query; each also matches half of the next block, the
    // two halves being disjoint, so the conjunction is exactly the block.
    let half = cfg.block / 2;
    let mut index = BTreeMap::new();
    let mut queries = Vec::with_capacity(cfg.queries);
    let mut qrels = BTreeMap::new();
    for q in 0..cfg.queries {
        let own: Vec<usize> = (q * cfg.block..(q + 1) * cfg.block).collect();
        let next = ((q + 1) % cfg.queries) * cfg.block;
        let mut first = own.clone();
        first.extend(next..next + half);
        let mut second = own.clone();
        second.extend(next + half..next + cfg.block);
        first.sort_unstable();
        second.sort_unstable();
        let (a, b) = (format!("t{q}"), format!("u{q}"));
        index.insert(a.clone(), first);
        index.insert(b.clone(), second);
        let id = format!("q{q}");

        let (sub, ids) = induced_subgraph(&graph, &own)?;
        let scores = harmonic(&sub).scores;
        let ranking = rank_by(&scores, &ids);
        let cut = scores[ranking[cfg.relevant - 1] - own[0]];
        let next_best = scores[ranking[cfg.relevant] - own[0]];
        if cut.partial_cmp(&next_best) != Some(core::cmp::Ordering::Greater) {
            return Err(Error::InvalidParameter(format!(
                "seed {} gives a harmonic tie at the relevance cutoff of {id}",
                cfg.seed
            )));
        }
        let mut judgments = Judgments::new();
        for (rank, &d) in ranking.iter().take(cfg.relevant).enumerate() {
            judgments.insert(d, if 2 * rank < cfg.relevant { 2 } else { 1 });
        }
        qrels.insert(id.clone(), judgments);
        queries.push(Query { id, terms: alloc::vec![a, b] });
    }
    let hosts = (0..n).map(|d| Some(format!("h{}", d % cfg.hosts.max(1)))).collect();
    let corpus = Corpus {
        graph,
        index,
        qrels,
        hosts: Some(hosts),
    };
    Ok((corpus, queries))
}
