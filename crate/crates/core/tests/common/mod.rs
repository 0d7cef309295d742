//! Independent oracles and graph samplers shared by the integration tests.
#![allow(dead_code)]

use centrality_core::random::{erdos_renyi, strongly_connected, symmetric_connected};
use centrality_core::Graph;
use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph with `1..=max_n` nodes and a random density.
pub fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let q = rng.gen_range(0.0..0.5);
    erdos_renyi(n, q, rng)
}

pub fn random_strongly_connected(rng: &mut ChaCha8Rng, min_n: usize, max_n: usize) -> Graph {
    let n = rng.gen_range(min_n..=max_n);
    let q = rng.gen_range(0.0..0.3);
    strongly_connected(n, q, rng)
}

pub fn random_symmetric(rng: &mut ChaCha8Rng, min_n: usize, max_n: usize) -> Graph {
    let n = rng.gen_range(min_n..=max_n);
    let q = rng.gen_range(0.0..0.3);
    symmetric_connected(n, q, rng)
}

/// Solves `p (I − αĀ) = (1 − α) v` with a dense LU factorization.
pub fn dense_pagerank(g: &Graph, alpha: f64, v: &[f64]) -> Vec<f64> {
    let n = g.num_nodes();
    let mut m = DMatrix::<f64>::identity(n, n);
    for (u, w) in g.arcs() {
        // Transposed system: row w, column u.
        m[(w, u)] -= alpha / g.outdegree(u) as f64;
    }
    let b = DVector::from_iterator(n, v.iter().map(|x| (1.0 - alpha) * x));
    m.lu().solve(&b).expect("I − αĀ is nonsingular").iter().copied().collect()
}

pub fn linf(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| f64::max(m, (x - y).abs()))
}

pub fn l1_normalized(a: &[f64]) -> Vec<f64> {
    let s: f64 = a.iter().map(|x| x.abs()).sum();
    a.iter().map(|x| x / s).collect()
}

pub fn cosine_distance(a: &[f64], b: &[f64]) -> f64 {
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let na = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nb = b.iter().map(|x| x * x).sum::<f64>().sqrt();
    1.0 - dot / (na * nb)
}

/// Harmonic numbers by direct summation.
pub fn harmonic_number(m: usize) -> f64 {
    (1..=m).map(|i| 1.0 / i as f64).sum()
}
