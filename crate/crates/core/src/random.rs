//! Seeded random graph generators for property tests and randomized
//! axiom trials.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::Graph;

/// Each ordered pair of distinct nodes is an arc with probability `p`.
pub fn erdos_renyi<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Graph::from_arcs(n, arcs).expect("ids in range")
}

/// A random Hamiltonian cycle plus `erdos_renyi` arcs, hence strongly
/// connected and (for `n ≥ 2`) loop-free.
pub fn strongly_connected<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let extra = erdos_renyi(n, p, rng);
    let ring = (0..n).filter(|_| n > 1).map(|i| (order[i], order[(i + 1) % n]));
    Graph::from_arcs(n, extra.arcs().chain(ring).collect::<Vec<_>>()).expect("ids in range")
}

/// A symmetric connected graph: a random spanning tree plus edges with
/// probability `p`, each edge present in both directions.
pub fn symmetric_connected<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        edges.push((order[i], parent));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_arcs(n, edges.iter().flat_map(|&(u, v)| [(u, v), (v, u)])).expect("ids in range")
}
