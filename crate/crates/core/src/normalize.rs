//! Left products with the adjacency matrix and its ℓ1-row-normalized form.
//!
//! Vectors are row vectors, so `x A` sends the value of each node to its
//! successors. All products are computed by pulling along predecessor
//! lists, one output entry at a time, in a fixed summation order.

use alloc::vec::Vec;

use crate::par;
use crate::Graph;

/// `y = x A`: each node receives the sum over its predecessors.
pub fn left_multiply(g: &Graph, x: &[f64], y: &mut [f64]) {
    par::fill(y, |v| g.predecessors(v).iter().map(|&u| x[u]).sum());
}

/// `y = x Aᵀ`: each node receives the sum over its successors.
pub fn left_multiply_transpose(g: &Graph, x: &[f64], y: &mut [f64]) {
    par::fill(y, |u| g.successors(u).iter().map(|&v| x[v]).sum());
}

/// The ℓ1-row-normalized adjacency matrix `Ā`.
///
/// Row `u` has weight `1/d⁺(u)` on each successor; rows of nodes with no
/// successors stay null, so `x Ā` may have smaller ℓ1 norm than `x`.
pub struct RowNormalized<'a> {
    graph: &'a Graph,
    inv_outdegree: Vec<f64>,
}

impl<'a> RowNormalized<'a> {
    pub fn new(graph: &'a Graph) -> Self {
        let inv_outdegree = (0..graph.num_nodes())
            .map(|u| match graph.outdegree(u) {
                0 => 0.0,
                d => 1.0 / d as f64,
            })
            .collect();
        Self {
            graph,
            inv_outdegree,
        }
    }

    /// Entry `Ā[u][v]`.
    pub fn weight(&self, u: usize, v: usize) -> f64 {
        if self.graph.has_arc(u, v) {
            self.inv_outdegree[u]
        } else {
            0.0
        }
    }

    /// `y = x Ā`.
    pub fn apply(&self, x: &[f64], y: &mut [f64]) {
        let g = self.graph;
        let inv = &self.inv_outdegree;
        par::fill(y, |v| g.predecessors(v).iter().map(|&u| x[u] * inv[u]).sum());
    }
}

/// The ℓ1-row-normalized transpose `overline(Aᵀ)`: row `v` has weight
/// `1/d⁻(v)` on each predecessor of `v`.
pub struct ColumnNormalized<'a> {
    graph: &'a Graph,
    inv_indegree: Vec<f64>,
}

impl<'a> ColumnNormalized<'a> {
    pub fn new(graph: &'a Graph) -> Self {
        let inv_indegree = (0..graph.num_nodes())
            .map(|v| match graph.indegree(v) {
                0 => 0.0,
                d => 1.0 / d as f64,
            })
            .collect();
        Self {
            graph,
            inv_indegree,
        }
    }

    /// `y = x overline(Aᵀ)`: node `u` collects `x[v]/d⁻(v)` from each successor `v`.
    pub fn apply(&self, x: &[f64], y: &mut [f64]) {
        let g = self.graph;
        let inv = &self.inv_indegree;
        par::fill(y, |u| g.successors(u).iter().map(|&v| x[v] * inv[v]).sum());
    }
}
