use alloc::vec::Vec;

use crate::{Error, Graph, Node, Result};

/// Test-graph family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// A `k`-clique and a disjoint directed `p`-cycle.
    S,
    /// The same two pieces joined by the bridge `0 ↔ k`.
    D,
}

/// A member of one of the two families.
///
/// Clique nodes are `0..k` and cycle nodes `k..k+p`, with arcs
/// `k+d → k+(d+1) mod p`. In `D` the clique bridge is `0` and the cycle
/// bridge is `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSpec {
    pub family: Family,
    pub k: usize,
    pub p: usize,
}

impl GeneratorSpec {
    pub fn new(family: Family, k: usize, p: usize) -> Result<Self> {
        let min = match family {
            Family::S => 1,
            Family::D => 3,
        };
        if k < min || p < min {
            return Err(Error::InvalidParameter(alloc::format!(
                "{family:?}: need k, p >= {min}, got k = {k}, p = {p}"
            )));
        }
        Ok(Self { family, k, p })
    }

    pub fn num_nodes(&self) -> usize {
        self.k + self.p
    }

    pub fn clique_bridge(&self) -> Node {
        0
    }

    pub fn cycle_bridge(&self) -> Node {
        self.k
    }

    /// The cycle node at distance `d` from the cycle bridge.
    pub fn cycle_node(&self, d: usize) -> Node {
        self.k + d % self.p
    }

    pub fn build(&self) -> Graph {
        let (k, p) = (self.k, self.p);
        let mut arcs: Vec<(Node, Node)> = Vec::with_capacity(k * (k - 1) + p + 2);
        for u in 0..k {
            arcs.extend((0..k).filter(|&v| v != u).map(|v| (u, v)));
        }
        arcs.extend((0..p).map(|d| (k + d, k + (d + 1) % p)));
        if self.family == Family::D {
            arcs.extend([(0, k), (k, 0)]);
        }
        Graph::from_arcs(k + p, arcs).expect("generated ids are in range")
    }
}

/// `S_{k,p}`: a `k`-clique and a directed `p`-cycle (`k, p ≥ 1`; `p = 1`
/// is a loop).
pub fn gen_s(k: usize, p: usize) -> Result<Graph> {
    Ok(GeneratorSpec::new(Family::S, k, p)?.build())
}

/// `D_{k,p}`: `S_{k,p}` plus the bridge `0 ↔ k` (`k, p ≥ 3`).
pub fn gen_d(k: usize, p: usize) -> Result<Graph> {
    Ok(GeneratorSpec::new(Family::D, k, p)?.build())
}
