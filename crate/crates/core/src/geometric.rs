//! Geometric measures: scores that depend only on how many nodes lie at
//! each distance from the scored node (indegree, closeness, Lin, harmonic).
//!
//! Each score is obtained from one breadth-first visit of the transpose
//! rooted at the scored node; visits for distinct nodes are independent.
//! Scores are unnormalized.

use alloc::vec::Vec;

use crate::exact::{self, Rational};
use crate::traversal::{profile_with, Bfs};
use crate::{Graph, Measure, Result, ScoreVector};

/// Aggregates of the distance profile `t ↦ |{y : d(y, x) = t}|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    counts: Vec<usize>,
}

impl Profile {
    pub fn of(g: &Graph, x: usize) -> Result<Self> {
        g.check_node(x)?;
        let mut bfs = Bfs::new(g.num_nodes());
        Ok(Self {
            counts: profile_with(&mut bfs, g, x),
        })
    }

    /// Coreachable nodes, the scored node included.
    pub fn coreachable(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn distance_sum(&self) -> u64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(d, &c)| d as u64 * c as u64)
            .sum()
    }

    pub fn harmonic(&self) -> f64 {
        self.counts
            .iter()
            .enumerate()
            .skip(1)
            .map(|(d, &c)| c as f64 / d as f64)
            .sum()
    }

    pub fn harmonic_exact(&self) -> Result<Rational> {
        let mut h = exact::int(0);
        for (d, &c) in self.counts.iter().enumerate().skip(1) {
            h = exact::add(&h, &exact::frac(c as i128, d as i128))?;
        }
        Ok(h)
    }

    /// Counts by distance; entry 0 is 1.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }
}

fn profiles(g: &Graph) -> Vec<Profile> {
    let n = g.num_nodes();
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..n)
            .into_par_iter()
            .map_init(
                || Bfs::new(n),
                |bfs, x| Profile {
                    counts: profile_with(bfs, g, x),
                },
            )
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let mut bfs = Bfs::new(n);
        (0..n)
            .map(|x| Profile {
                counts: profile_with(&mut bfs, g, x),
            })
            .collect()
    }
}

/// `d⁻(x)`.
pub fn indegree(g: &Graph) -> ScoreVector {
    ScoreVector::raw(
        Measure::Degree,
        (0..g.num_nodes()).map(|x| g.indegree(x) as f64).collect(),
    )
}

/// Closeness with unreachable nodes left out of the denominator:
/// `1 / Σ_{d(y,x)<∞} d(y,x)`, and 0 when only `x` coreaches `x`.
pub fn closeness(g: &Graph) -> ScoreVector {
    let scores = profiles(g)
        .iter()
        .map(|p| match p.distance_sum() {
            0 => 0.0,
            s => 1.0 / s as f64,
        })
        .collect();
    ScoreVector::raw(Measure::Closeness, scores)
}

/// Lin's index `|coreachable|² / Σ d(y,x)`, and 1 when only `x` coreaches `x`.
pub fn lin(g: &Graph) -> ScoreVector {
    let scores = profiles(g)
        .iter()
        .map(|p| match p.distance_sum() {
            0 => 1.0,
            s => {
                let c = p.coreachable() as f64;
                c * c / s as f64
            }
        })
        .collect();
    ScoreVector::raw(Measure::Lin, scores)
}

/// Harmonic centrality `Σ_{y≠x} 1/d(y,x)` with `1/∞ = 0`.
pub fn harmonic(g: &Graph) -> ScoreVector {
    let scores = profiles(g).iter().map(Profile::harmonic).collect();
    ScoreVector::raw(Measure::Harmonic, scores)
}

/// Exact versions of the geometric measures.
pub mod exact_scores {
    use super::*;

    pub fn indegree(g: &Graph) -> Vec<Rational> {
        (0..g.num_nodes())
            .map(|x| exact::int(g.indegree(x) as i128))
            .collect()
    }

    pub fn closeness(g: &Graph) -> Vec<Rational> {
        profiles(g)
            .iter()
            .map(|p| match p.distance_sum() {
                0 => exact::int(0),
                s => exact::frac(1, s as i128),
            })
            .collect()
    }

    pub fn lin(g: &Graph) -> Vec<Rational> {
        profiles(g)
            .iter()
            .map(|p| match p.distance_sum() {
                0 => exact::int(1),
                s => {
                    let c = p.coreachable() as i128;
                    exact::frac(c * c, s as i128)
                }
            })
            .collect()
    }

    pub fn harmonic(g: &Graph) -> Result<Vec<Rational>> {
        profiles(g).iter().map(Profile::harmonic_exact).collect()
    }
}
