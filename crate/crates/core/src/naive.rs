//! The negative β-measure and the density × size products built from it
//! and from indegree.

use alloc::vec::Vec;

use crate::components::weakly_connected_components;
use crate::exact::{self, Rational};
use crate::traversal::{Bfs, Direction};
use crate::{par, Graph, Measure, Result, ScoreVector};

/// Local density factor of a naive measure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Density {
    /// `d⁻(x)`.
    Indegree,
    /// `Σ_{y→x} 1/d⁺(y)`.
    Beta,
}

/// Size factor of a naive measure; both counts include `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Size {
    /// Nodes that reach `x`.
    Coreachable,
    /// Nodes in the weakly connected component of `x`.
    Weak,
}

impl Measure {
    /// The `(density, size)` pair of a naive product measure.
    pub fn naive_factors(self) -> Option<(Density, Size)> {
        match self {
            Measure::IndegreeCo => Some((Density::Indegree, Size::Coreachable)),
            Measure::IndegreeWeak => Some((Density::Indegree, Size::Weak)),
            Measure::BetaCo => Some((Density::Beta, Size::Coreachable)),
            Measure::BetaWeak => Some((Density::Beta, Size::Weak)),
            _ => None,
        }
    }
}

/// The negative β-measure `Σ_{y→x} 1/d⁺(y)`, i.e. `(𝟏 Ā)_x`.
pub fn beta_measure(g: &Graph) -> ScoreVector {
    let scores = (0..g.num_nodes())
        .map(|x| g.predecessors(x).iter().map(|&y| 1.0 / g.outdegree(y) as f64).sum())
        .collect();
    ScoreVector::raw(Measure::Beta, scores)
}

/// Per-node size counts.
pub fn size_counts(g: &Graph, size: Size) -> Vec<usize> {
    let n = g.num_nodes();
    match size {
        Size::Coreachable => par::map_nodes(n, |x| Bfs::new(n).run(g, x, Direction::Backward).len()),
        Size::Weak => {
            let wcc = weakly_connected_components(g);
            (0..n).map(|x| wcc.members(wcc.component_of(x)).len()).collect()
        }
    }
}

/// Pointwise product of a density score and a size count.
pub fn naive_product(g: &Graph, density: Density, size: Size) -> ScoreVector {
    let base = match density {
        Density::Indegree => crate::geometric::indegree(g).scores,
        Density::Beta => beta_measure(g).scores,
    };
    let sizes = size_counts(g, size);
    let measure = match (density, size) {
        (Density::Indegree, Size::Coreachable) => Measure::IndegreeCo,
        (Density::Indegree, Size::Weak) => Measure::IndegreeWeak,
        (Density::Beta, Size::Coreachable) => Measure::BetaCo,
        (Density::Beta, Size::Weak) => Measure::BetaWeak,
    };
    let scores = base.iter().zip(&sizes).map(|(d, &s)| d * s as f64).collect();
    ScoreVector::raw(measure, scores)
}

/// Exact versions of the naive measures.
pub mod exact_scores {
    use super::*;

    pub fn beta_measure(g: &Graph) -> Result<Vec<Rational>> {
        (0..g.num_nodes())
            .map(|x| {
                g.predecessors(x).iter().try_fold(exact::int(0), |acc, &y| {
                    exact::add(&acc, &exact::frac(1, g.outdegree(y) as i128))
                })
            })
            .collect()
    }

    pub fn naive_product(g: &Graph, density: Density, size: Size) -> Result<Vec<Rational>> {
        let base = match density {
            Density::Indegree => crate::geometric::exact_scores::indegree(g),
            Density::Beta => beta_measure(g)?,
        };
        base.iter()
            .zip(size_counts(g, size))
            .map(|(d, s)| exact::mul(d, &exact::int(s as i128)))
            .collect()
    }
}
