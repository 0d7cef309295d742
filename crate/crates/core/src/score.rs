use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::naive::{Density, Size};
use crate::spectral::SpectralParams;
use crate::{geometric, naive, path, spectral, Error, Graph, Result};

/// Every measure the library computes, addressed by a stable lowercase id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Measure {
    Degree,
    Harmonic,
    Closeness,
    Lin,
    Betweenness,
    Dominant,
    Seeley,
    Katz,
    PageRank,
    Hits,
    Salsa,
    Beta,
    IndegreeCo,
    IndegreeWeak,
    BetaCo,
    BetaWeak,
}

impl Measure {
    pub const ALL: [Measure; 16] = [
        Measure::Degree,
        Measure::Harmonic,
        Measure::Closeness,
        Measure::Lin,
        Measure::Betweenness,
        Measure::Dominant,
        Measure::Seeley,
        Measure::Katz,
        Measure::PageRank,
        Measure::Hits,
        Measure::Salsa,
        Measure::Beta,
        Measure::IndegreeCo,
        Measure::IndegreeWeak,
        Measure::BetaCo,
        Measure::BetaWeak,
    ];

    /// The eleven classical measures, in axiom-table order.
    pub const CLASSICAL: [Measure; 11] = [
        Measure::Degree,
        Measure::Harmonic,
        Measure::Closeness,
        Measure::Lin,
        Measure::Betweenness,
        Measure::Dominant,
        Measure::Seeley,
        Measure::Katz,
        Measure::PageRank,
        Measure::Hits,
        Measure::Salsa,
    ];

    /// Density × size products.
    pub const NAIVE: [Measure; 4] = [
        Measure::IndegreeCo,
        Measure::IndegreeWeak,
        Measure::BetaCo,
        Measure::BetaWeak,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Measure::Degree => "degree",
            Measure::Harmonic => "harmonic",
            Measure::Closeness => "closeness",
            Measure::Lin => "lin",
            Measure::Betweenness => "betweenness",
            Measure::Dominant => "dominant",
            Measure::Seeley => "seeley",
            Measure::Katz => "katz",
            Measure::PageRank => "pagerank",
            Measure::Hits => "hits",
            Measure::Salsa => "salsa",
            Measure::Beta => "beta",
            Measure::IndegreeCo => "indegree-co",
            Measure::IndegreeWeak => "indegree-weak",
            Measure::BetaCo => "beta-co",
            Measure::BetaWeak => "beta-weak",
        }
    }

    /// Human-readable name used in rendered tables.
    pub fn display_name(self) -> &'static str {
        match self {
            Measure::Degree => "Degree",
            Measure::Harmonic => "Harmonic",
            Measure::Closeness => "Closeness",
            Measure::Lin => "Lin",
            Measure::Betweenness => "Betweenness",
            Measure::Dominant => "Dominant",
            Measure::Seeley => "Seeley",
            Measure::Katz => "Katz",
            Measure::PageRank => "PageRank",
            Measure::Hits => "HITS",
            Measure::Salsa => "SALSA",
            Measure::Beta => "β-measure",
            Measure::IndegreeCo => "Indegree←",
            Measure::IndegreeWeak => "Indegree↔",
            Measure::BetaCo => "β-measure←",
            Measure::BetaWeak => "β-measure↔",
        }
    }

    /// Whether the measure is computed by an iterative spectral solver.
    pub fn is_spectral(self) -> bool {
        matches!(
            self,
            Measure::Dominant
                | Measure::Seeley
                | Measure::Katz
                | Measure::PageRank
                | Measure::Hits
                | Measure::Salsa
        )
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Measure::ALL
            .iter()
            .copied()
            .find(|m| m.id() == s)
            .ok_or_else(|| Error::UnknownMeasure(s.to_string()))
    }
}

/// Parameters actually used to produce a score vector.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ParamEcho {
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub tol: Option<f64>,
    pub iterations: Option<usize>,
    pub residual: Option<f64>,
}

/// Per-node scores of one measure.
#[derive(Clone, Debug, PartialEq)]
pub struct ScoreVector {
    pub measure: Measure,
    pub params: ParamEcho,
    pub scores: Vec<f64>,
    /// Scores were rescaled by a common positive factor.
    pub normalized: bool,
    /// The defining iteration has no nonzero limit; scores are all zero.
    pub degenerate: bool,
}

impl ScoreVector {
    pub(crate) fn raw(measure: Measure, scores: Vec<f64>) -> Self {
        Self {
            measure,
            params: ParamEcho::default(),
            scores,
            normalized: false,
            degenerate: false,
        }
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    pub fn get(&self, x: usize) -> f64 {
        self.scores[x]
    }
}

/// Computes any measure. Spectral parameters are ignored by the others.
pub fn compute(g: &Graph, measure: Measure, params: &SpectralParams) -> Result<ScoreVector> {
    Ok(match measure {
        Measure::Degree => geometric::indegree(g),
        Measure::Harmonic => geometric::harmonic(g),
        Measure::Closeness => geometric::closeness(g),
        Measure::Lin => geometric::lin(g),
        Measure::Betweenness => path::betweenness(g),
        Measure::Dominant => spectral::dominant_eigenvector(g, params)?,
        Measure::Seeley => spectral::seeley(g, params)?,
        Measure::Katz => spectral::katz(g, params)?,
        Measure::PageRank => spectral::pagerank(g, params)?,
        Measure::Hits => spectral::hits(g, params)?.0,
        Measure::Salsa => spectral::salsa(g),
        Measure::Beta => naive::beta_measure(g),
        Measure::IndegreeCo => naive::naive_product(g, Density::Indegree, Size::Coreachable),
        Measure::IndegreeWeak => naive::naive_product(g, Density::Indegree, Size::Weak),
        Measure::BetaCo => naive::naive_product(g, Density::Beta, Size::Coreachable),
        Measure::BetaWeak => naive::naive_product(g, Density::Beta, Size::Weak),
    })
}
