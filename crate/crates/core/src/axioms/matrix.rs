use alloc::vec::Vec;

use super::density::check_density_axiom;
use super::monotonicity::{check_score_monotonicity, MonotonicityConfig};
use super::size::{check_size_axiom, SizeConfig};
use super::{AxiomVerdict, Verdict};
use crate::spectral::SpectralParams;
use crate::{Measure, Result};

/// Settings for a full run of the three checks.
#[derive(Clone, Debug, PartialEq)]
pub struct AxiomConfig {
    pub size: SizeConfig,
    /// Values of `k` for which `D_{k,k}` is tested.
    pub density_ks: Vec<usize>,
    pub monotonicity: MonotonicityConfig,
    pub params: SpectralParams,
}

impl Default for AxiomConfig {
    fn default() -> Self {
        Self {
            size: SizeConfig::default(),
            density_ks: (3..=12).collect(),
            monotonicity: MonotonicityConfig::default(),
            params: SpectralParams::default(),
        }
    }
}

/// Size, density and monotonicity verdicts of one measure.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixRow {
    pub measure: Measure,
    pub size: AxiomVerdict,
    pub density: AxiomVerdict,
    pub monotonicity: AxiomVerdict,
}

impl MatrixRow {
    pub fn verdicts(&self) -> [Verdict; 3] {
        [self.size.verdict, self.density.verdict, self.monotonicity.verdict]
    }

    pub fn cells(&self) -> [&AxiomVerdict; 3] {
        [&self.size, &self.density, &self.monotonicity]
    }
}

fn row(measure: Measure, config: &AxiomConfig) -> Result<MatrixRow> {
    Ok(MatrixRow {
        measure,
        size: check_size_axiom(measure, &config.size, &config.params)?,
        density: check_density_axiom(measure, &config.density_ks, &config.params)?,
        monotonicity: check_score_monotonicity(measure, &config.monotonicity, &config.params)?,
    })
}

/// Runs every check for every measure; rows come back in input order.
pub fn axiom_matrix(measures: &[Measure], config: &AxiomConfig) -> Result<Vec<MatrixRow>> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        measures.par_iter().map(|&m| row(m, config)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        measures.iter().map(|&m| row(m, config)).collect()
    }
}

/// The expected `(size, density, monotonicity)` verdicts.
pub fn expected_verdicts(measure: Measure) -> [Verdict; 3] {
    use Verdict::{No, OnlyK, OnlyP, Yes};
    match measure {
        Measure::Degree => [OnlyK, Yes, Yes],
        Measure::Harmonic => [Yes, Yes, Yes],
        Measure::Closeness => [No, No, No],
        Measure::Lin => [OnlyK, No, No],
        Measure::Betweenness => [OnlyP, No, No],
        Measure::Dominant => [OnlyK, Yes, No],
        Measure::Seeley => [No, Yes, No],
        Measure::Katz => [OnlyK, Yes, Yes],
        Measure::PageRank => [No, Yes, Yes],
        Measure::Hits => [OnlyK, Yes, No],
        Measure::Salsa => [No, Yes, No],
        // The β-measure alone is insensitive to size on S_{k,p}.
        Measure::Beta => [No, Yes, Yes],
        Measure::IndegreeCo | Measure::IndegreeWeak | Measure::BetaCo | Measure::BetaWeak => [Yes, Yes, Yes],
    }
}
