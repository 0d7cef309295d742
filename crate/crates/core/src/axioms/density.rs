use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::closed_form::compare_bridges;
use super::{join, Axiom, AxiomVerdict, Verdict, Witness};
use crate::spectral::SpectralParams;
use crate::{Measure, Result};

/// Per `k`: how the clique bridge compares with the cycle bridge on `D_{k,k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityWitness {
    pub outcomes: Vec<(usize, Ordering)>,
}

impl DensityWitness {
    pub fn first_failure(&self) -> Option<(usize, Ordering)> {
        self.outcomes.iter().copied().find(|(_, o)| *o != Ordering::Greater)
    }

    pub fn summary(&self) -> String {
        let label = |o: Ordering| match o {
            Ordering::Greater => "x>y",
            Ordering::Equal => "x=y",
            Ordering::Less => "x<y",
        };
        match self.first_failure() {
            Some((k, o)) => alloc::format!("D_{{{k},{k}}}: {}", label(o)),
            None => {
                let ks = self.outcomes.iter().map(|(k, _)| *k);
                alloc::format!("x>y on D_{{k,k}} for k in {{{}}}", join(ks, ","))
            }
        }
    }
}

/// Checks the density axiom on `D_{k,k}` for each `k` in `ks` (`k ≥ 3`).
pub fn check_density_axiom(measure: Measure, ks: &[usize], params: &SpectralParams) -> Result<AxiomVerdict> {
    let outcomes = ks
        .iter()
        .map(|&k| Ok((k, compare_bridges(measure, k, k, params)?)))
        .collect::<Result<Vec<_>>>()?;
    let witness = DensityWitness { outcomes };
    let verdict = if witness.first_failure().is_none() {
        Verdict::Yes
    } else {
        Verdict::No
    };
    Ok(AxiomVerdict {
        measure,
        axiom: Axiom::Density,
        verdict,
        witness: Witness::Density(witness),
    })
}

/// Least `k` in `3..=k_max` at which the clique bridge of `D_{k,p}`
/// outscores the cycle bridge.
pub fn watershed(measure: Measure, p: usize, k_max: usize, params: &SpectralParams) -> Result<Option<usize>> {
    for k in 3..=k_max {
        if compare_bridges(measure, k, p, params)? == Ordering::Greater {
            return Ok(Some(k));
        }
    }
    Ok(None)
}
