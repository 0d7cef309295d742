use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::closed_form::{oracle_s, Role};
use super::generators::{gen_s, Family, GeneratorSpec};
use super::values::{compare, evaluate, Value};
use super::{join, option_label, Axiom, AxiomVerdict, Verdict, Witness};
use crate::spectral::SpectralParams;
use crate::{Measure, Result};

/// How cycle and clique scores of `S_{k,p}` are obtained during the scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SizeProbe {
    /// Closed forms; cheap, so the bounds can be large.
    ClosedForm,
    /// The measure itself on the generated graph.
    FullGraph,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SizeConfig {
    /// Clique sizes for which the least winning cycle length is sought.
    pub k_sample: Vec<usize>,
    /// Cycle lengths for which the least winning clique size is sought.
    pub p_sample: Vec<usize>,
    pub p_max: usize,
    pub k_max: usize,
    pub probe: SizeProbe,
    /// Winning points no larger than this many nodes are recomputed on
    /// the full graph.
    pub replay_nodes: usize,
}

impl Default for SizeConfig {
    fn default() -> Self {
        Self {
            // Harmonic centrality needs a cycle of about e^k nodes.
            k_sample: (3..=8).collect(),
            p_sample: (3..=12).collect(),
            p_max: 10_000,
            k_max: 1_000,
            probe: SizeProbe::ClosedForm,
            replay_nodes: 800,
        }
    }
}

impl SizeConfig {
    /// Small bounds for probing full graphs.
    pub fn full_graph() -> Self {
        Self {
            k_sample: (3..=5).collect(),
            p_sample: (3..=8).collect(),
            p_max: 80,
            k_max: 40,
            probe: SizeProbe::FullGraph,
            replay_nodes: 0,
        }
    }
}

/// Least thresholds found for each half of the size axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeWitness {
    /// `(k, P_k)`: from `P_k` up to `p_max` the cycle wins.
    pub p_branch: Vec<(usize, Option<usize>)>,
    /// `(p, K_p)`: from `K_p` up to `k_max` the clique wins.
    pub k_branch: Vec<(usize, Option<usize>)>,
    pub p_max: usize,
    pub k_max: usize,
}

impl SizeWitness {
    pub fn summary(&self) -> String {
        let fmt = |pairs: &[(usize, Option<usize>)], name: &str| {
            join(pairs.iter().map(|&(i, v)| alloc::format!("{name}_{i}={}", option_label(v))), ",")
        };
        alloc::format!(
            "{} (p<={}); {} (k<={})",
            fmt(&self.p_branch, "P"),
            self.p_max,
            fmt(&self.k_branch, "K"),
            self.k_max
        )
    }

    pub fn p_threshold(&self, k: usize) -> Option<usize> {
        self.p_branch.iter().find(|(i, _)| *i == k).and_then(|(_, v)| *v)
    }

    pub fn k_threshold(&self, p: usize) -> Option<usize> {
        self.k_branch.iter().find(|(i, _)| *i == p).and_then(|(_, v)| *v)
    }
}

/// `Ordering` of the cycle score against the clique score on `S_{k,p}`.
fn cycle_vs_clique(measure: Measure, k: usize, p: usize, probe: SizeProbe, params: &SpectralParams) -> Result<Ordering> {
    let (clique, cycle): (Value, Value) = match probe {
        SizeProbe::ClosedForm => {
            let f = oracle_s(measure, k, p, params)?;
            (f.value(Role::Clique).unwrap().clone(), f.value(Role::Cycle).unwrap().clone())
        }
        SizeProbe::FullGraph => {
            let spec = GeneratorSpec::new(Family::S, k, p)?;
            let v = evaluate(&gen_s(k, p)?, measure, params)?;
            (v.get(0), v.get(spec.cycle_node(0)))
        }
    };
    Ok(compare(&cycle, &clique, None))
}

/// Least `t` in `from..=to` such that `wins(t')` for all `t' ≥ t`.
fn least_threshold(from: usize, to: usize, mut wins: impl FnMut(usize) -> Result<bool>) -> Result<Option<usize>> {
    let mut threshold = None;
    for t in from..=to {
        match (wins(t)?, threshold) {
            (true, None) => threshold = Some(t),
            (false, _) => threshold = None,
            _ => {}
        }
    }
    Ok(threshold)
}

/// Checks the size axiom by bounded scans over `S_{k,p}` (`k, p ≥ 3`).
pub fn check_size_axiom(measure: Measure, config: &SizeConfig, params: &SpectralParams) -> Result<AxiomVerdict> {
    let probe = config.probe;
    let mut p_branch = Vec::new();
    for &k in &config.k_sample {
        let t = least_threshold(3, config.p_max, |p| {
            Ok(cycle_vs_clique(measure, k, p, probe, params)? == Ordering::Greater)
        })?;
        p_branch.push((k, t));
    }
    let mut k_branch = Vec::new();
    for &p in &config.p_sample {
        let t = least_threshold(3, config.k_max, |k| {
            Ok(cycle_vs_clique(measure, k, p, probe, params)? == Ordering::Less)
        })?;
        k_branch.push((p, t));
    }
    if probe == SizeProbe::ClosedForm {
        replay(measure, &p_branch, &k_branch, config.replay_nodes, params)?;
    }
    let verdict = Verdict::from_halves(
        k_branch.iter().all(|(_, t)| t.is_some()),
        p_branch.iter().all(|(_, t)| t.is_some()),
    );
    Ok(AxiomVerdict {
        measure,
        axiom: Axiom::Size,
        verdict,
        witness: Witness::Size(SizeWitness {
            p_branch,
            k_branch,
            p_max: config.p_max,
            k_max: config.k_max,
        }),
    })
}

/// Recomputes thresholds found from closed forms on the full graphs:
/// at the threshold the expected side wins, just below it it does not.
fn replay(
    measure: Measure,
    p_branch: &[(usize, Option<usize>)],
    k_branch: &[(usize, Option<usize>)],
    max_nodes: usize,
    params: &SpectralParams,
) -> Result<()> {
    let full = |k, p| cycle_vs_clique(measure, k, p, SizeProbe::FullGraph, params);
    let points = p_branch
        .iter()
        .filter_map(|&(k, t)| t.map(|p| (k, p, Ordering::Greater)))
        .chain(k_branch.iter().filter_map(|&(p, t)| t.map(|k| (k, p, Ordering::Less))));
    for (k, p, side) in points {
        if k + p > max_nodes {
            continue;
        }
        let ok_at = full(k, p)? == side;
        let below = if side == Ordering::Greater { (k, p - 1) } else { (k - 1, p) };
        let ok_below = below.0 < 3 || below.1 < 3 || full(below.0, below.1)? != side;
        if !(ok_at && ok_below) {
            return Err(crate::Error::InvalidParameter(alloc::format!(
                "{measure}: closed form and full graph disagree near k = {k}, p = {p}"
            )));
        }
    }
    Ok(())
}
