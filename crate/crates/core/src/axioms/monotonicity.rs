use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::values::{compare, evaluate, Value, Values};
use super::{Axiom, AxiomVerdict, Verdict, Witness};
use crate::spectral::{katz_beta, SpectralParams};
use crate::{random, Graph, Measure, Node, Result};

/// A graph and an absent arc `x → y` to add.
#[derive(Clone, Debug, PartialEq)]
pub struct Fixture {
    pub name: &'static str,
    pub graph: Graph,
    pub x: Node,
    pub y: Node,
}

/// The fixed arc-addition cases replayed for every measure.
pub fn fixtures() -> Vec<Fixture> {
    let clique_and_two = {
        let arcs = (0..4).flat_map(|u| (0..4).filter(move |&v| v != u).map(move |v| (u, v)));
        Graph::from_arcs(6, arcs).unwrap()
    };
    alloc::vec![
        // y = 0, z = 1, x = 2.
        Fixture {
            name: "second-predecessor",
            graph: Graph::from_arcs(3, [(1, 0)]).unwrap(),
            x: 2,
            y: 0,
        },
        Fixture {
            name: "two-isolated",
            graph: Graph::empty(2),
            x: 0,
            y: 1,
        },
        Fixture {
            name: "clique-and-two-isolated",
            graph: clique_and_two,
            x: 4,
            y: 5,
        },
        // y = 0, z = 1; w → y; x, a, b → z. Adding x → y joins y and z
        // in the cocitation graph.
        Fixture {
            name: "cocitation-merge",
            graph: Graph::from_arcs(6, [(2, 0), (3, 1), (4, 1), (5, 1)]).unwrap(),
            x: 3,
            y: 0,
        },
        // Hub y = 0 with four predecessors; x = 5 is reached by u = 6,
        // which is reached by v = 7 and w = 8.
        Fixture {
            name: "hub-and-chain",
            graph: Graph::from_arcs(9, [(1, 0), (2, 0), (3, 0), (4, 0), (6, 5), (7, 6), (8, 6)]).unwrap(),
            x: 5,
            y: 0,
        },
        Fixture {
            name: "two-node",
            graph: Graph::from_arcs(2, [(1, 0)]).unwrap(),
            x: 0,
            y: 1,
        },
    ]
}

#[derive(Clone, Debug, PartialEq)]
pub struct MonotonicityConfig {
    /// Random trials for measures not computed by spectral solvers.
    pub trials: usize,
    /// Random trials for spectral measures.
    pub spectral_trials: usize,
    pub seed: u64,
    pub max_nodes: usize,
    /// Upper bound on the arc probability of the random graphs.
    pub max_density: f64,
}

impl Default for MonotonicityConfig {
    fn default() -> Self {
        Self {
            trials: 10_000,
            spectral_trials: 1_000,
            seed: 0x5eed,
            max_nodes: 40,
            max_density: 0.3,
        }
    }
}

/// An arc addition that did not strictly increase the score of `y`.
#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    /// Fixture name, or `trial-<i>`.
    pub source: String,
    pub graph: Graph,
    pub x: Node,
    pub y: Node,
    pub before: Value,
    pub after: Value,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MonotonicityWitness {
    pub violation: Option<Violation>,
    pub fixtures_checked: usize,
    /// Fixtures on which the measure could not be computed.
    pub fixtures_skipped: usize,
    pub trials: usize,
    pub trials_skipped: usize,
    pub seed: u64,
}

impl MonotonicityWitness {
    pub fn summary(&self) -> String {
        match &self.violation {
            Some(v) => alloc::format!(
                "{} (n={}, m={}, add {}->{}): score(y) {} -> {}",
                v.source,
                v.graph.num_nodes(),
                v.graph.num_arcs(),
                v.x,
                v.y,
                v.before,
                v.after
            ),
            None => alloc::format!(
                "strict increase on {} fixtures and {} random trials (seed {:#x})",
                self.fixtures_checked,
                self.trials - self.trials_skipped,
                self.seed
            ),
        }
    }
}

/// Scores of `y` before and after adding `x → y`, and whether the score
/// strictly increased. Katz's default attenuation factor is taken from the
/// graph after the addition and used on both graphs.
pub fn score_change(
    g: &Graph,
    x: Node,
    y: Node,
    measure: Measure,
    params: &SpectralParams,
) -> Result<(Value, Value, bool)> {
    let after_graph = g.with_arc(x, y)?;
    let mut params = params.clone();
    if measure == Measure::Katz && params.beta.is_none() {
        params.beta = Some(katz_beta(&after_graph, &params)?.0);
    }
    let before = evaluate(g, measure, &params)?;
    let after = evaluate(&after_graph, measure, &params)?;
    let scale = before.scale().max(after.scale());
    let (b, a) = (before.get(y), after.get(y));
    let increased = compare(&a, &b, Some(scale)) == Ordering::Greater;
    Ok((b, a, increased))
}

fn random_trial(rng: &mut ChaCha8Rng, config: &MonotonicityConfig) -> Option<(Graph, Node, Node)> {
    let n = rng.gen_range(2..=config.max_nodes.max(2));
    let u: f64 = rng.gen();
    let q = u * u * config.max_density;
    let g = random::erdos_renyi(n, q, rng);
    for _ in 0..64 {
        let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if x != y && !g.has_arc(x, y) {
            return Some((g, x, y));
        }
    }
    None
}

/// Replays the fixtures, then, if none is violated, runs seeded random
/// trials on loop-free graphs.
pub fn check_score_monotonicity(
    measure: Measure,
    config: &MonotonicityConfig,
    params: &SpectralParams,
) -> Result<AxiomVerdict> {
    let mut witness = MonotonicityWitness {
        violation: None,
        fixtures_checked: 0,
        fixtures_skipped: 0,
        trials: 0,
        trials_skipped: 0,
        seed: config.seed,
    };
    for f in fixtures() {
        match score_change(&f.graph, f.x, f.y, measure, params) {
            Ok((before, after, increased)) => {
                witness.fixtures_checked += 1;
                if !increased && witness.violation.is_none() {
                    witness.violation = Some(Violation {
                        source: f.name.into(),
                        graph: f.graph,
                        x: f.x,
                        y: f.y,
                        before,
                        after,
                    });
                }
            }
            Err(_) => witness.fixtures_skipped += 1,
        }
    }
    let trials = if measure.is_spectral() {
        config.spectral_trials
    } else {
        config.trials
    };
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    if witness.violation.is_none() {
        for i in 0..trials {
            witness.trials += 1;
            let Some((g, x, y)) = random_trial(&mut rng, config) else {
                witness.trials_skipped += 1;
                continue;
            };
            match score_change(&g, x, y, measure, params) {
                Ok((before, after, false)) => {
                    witness.violation = Some(Violation {
                        source: alloc::format!("trial-{i}"),
                        graph: g,
                        x,
                        y,
                        before,
                        after,
                    });
                    break;
                }
                Ok(_) => {}
                Err(_) => witness.trials_skipped += 1,
            }
        }
    }
    let verdict = if witness.violation.is_some() {
        Verdict::No
    } else {
        Verdict::Yes
    };
    Ok(AxiomVerdict {
        measure,
        axiom: Axiom::Monotonicity,
        verdict,
        witness: Witness::Monotonicity(witness),
    })
}

/// Scores before and after for a replayed fixture, as plain vectors.
pub fn replay_fixture(f: &Fixture, measure: Measure, params: &SpectralParams) -> Result<(Values, Values)> {
    let after = f.graph.with_arc(f.x, f.y)?;
    Ok((evaluate(&f.graph, measure, params)?, evaluate(&after, measure, params)?))
}
