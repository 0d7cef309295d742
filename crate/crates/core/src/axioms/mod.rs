//! The axiom bench: clique/cycle generators, closed-form scores, and the
//! size, density and score-monotonicity checks.
//!
//! The size axiom asks that on `S_{k,p}` a cycle node eventually beat a
//! clique node as `p` grows (for each `k`), and a clique node eventually
//! beat a cycle node as `k` grows (for each `p`). The density axiom asks
//! that on `D_{k,k}` the clique bridge beat the cycle bridge. Score
//! monotonicity asks that adding an absent arc `x → y` strictly increase
//! the score of `y`.

mod closed_form;
mod density;
mod generators;
mod matrix;
mod monotonicity;
mod size;
mod values;

use alloc::string::String;
use core::fmt;

pub use closed_form::{
    betweenness_d_cycle, check_oracle, compare_bridges, hits_quartic, katz_system, oracle_d, oracle_s,
    pagerank_system, ClosedForm, OracleCheck, Role,
};
pub use density::{check_density_axiom, watershed, DensityWitness};
pub use generators::{gen_d, gen_s, Family, GeneratorSpec};
pub use matrix::{axiom_matrix, expected_verdicts, AxiomConfig, MatrixRow};
pub use monotonicity::{
    check_score_monotonicity, fixtures, replay_fixture, score_change, Fixture, MonotonicityConfig,
    MonotonicityWitness, Violation,
};
pub use size::{check_size_axiom, SizeConfig, SizeProbe, SizeWitness};
pub use values::{compare, compute_exact, evaluate, Value, Values, TIE_TOLERANCE};

use crate::Measure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Size,
    Density,
    Monotonicity,
}

impl Axiom {
    pub const ALL: [Axiom; 3] = [Axiom::Size, Axiom::Density, Axiom::Monotonicity];

    pub fn id(self) -> &'static str {
        match self {
            Axiom::Size => "size",
            Axiom::Density => "density",
            Axiom::Monotonicity => "monotonicity",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Outcome of one axiom check. `OnlyK` and `OnlyP` qualify the size axiom:
/// only the growing-clique (respectively growing-cycle) half holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Yes,
    No,
    OnlyK,
    OnlyP,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::OnlyK => "only k",
            Verdict::OnlyP => "only p",
        }
    }

    fn from_halves(k_half: bool, p_half: bool) -> Self {
        match (k_half, p_half) {
            (true, true) => Verdict::Yes,
            (true, false) => Verdict::OnlyK,
            (false, true) => Verdict::OnlyP,
            (false, false) => Verdict::No,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Evidence behind a verdict.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    Size(SizeWitness),
    Density(DensityWitness),
    Monotonicity(MonotonicityWitness),
}

impl Witness {
    /// One-line description, tab-free.
    pub fn summary(&self) -> String {
        match self {
            Witness::Size(w) => w.summary(),
            Witness::Density(w) => w.summary(),
            Witness::Monotonicity(w) => w.summary(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AxiomVerdict {
    pub measure: Measure,
    pub axiom: Axiom,
    pub verdict: Verdict,
    pub witness: Witness,
}

fn join<T: fmt::Display>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    let mut out = String::new();
    for (i, item) in items.into_iter().enumerate() {
        if i > 0 {
            out.push_str(sep);
        }
        out.push_str(&alloc::format!("{item}"));
    }
    out
}

fn option_label(v: Option<usize>) -> String {
    v.map_or_else(|| "none".into(), |x| alloc::format!("{x}"))
}

