//! Centrality measures on directed graphs, and a bench that checks them
//! against the size, density and score-monotonicity axioms.
//!
//! The crate is `no_std` (it needs `alloc`). Parsing, file formats and the
//! command-line front end live in the `centrality` companion crate.
//!
//! Measures are grouped the way they are computed:
//!
//! - [`geometric`] has indegree, closeness, Lin's index, harmonic centrality;
//! - [`spectral`] has dominant eigenvector, Seeley's index, Katz's index,
//!   PageRank, HITS and SALSA;
//! - [`path`] has betweenness;
//! - [`naive`] has the negative β-measure and the density × size products.
//!
//! [`compute`] dispatches on a [`Measure`] id. The [`axioms`] module holds
//! the clique/cycle generators, the closed-form score tables and the axiom
//! checkers; [`retrieval`] runs ranking-quality evaluations on corpora.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod axioms;
pub mod components;
mod error;
pub mod exact;
pub mod geometric;
pub mod graph;
pub mod linalg;
pub mod naive;
pub mod normalize;
mod par;
pub mod path;
pub mod random;
pub mod retrieval;
mod score;
pub mod spectral;
pub mod traversal;

pub use error::{Error, Result};
pub use graph::{Graph, Node};
pub use score::{compute, Measure, ParamEcho, ScoreVector};
pub use spectral::{EigenEstimate, Preference, SpectralParams};
