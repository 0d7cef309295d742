//! Spectral measures, all defined by iterations that start from the
//! uniform vector.
//!
//! | measure  | iteration                              |
//! |----------|----------------------------------------|
//! | dominant | `x ← x A / ‖x A‖₁`                     |
//! | Seeley   | `x ← x Ā`                              |
//! | Katz     | `k ← 1 + β k A`                        |
//! | PageRank | `p ← α p Ā + (1 − α) v`                |
//! | HITS     | `a ← a AᵀA / ‖a AᵀA‖₁`                 |
//! | SALSA    | `a ← a overline(Aᵀ) Ā`                 |
//!
//! `Ā` is the ℓ1-row-normalized adjacency matrix with null rows left null;
//! PageRank is never patched. Iterations stop when the relative ℓ∞ change
//! drops below `tol`. When the eigen-style iterations oscillate (a
//! periodic matrix and a start vector with weight on the other peripheral
//! eigenvalues) they switch to the lazy operator `A + I`, whose iterates
//! converge to the same dominant direction.

mod attenuated;
mod eigen;
mod hits;
mod power;
mod salsa;

use alloc::vec::Vec;

pub use attenuated::{katz, pagerank};
pub(crate) use attenuated::katz_beta;
pub use eigen::{estimate_dominant_eigenvalues, EigenEstimate};
pub use hits::hits;
pub use power::{dominant_eigenvector, seeley};
pub use salsa::{salsa, salsa_exact, salsa_iterative};

use crate::{Error, Result};

/// Katz's attenuation factor must stay below `(1 − KATZ_MARGIN) / λ̂`.
pub const KATZ_MARGIN: f64 = 1e-6;

/// Preference (personalization) vector for PageRank.
#[derive(Clone, Debug, Default, PartialEq)]
pub enum Preference {
    #[default]
    Uniform,
    /// A distribution over the nodes.
    Explicit(Vec<f64>),
}

impl Preference {
    pub(crate) fn resolve(&self, n: usize) -> Result<Vec<f64>> {
        match self {
            Preference::Uniform => Ok(alloc::vec![1.0 / n as f64; n]),
            Preference::Explicit(v) => {
                if v.len() != n {
                    return Err(Error::InvalidParameter(alloc::format!(
                        "preference vector has {} entries for {n} nodes",
                        v.len()
                    )));
                }
                if v.iter().any(|x| !x.is_finite() || *x < 0.0) {
                    return Err(Error::InvalidParameter(
                        "preference entries must be finite and nonnegative".into(),
                    ));
                }
                let mass: f64 = v.iter().sum();
                if (mass - 1.0).abs() > 1e-9 {
                    return Err(Error::InvalidParameter(alloc::format!(
                        "preference vector sums to {mass}, not 1"
                    )));
                }
                Ok(v.clone())
            }
        }
    }
}

/// Parameters shared by the spectral solvers.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralParams {
    /// PageRank damping factor, in `[0, 1)`.
    pub alpha: f64,
    /// Katz attenuation factor; `None` means `1/(2λ̂)`.
    pub beta: Option<f64>,
    /// Relative ℓ∞ change at which an iteration stops.
    pub tol: f64,
    pub max_iters: usize,
    pub preference: Preference,
    /// ℓ1-normalize the PageRank vector after solving.
    pub normalize_pagerank: bool,
}

impl Default for SpectralParams {
    fn default() -> Self {
        Self {
            alpha: 0.5,
            beta: None,
            tol: 1e-12,
            max_iters: 1_000_000,
            preference: Preference::Uniform,
            normalize_pagerank: false,
        }
    }
}

impl SpectralParams {
    pub fn with_alpha(mut self, alpha: f64) -> Self {
        self.alpha = alpha;
        self
    }

    pub fn with_beta(mut self, beta: f64) -> Self {
        self.beta = Some(beta);
        self
    }

    pub fn with_preference(mut self, preference: Vec<f64>) -> Self {
        self.preference = Preference::Explicit(preference);
        self
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Error::InvalidParameter("tol must be positive".into()));
        }
        if self.max_iters == 0 {
            return Err(Error::InvalidParameter("max_iters must be positive".into()));
        }
        Ok(())
    }
}

pub(crate) fn l1_norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v.abs()).sum()
}

pub(crate) fn scale(x: &mut [f64], factor: f64) {
    for v in x {
        *v *= factor;
    }
}

/// `‖next − prev‖∞ / ‖next‖∞`.
pub(crate) fn relative_change(prev: &[f64], next: &[f64]) -> f64 {
    let norm = next.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let diff = prev
        .iter()
        .zip(next)
        .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
    if norm == 0.0 {
        if diff == 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    } else {
        diff / norm
    }
}
