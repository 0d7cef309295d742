use super::hits::solve_hits;
use super::power::{solve_dominant, Outcome};
use super::SpectralParams;
use crate::components::strongly_connected_components;
use crate::{Graph, Result};

/// Power-method estimates of the dominant eigenvalues of `A` and `AᵀA`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EigenEstimate {
    /// Spectral radius of `A`.
    pub lambda: f64,
    /// Spectral radius of `AᵀA`, the square of the largest singular value.
    pub mu: f64,
    /// Largest final relative ℓ∞ change of the two iterations.
    pub residual: f64,
}

/// Estimates `λ(A)` and `μ(AᵀA)` from the growth `‖x M‖₁` of converged
/// unit-mass iterates. A vanishing iterate gives 0.
pub fn estimate_dominant_eigenvalues(g: &Graph, params: &SpectralParams) -> Result<EigenEstimate> {
    if g.num_nodes() == 0 {
        return Ok(EigenEstimate {
            lambda: 0.0,
            mu: 0.0,
            residual: 0.0,
        });
    }
    let (lambda, r1) = estimate_lambda(g, params)?;
    let (mu, r2) = match solve_hits(g, params)? {
        Outcome::Converged(f) => (f.growth, f.residual),
        Outcome::Vanished { .. } => (0.0, 0.0),
    };
    Ok(EigenEstimate {
        lambda,
        mu,
        residual: r1.max(r2),
    })
}

fn irreducible_radius(g: &Graph, params: &SpectralParams) -> Result<(f64, f64)> {
    // A strongly connected graph with as many arcs as nodes is a cycle.
    if g.num_arcs() == g.num_nodes() {
        return Ok((1.0, 0.0));
    }
    Ok(match solve_dominant(g, params)? {
        Outcome::Converged(f) => (f.growth, f.residual),
        Outcome::Vanished { .. } => (0.0, 0.0),
    })
}

/// `(λ̂, residual)`: the largest spectral radius of a strong component.
///
/// Iterating on the whole matrix would converge only polynomially when two
/// components of maximal radius are joined by a path (a Jordan block).
pub(crate) fn estimate_lambda(g: &Graph, params: &SpectralParams) -> Result<(f64, f64)> {
    let scc = strongly_connected_components(g);
    if scc.num_components() == 1 && g.num_nodes() > 0 {
        return irreducible_radius(g, params);
    }
    let mut best = (0.0f64, 0.0f64);
    for c in 0..scc.num_components() {
        let members = scc.members(c);
        let (sub, _) = g.induced_subgraph(members)?;
        if sub.num_arcs() == 0 {
            continue;
        }
        let (lambda, residual) = irreducible_radius(&sub, params)?;
        best = (best.0.max(lambda), best.1.max(residual));
    }
    Ok(best)
}
