//! Katz's index and PageRank: attenuated path sums, solved by Jacobi
//! iteration of their "one summand out" fixed-point equations.

use alloc::vec::Vec;

use super::eigen::estimate_lambda;
use super::{l1_norm, relative_change, scale, SpectralParams, KATZ_MARGIN};
use crate::normalize::{left_multiply, RowNormalized};
use crate::{Error, Graph, Measure, ParamEcho, Result, ScoreVector};

/// Iterates `x ← c + x M` from `start` until the relative change is below `tol`.
fn jacobi<F>(start: Vec<f64>, constant: &[f64], mut step: F, params: &SpectralParams) -> Result<(Vec<f64>, usize, f64)>
where
    F: FnMut(&[f64], &mut [f64]),
{
    params.validate()?;
    let mut x = start;
    let mut y = alloc::vec![0.0; x.len()];
    let mut residual = f64::INFINITY;
    for it in 1..=params.max_iters {
        step(&x, &mut y);
        for (yi, ci) in y.iter_mut().zip(constant) {
            *yi += ci;
        }
        residual = relative_change(&x, &y);
        if !residual.is_finite() && y.iter().any(|v| !v.is_finite()) {
            break;
        }
        core::mem::swap(&mut x, &mut y);
        if residual < params.tol {
            return Ok((x, it, residual));
        }
    }
    Err(Error::NoConvergence {
        iterations: params.max_iters,
        residual,
    })
}

/// The attenuation factor Katz's index would use on `g`: `params.beta`, or
/// `1/(2λ̂)` by default (`1/2` when `λ̂ = 0`). Returns `(β, λ̂)`.
pub(crate) fn katz_beta(g: &Graph, params: &SpectralParams) -> Result<(f64, f64)> {
    let lambda = estimate_lambda(g, params)?.0;
    let beta = match params.beta {
        Some(b) => b,
        None if lambda > 0.0 => 1.0 / (2.0 * lambda),
        None => 0.5,
    };
    if !beta.is_finite() || beta <= 0.0 {
        return Err(Error::InvalidParameter(alloc::format!(
            "attenuation factor must be positive, got {beta}"
        )));
    }
    if lambda > 0.0 {
        let limit = (1.0 - KATZ_MARGIN) / lambda;
        if beta >= limit {
            return Err(Error::Divergent { beta, limit });
        }
    }
    Ok((beta, lambda))
}

/// Katz's index `k = 𝟏 Σᵢ βⁱ Aⁱ`, the fixed point of `k = 𝟏 + β k A`.
pub fn katz(g: &Graph, params: &SpectralParams) -> Result<ScoreVector> {
    let n = g.num_nodes();
    let (beta, _) = katz_beta(g, params)?;
    let ones = alloc::vec![1.0; n];
    let (scores, iterations, residual) = jacobi(
        ones.clone(),
        &ones,
        |x, y| {
            left_multiply(g, x, y);
            scale(y, beta);
        },
        params,
    )?;
    Ok(ScoreVector {
        measure: Measure::Katz,
        params: ParamEcho {
            beta: Some(beta),
            tol: Some(params.tol),
            iterations: Some(iterations),
            residual: Some(residual),
            ..ParamEcho::default()
        },
        scores,
        normalized: false,
        degenerate: false,
    })
}

/// PageRank `p = α p Ā + (1 − α) v` with null rows left unpatched, so
/// `‖p‖₁ < 1` whenever mass reaches a node without successors.
///
/// With `normalize_pagerank` the solution is rescaled to unit ℓ1 norm.
pub fn pagerank(g: &Graph, params: &SpectralParams) -> Result<ScoreVector> {
    let alpha = params.alpha;
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::InvalidParameter(alloc::format!(
            "damping factor must lie in [0, 1), got {alpha}"
        )));
    }
    let n = g.num_nodes();
    let v = params.preference.resolve(n)?;
    let constant: Vec<f64> = v.iter().map(|x| (1.0 - alpha) * x).collect();
    let op = RowNormalized::new(g);
    let (mut scores, iterations, residual) = jacobi(
        v,
        &constant,
        |x, y| {
            op.apply(x, y);
            scale(y, alpha);
        },
        params,
    )?;
    let mut normalized = false;
    if params.normalize_pagerank {
        let mass = l1_norm(&scores);
        if mass > 0.0 {
            scale(&mut scores, 1.0 / mass);
            normalized = true;
        }
    }
    Ok(ScoreVector {
        measure: Measure::PageRank,
        params: ParamEcho {
            alpha: Some(alpha),
            tol: Some(params.tol),
            iterations: Some(iterations),
            residual: Some(residual),
            ..ParamEcho::default()
        },
        scores,
        normalized,
        degenerate: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::gen_s;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12 * b.abs().max(1.0)
    }

    #[test]
    fn katz_on_clique_plus_cycle() {
        let (k, p) = (5, 4);
        let beta = 0.1;
        let s = katz(&gen_s(k, p).unwrap(), &SpectralParams::default().with_beta(beta)).unwrap();
        assert!(close(s.get(0), 1.0 / (1.0 - (k - 1) as f64 * beta)));
        assert!(close(s.get(k), 1.0 / (1.0 - beta)));
    }

    #[test]
    fn tiny_beta_leaves_only_the_empty_path() {
        let s = katz(&gen_s(4, 4).unwrap(), &SpectralParams::default().with_beta(1e-14)).unwrap();
        assert!(s.scores.iter().all(|&v| (v - 1.0).abs() < 1e-12));
    }

    #[test]
    fn katz_rejects_beta_beyond_the_spectral_radius() {
        let g = gen_s(4, 4).unwrap();
        let err = katz(&g, &SpectralParams::default().with_beta(1.0 / 3.0)).unwrap_err();
        assert!(matches!(err, Error::Divergent { .. }));
    }

    #[test]
    fn pagerank_two_node_fixture() {
        // Arc 1 → 0 and preference concentrated on node 1.
        let g = Graph::from_arcs(2, [(1, 0)]).unwrap();
        for alpha in [0.25, 0.5, 0.75] {
            let params = SpectralParams::default().with_alpha(alpha).with_preference(alloc::vec![0.0, 1.0]);
            let before = pagerank(&g, &params).unwrap();
            assert!(close(before.get(0), alpha * (1.0 - alpha)));
            assert!(close(before.get(1), 1.0 - alpha));
            let after = pagerank(&g.with_arc(0, 1).unwrap(), &params).unwrap();
            assert!(close(after.get(0), alpha / (1.0 + alpha)));
            assert!(close(after.get(1), 1.0 / (1.0 + alpha)));
        }
    }

    #[test]
    fn zero_damping_returns_the_preference() {
        let g = gen_s(3, 3).unwrap();
        let s = pagerank(&g, &SpectralParams::default().with_alpha(0.0)).unwrap();
        assert!(s.scores.iter().all(|&v| close(v, 1.0 / 6.0)));
    }

    #[test]
    fn pagerank_rejects_bad_parameters() {
        let g = gen_s(3, 3).unwrap();
        assert!(pagerank(&g, &SpectralParams::default().with_alpha(1.0)).is_err());
        assert!(pagerank(&g, &SpectralParams::default().with_preference(alloc::vec![1.0; 6])).is_err());
    }
}
