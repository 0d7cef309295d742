use alloc::vec::Vec;

use super::power::{power_iterate, uniform, Mode, Outcome};
use super::{l1_norm, scale, SpectralParams};
use crate::normalize::{left_multiply, left_multiply_transpose};
use crate::{Graph, Measure, ParamEcho, Result, ScoreVector};

pub(crate) fn solve_hits(g: &Graph, params: &SpectralParams) -> Result<Outcome> {
    let mut h: Vec<f64> = alloc::vec![0.0; g.num_nodes()];
    // `AᵀA` is positive semidefinite, so there is no oscillation to damp.
    power_iterate(
        uniform(g.num_nodes()),
        |a, next| {
            left_multiply_transpose(g, a, &mut h);
            left_multiply(g, &h, next);
        },
        Mode::Renormalize,
        false,
        params,
    )
}

/// HITS authority and hub scores, from `h ← a Aᵀ`, `a ← h A` with
/// `a₀ = 𝟏`. Both are ℓ1-normalized.
///
/// A graph without arcs yields zero vectors flagged as degenerate.
pub fn hits(g: &Graph, params: &SpectralParams) -> Result<(ScoreVector, ScoreVector)> {
    let n = g.num_nodes();
    let outcome = if n == 0 {
        Outcome::Vanished { iterations: 0 }
    } else {
        solve_hits(g, params)?
    };
    let (authority, hub, echo, degenerate) = match outcome {
        Outcome::Converged(fixed) => {
            let mut hub = alloc::vec![0.0; n];
            left_multiply_transpose(g, &fixed.vector, &mut hub);
            let mass = l1_norm(&hub);
            scale(&mut hub, 1.0 / mass);
            let echo = ParamEcho {
                tol: Some(params.tol),
                iterations: Some(fixed.iterations),
                residual: Some(fixed.residual),
                ..ParamEcho::default()
            };
            (fixed.vector, hub, echo, false)
        }
        Outcome::Vanished { iterations } => {
            let echo = ParamEcho {
                tol: Some(params.tol),
                iterations: Some(iterations),
                ..ParamEcho::default()
            };
            (alloc::vec![0.0; n], alloc::vec![0.0; n], echo, true)
        }
    };
    let wrap = |scores| ScoreVector {
        measure: Measure::Hits,
        params: echo.clone(),
        scores,
        normalized: !degenerate,
        degenerate,
    };
    Ok((wrap(authority), wrap(hub)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::gen_s;

    #[test]
    fn two_arcs_into_one_node() {
        let g = Graph::from_arcs(3, [(0, 1), (2, 1)]).unwrap();
        let (a, h) = hits(&g, &SpectralParams::default()).unwrap();
        assert_eq!(a.scores, [0.0, 1.0, 0.0]);
        assert_eq!(h.scores, [0.5, 0.0, 0.5]);
    }

    #[test]
    fn clique_dominates_the_cycle() {
        let (k, p) = (4, 6);
        let (a, _) = hits(&gen_s(k, p).unwrap(), &SpectralParams::default()).unwrap();
        for x in 0..k {
            assert!((a.get(x) - 0.25).abs() < 1e-12);
        }
        for x in k..k + p {
            assert!(a.get(x) < 1e-12);
        }
    }

    #[test]
    fn no_arcs_is_degenerate() {
        let (a, h) = hits(&Graph::empty(3), &SpectralParams::default()).unwrap();
        assert!(a.degenerate && h.degenerate);
        assert_eq!(a.scores, [0.0; 3]);
    }
}
