use alloc::vec::Vec;

use super::{l1_norm, relative_change, scale, SpectralParams};
use crate::normalize::{left_multiply, RowNormalized};
use crate::{Error, Graph, Measure, ParamEcho, Result, ScoreVector};

/// Iterations without convergence after which the lazy operator is used
/// even if no period-2 oscillation was seen.
const LAZY_AFTER: usize = 5_000;
/// Below this ℓ1 mass an unnormalized iterate is treated as vanished.
const VANISHED_MASS: f64 = 1e-200;

pub(crate) struct Fixed {
    pub vector: Vec<f64>,
    pub iterations: usize,
    pub residual: f64,
    /// `‖x M‖₁` for the final unit-mass iterate `x` (renormalized runs only).
    pub growth: f64,
}

pub(crate) enum Outcome {
    Converged(Fixed),
    Vanished { iterations: usize },
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    /// Rescale every iterate to unit ℓ1 norm; the lazy operator is `M + I`.
    Renormalize,
    /// Keep the raw iterates; the lazy operator is `(M + I)/2`.
    Raw,
}

/// Power iteration `x ← x M` from `start`.
///
/// `step(x, y)` must write `y = x M` for a nonnegative `M`.
pub(crate) fn power_iterate<F>(
    start: Vec<f64>,
    mut step: F,
    mode: Mode,
    lazy_allowed: bool,
    params: &SpectralParams,
) -> Result<Outcome>
where
    F: FnMut(&[f64], &mut [f64]),
{
    params.validate()?;
    let n = start.len();
    let mut x = start;
    let mut y = alloc::vec![0.0; n];
    let mut before: Option<Vec<f64>> = None;
    let mut lazy = false;
    let mut residual = f64::INFINITY;

    for it in 1..=params.max_iters {
        step(&x, &mut y);
        if lazy {
            for (yi, xi) in y.iter_mut().zip(&x) {
                *yi += xi;
            }
        }
        let mass = l1_norm(&y);
        let growth = match mode {
            Mode::Renormalize => {
                if mass == 0.0 {
                    return Ok(Outcome::Vanished { iterations: it });
                }
                scale(&mut y, 1.0 / mass);
                if lazy {
                    mass - 1.0
                } else {
                    mass
                }
            }
            Mode::Raw => {
                if mass <= VANISHED_MASS {
                    return Ok(Outcome::Vanished { iterations: it });
                }
                if lazy {
                    scale(&mut y, 0.5);
                }
                f64::NAN
            }
        };
        residual = relative_change(&x, &y);
        if residual < params.tol {
            return Ok(Outcome::Converged(Fixed {
                vector: y,
                iterations: it,
                residual,
                growth,
            }));
        }
        if lazy_allowed && !lazy && it > n + 2 {
            let oscillating = before
                .as_ref()
                .is_some_and(|b| relative_change(b, &y) < params.tol.max(1e-8));
            if oscillating || it >= LAZY_AFTER {
                lazy = true;
            }
        }
        match before {
            Some(ref mut b) => b.copy_from_slice(&x),
            None => before = Some(x.clone()),
        }
        core::mem::swap(&mut x, &mut y);
    }
    Err(Error::NoConvergence {
        iterations: params.max_iters,
        residual,
    })
}

pub(crate) fn uniform(n: usize) -> Vec<f64> {
    alloc::vec![1.0 / n as f64; n]
}

pub(crate) fn solve_dominant(g: &Graph, params: &SpectralParams) -> Result<Outcome> {
    power_iterate(
        uniform(g.num_nodes()),
        |x, y| left_multiply(g, x, y),
        Mode::Renormalize,
        true,
        params,
    )
}

/// Left dominant eigenvector of the adjacency matrix, as the limit of
/// `x ← x A / ‖x A‖₁` from the uniform vector. ℓ1-normalized.
///
/// A vanishing iterate (nilpotent `A`) is reported as
/// [`Error::DegenerateSpectrum`].
pub fn dominant_eigenvector(g: &Graph, params: &SpectralParams) -> Result<ScoreVector> {
    if g.num_nodes() == 0 {
        return Err(Error::InvalidParameter("graph has no nodes".into()));
    }
    match solve_dominant(g, params)? {
        Outcome::Converged(fixed) => Ok(ScoreVector {
            measure: Measure::Dominant,
            params: ParamEcho {
                tol: Some(params.tol),
                iterations: Some(fixed.iterations),
                residual: Some(fixed.residual),
                ..ParamEcho::default()
            },
            scores: fixed.vector,
            normalized: true,
            degenerate: false,
        }),
        Outcome::Vanished { iterations } => Err(Error::DegenerateSpectrum { iterations }),
    }
}

/// Seeley's index: the limit of `x ← x Ā` from the uniform vector,
/// reported ℓ1-normalized.
///
/// When the whole mass drains into nodes without successors the limit is
/// zero; the result is then the zero vector flagged as degenerate.
pub fn seeley(g: &Graph, params: &SpectralParams) -> Result<ScoreVector> {
    let n = g.num_nodes();
    let op = RowNormalized::new(g);
    let outcome = if n == 0 {
        Outcome::Vanished { iterations: 0 }
    } else {
        power_iterate(uniform(n), |x, y| op.apply(x, y), Mode::Raw, true, params)?
    };
    let mut echo = ParamEcho {
        tol: Some(params.tol),
        ..ParamEcho::default()
    };
    Ok(match outcome {
        Outcome::Converged(mut fixed) => {
            let mass = l1_norm(&fixed.vector);
            scale(&mut fixed.vector, 1.0 / mass);
            echo.iterations = Some(fixed.iterations);
            echo.residual = Some(fixed.residual);
            ScoreVector {
                measure: Measure::Seeley,
                params: echo,
                scores: fixed.vector,
                normalized: true,
                degenerate: false,
            }
        }
        Outcome::Vanished { iterations } => {
            echo.iterations = Some(iterations);
            ScoreVector {
                measure: Measure::Seeley,
                params: echo,
                scores: alloc::vec![0.0; n],
                normalized: false,
                degenerate: true,
            }
        }
    })
}
