use alloc::vec::Vec;

use super::power::{power_iterate, uniform, Mode, Outcome};
use super::SpectralParams;
use crate::exact::{self, Rational};
use crate::normalize::{ColumnNormalized, RowNormalized};
use crate::{Graph, Measure, ParamEcho, Result, ScoreVector};

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Component labels of the cocitation graph: two nodes are joined when
/// they share a predecessor.
fn cocitation_roots(g: &Graph) -> Vec<usize> {
    let n = g.num_nodes();
    let mut parent: Vec<usize> = (0..n).collect();
    for u in 0..n {
        let succ = g.successors(u);
        if let Some((&first, rest)) = succ.split_first() {
            for &v in rest {
                let (a, b) = (find(&mut parent, first), find(&mut parent, v));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    (0..n).map(|x| find(&mut parent, x)).collect()
}

/// Per node: `(d⁻(x), Σ_C d⁻, |C|)` for the cocitation component `C` of `x`.
fn component_sums(g: &Graph) -> Vec<(usize, usize, usize)> {
    let n = g.num_nodes();
    let roots = cocitation_roots(g);
    let mut indeg_sum = alloc::vec![0usize; n];
    let mut size = alloc::vec![0usize; n];
    for x in 0..n {
        indeg_sum[roots[x]] += g.indegree(x);
        size[roots[x]] += 1;
    }
    (0..n)
        .map(|x| (g.indegree(x), indeg_sum[roots[x]], size[roots[x]]))
        .collect()
}

/// SALSA by its closed rule: `d⁻(x) / Σ_{z∈C} d⁻(z) · |C| / n`, where `C`
/// is the cocitation component of `x`; 0 when `d⁻(x) = 0`.
pub fn salsa(g: &Graph) -> ScoreVector {
    let n = g.num_nodes() as f64;
    let scores = component_sums(g)
        .into_iter()
        .map(|(d, sum, size)| if d == 0 { 0.0 } else { d as f64 / sum as f64 * size as f64 / n })
        .collect();
    ScoreVector::raw(Measure::Salsa, scores)
}

/// [`salsa`] in exact arithmetic.
pub fn salsa_exact(g: &Graph) -> Vec<Rational> {
    let n = g.num_nodes() as i128;
    component_sums(g)
        .into_iter()
        .map(|(d, sum, size)| {
            if d == 0 {
                exact::int(0)
            } else {
                exact::frac(d as i128 * size as i128, sum as i128 * n)
            }
        })
        .collect()
}

/// SALSA by iterating `h ← a overline(Aᵀ)`, `a ← h Ā`. The iteration
/// starts from `𝟏/n` rather than `𝟏`, so the limit coincides with the
/// closed rule of [`salsa`] without rescaling.
pub fn salsa_iterative(g: &Graph, params: &SpectralParams) -> Result<ScoreVector> {
    let n = g.num_nodes();
    let back = ColumnNormalized::new(g);
    let forth = RowNormalized::new(g);
    let mut h = alloc::vec![0.0; n];
    let outcome = if n == 0 {
        Outcome::Vanished { iterations: 0 }
    } else {
        power_iterate(
            uniform(n),
            |a, next| {
                back.apply(a, &mut h);
                forth.apply(&h, next);
            },
            Mode::Raw,
            false,
            params,
        )?
    };
    let mut echo = ParamEcho {
        tol: Some(params.tol),
        ..ParamEcho::default()
    };
    Ok(match outcome {
        Outcome::Converged(fixed) => {
            echo.iterations = Some(fixed.iterations);
            echo.residual = Some(fixed.residual);
            ScoreVector {
                measure: Measure::Salsa,
                params: echo,
                scores: fixed.vector,
                normalized: false,
                degenerate: false,
            }
        }
        Outcome::Vanished { iterations } => {
            echo.iterations = Some(iterations);
            ScoreVector {
                measure: Measure::Salsa,
                params: echo,
                scores: alloc::vec![0.0; n],
                normalized: false,
                degenerate: true,
            }
        }
    })
}
