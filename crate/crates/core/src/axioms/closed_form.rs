//! Closed-form scores on `S_{k,p}` and `D_{k,p}`.
//!
//! On `D_{k,p}` the Katz and PageRank values are expressed through the
//! clique-bridge score `ℓ`, which is obtained by solving a 3×3 linear
//! system in `(ℓ, c, r)` (clique bridge, clique, cycle bridge); dominant
//! and HITS values are expressed through the eigenvalues `λ` and `μ`.

use alloc::vec::Vec;
use core::ops::Range;

use super::generators::{Family, GeneratorSpec};
use super::values::{compare, evaluate, Value, Values};
use crate::exact::{self, frac, int, Rational};
use crate::spectral::{EigenEstimate, SpectralParams, KATZ_MARGIN};
use crate::{linalg, Error, Graph, Measure, Result};

/// Which nodes of a generated graph an entry describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    /// All clique nodes of `S`, the non-bridge clique nodes of `D`.
    Clique,
    /// All cycle nodes of `S`.
    Cycle,
    CliqueBridge,
    CycleBridge,
    /// The node of `D` at distance `d > 0` from the cycle bridge.
    CycleAt(usize),
}

impl Role {
    pub fn nodes(self, spec: &GeneratorSpec) -> Range<usize> {
        let (k, p) = (spec.k, spec.p);
        match (self, spec.family) {
            (Role::Clique, Family::S) => 0..k,
            (Role::Clique, Family::D) => 1..k,
            (Role::Cycle, _) => k..k + p,
            (Role::CliqueBridge, _) => 0..1,
            (Role::CycleBridge, _) => k..k + 1,
            (Role::CycleAt(d), _) => k + d..k + d + 1,
        }
    }
}

/// Predicted scores of one measure on one generated graph.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedForm {
    pub measure: Measure,
    pub spec: GeneratorSpec,
    /// Only ratios between entries are meaningful.
    pub proportional: bool,
    pub entries: Vec<(Role, Value)>,
}

impl ClosedForm {
    pub fn value(&self, role: Role) -> Option<&Value> {
        self.entries.iter().find(|(r, _)| *r == role).map(|(_, v)| v)
    }

    /// The prediction laid out per node.
    pub fn per_node(&self) -> Vec<Value> {
        let mut out = alloc::vec![Value::Real(f64::NAN); self.spec.num_nodes()];
        for (role, value) in &self.entries {
            for x in role.nodes(&self.spec) {
                out[x] = value.clone();
            }
        }
        out
    }
}

fn h(m: usize) -> Value {
    match exact::harmonic_number(m) {
        Ok(r) => Value::Exact(r),
        Err(_) => Value::Real(exact::harmonic_number_f64(m)),
    }
}

/// `a + H_m` with `a` exact.
fn plus_h(a: Rational, m: usize) -> Value {
    match h(m) {
        Value::Exact(hm) => exact::add(&a, &hm).map_or_else(
            |_| Value::Real(exact::to_f64(&a) + exact::harmonic_number_f64(m)),
            Value::Exact,
        ),
        Value::Real(x) => Value::Real(exact::to_f64(&a) + x),
    }
}

fn n(v: usize) -> i128 {
    v as i128
}

fn katz_beta(params: &SpectralParams, lambda: f64) -> Result<f64> {
    let beta = params.beta.unwrap_or(if lambda > 0.0 { 1.0 / (2.0 * lambda) } else { 0.5 });
    let limit = (1.0 - KATZ_MARGIN) / lambda;
    if lambda > 0.0 && beta >= limit {
        return Err(Error::Divergent { beta, limit });
    }
    Ok(beta)
}

/// Closed forms on `S_{k,p}` (`k, p ≥ 2`).
///
/// Katz's default attenuation factor is `1/(2(k−1))`, the value
/// `1/(2λ)` takes on `S_{k,p}` for `k ≥ 2`.
pub fn oracle_s(measure: Measure, k: usize, p: usize, params: &SpectralParams) -> Result<ClosedForm> {
    if k < 2 || p < 2 {
        return Err(Error::InvalidParameter(alloc::format!(
            "closed forms on S need k, p >= 2, got k = {k}, p = {p}"
        )));
    }
    let spec = GeneratorSpec::new(Family::S, k, p)?;
    let (kk, pp) = (n(k), n(p));
    let ex = |a: Rational, b: Rational| (Value::Exact(a), Value::Exact(b));
    let mut proportional = false;
    let (clique, cycle) = match measure {
        Measure::Degree => ex(int(kk - 1), int(1)),
        Measure::Harmonic => (Value::Exact(int(kk - 1)), h(p - 1)),
        Measure::Closeness => ex(frac(1, kk - 1), frac(2, pp * (pp - 1))),
        Measure::Lin => ex(frac(kk * kk, kk - 1), frac(2 * pp, pp - 1)),
        Measure::Betweenness => ex(int(0), frac((pp - 1) * (pp - 2), 2)),
        Measure::Katz => {
            let beta = katz_beta(params, (k - 1) as f64)?;
            (
                Value::Real(1.0 / (1.0 - (k - 1) as f64 * beta)),
                Value::Real(1.0 / (1.0 - beta)),
            )
        }
        // For k = 2 the clique is a 2-cycle and ties with the cycle.
        Measure::Dominant | Measure::Hits => {
            proportional = true;
            ex(int(1), int(if k == 2 { 1 } else { 0 }))
        }
        Measure::Seeley | Measure::PageRank | Measure::Salsa => {
            proportional = true;
            ex(int(1), int(1))
        }
        // Every predecessor has outdegree 1 on the cycle and `k − 1` in
        // the clique.
        Measure::Beta => ex(int(1), int(1)),
        Measure::IndegreeCo | Measure::IndegreeWeak => ex(int((kk - 1) * kk), int(pp)),
        Measure::BetaCo | Measure::BetaWeak => ex(int(kk), int(pp)),
    };
    Ok(ClosedForm {
        measure,
        spec,
        proportional,
        entries: alloc::vec![(Role::Clique, clique), (Role::Cycle, cycle)],
    })
}

fn powi(x: f64, n: i32) -> f64 {
    libm::pow(x, n as f64)
}

/// `(ℓ, c, r)` for Katz's index on `D_{k,p}`.
pub fn katz_system(k: usize, p: usize, beta: f64) -> Result<[f64; 3]> {
    let (k, pi) = (k as f64, p as i32);
    let m = alloc::vec![
        alloc::vec![1.0, -beta * (k - 1.0), -beta],
        alloc::vec![-beta, 1.0 - beta * (k - 2.0), 0.0],
        alloc::vec![-beta, 0.0, 1.0 - powi(beta, pi)],
    ];
    let b = alloc::vec![1.0, 1.0, 1.0 + beta * (1.0 - powi(beta, pi - 1)) / (1.0 - beta)];
    let x = linalg::solve(m, b)?;
    Ok([x[0], x[1], x[2]])
}

/// `(ℓ, c, r)` for PageRank on `D_{k,p}` with preference vector `𝟏`.
pub fn pagerank_system(k: usize, p: usize, alpha: f64) -> Result<[f64; 3]> {
    let (kf, pi) = (k as f64, p as i32);
    let m = alloc::vec![
        alloc::vec![1.0, -alpha, -alpha / 2.0],
        alloc::vec![-alpha / kf, 1.0 - alpha * (kf - 2.0) / (kf - 1.0), 0.0],
        alloc::vec![-alpha / kf, 0.0, 1.0 - powi(alpha, pi) / 2.0],
    ];
    let rhs = 1.0 - alpha;
    let b = alloc::vec![rhs, rhs, rhs + alpha * (1.0 - powi(alpha, pi - 1))];
    let x = linalg::solve(m, b)?;
    Ok([x[0], x[1], x[2]])
}

/// The quartic whose largest root is `μ` on `D_{k,p}`.
pub fn hits_quartic(k: usize, mu: f64) -> f64 {
    let k = k as f64;
    let c3 = k * k - 2.0 * k + 6.0;
    let c2 = 5.0 * k * k - 12.0 * k + 15.0;
    let c1 = 6.0 * k * k - 16.0 * k + 14.0;
    let c0 = k * k - 2.0 * k + 1.0;
    (((mu - c3) * mu + c2) * mu - c1) * mu + c0
}

/// Betweenness of the cycle node at any distance `d > 0` from the cycle
/// bridge of `D_{k,p}`: `k(p−2) + (p−1)(p−2)/2`.
pub fn betweenness_d_cycle(k: usize, p: usize) -> Rational {
    let (k, p) = (n(k), n(p));
    frac(2 * k * (p - 2) + (p - 1) * (p - 2), 2)
}

/// Closed forms on `D_{k,p}` (`k, p ≥ 3`). `eigen` supplies `λ`, `μ` and,
/// through `λ`, Katz's default attenuation factor.
pub fn oracle_d(
    measure: Measure,
    k: usize,
    p: usize,
    params: &SpectralParams,
    eigen: &EigenEstimate,
) -> Result<ClosedForm> {
    let spec = GeneratorSpec::new(Family::D, k, p)?;
    let (kk, pp) = (n(k), n(p));
    let tri = pp * (pp - 1) / 2;
    let mut proportional = true;
    let exact4 = |c: Rational, l: Rational, r: Rational, t: &dyn Fn(usize) -> Rational| {
        let mut v = alloc::vec![(Role::Clique, c.into()), (Role::CliqueBridge, l.into()), (Role::CycleBridge, r.into())];
        v.extend((1..p).map(|d| (Role::CycleAt(d), Value::Exact(t(d)))));
        v
    };
    let real4 = |c: f64, l: f64, r: f64, t: &dyn Fn(usize) -> f64| {
        let mut v = alloc::vec![(Role::Clique, c.into()), (Role::CliqueBridge, l.into()), (Role::CycleBridge, r.into())];
        v.extend((1..p).map(|d| (Role::CycleAt(d), Value::Real(t(d)))));
        v
    };
    let (lambda, mu) = (eigen.lambda, eigen.mu);
    let (kf, pf) = (k as f64, p as i32);
    let entries = match measure {
        Measure::Degree => {
            proportional = false;
            exact4(int(kk - 1), int(kk), int(2), &|_| int(1))
        }
        Measure::Harmonic => {
            proportional = false;
            let mut v = alloc::vec![
                (Role::Clique, plus_h(int(kk - 2), p + 1)),
                (Role::CliqueBridge, plus_h(int(kk - 1), p)),
                (Role::CycleBridge, plus_h(frac(kk + 1, 2), p - 1)),
            ];
            v.extend((1..p).map(|d| {
                let dd = n(d);
                let a = frac(1, dd + 1) + frac(kk - 1, dd + 2);
                (Role::CycleAt(d), plus_h(a, p - 1))
            }));
            v
        }
        Measure::Closeness | Measure::Lin => {
            proportional = false;
            let scale = if measure == Measure::Lin { (kk + pp) * (kk + pp) } else { 1 };
            let f = |den: i128| frac(scale, den);
            exact4(
                f(kk - 1 + 2 * pp + tri),
                f(kk - 1 + pp + tri),
                f(2 * kk - 1 + tri),
                &|d| f(kk * (n(d) + 2) - 1 + tri),
            )
        }
        Measure::Betweenness => {
            proportional = false;
            let cyc = (pp - 1) * (pp - 2) / 2;
            exact4(
                int(0),
                int(2 * pp * (kk - 1)),
                int(2 * kk * (pp - 1) + cyc),
                &|_| betweenness_d_cycle(k, p),
            )
        }
        Measure::Dominant => {
            let c = 1.0 / (lambda - kf + 1.0);
            real4(c, 1.0 + c, 1.0 + lambda, &|d| (1.0 + lambda) / powi(lambda, d as i32))
        }
        Measure::Seeley => exact4(int(kk - 1), int(kk), int(2), &|_| int(1)),
        Measure::Katz => {
            proportional = false;
            let beta = katz_beta(params, lambda)?;
            let [l, _, _] = katz_system(k, p, beta)?;
            let bp = 1.0 - powi(beta, pf);
            real4(
                (1.0 + beta * l) / (1.0 - beta * (kf - 2.0)),
                l,
                1.0 / (1.0 - beta) + beta / bp * l,
                &|d| 1.0 / (1.0 - beta) + powi(beta, d as i32 + 1) / bp * l,
            )
        }
        Measure::PageRank => {
            let a = params.alpha;
            let [l, _, _] = pagerank_system(k, p, a)?;
            let g = (a * l - kf) / (kf * (2.0 - powi(a, pf)));
            real4(
                (kf - 1.0) * (kf - a * kf + a * l) / (kf * (kf - 1.0 - a * (kf - 2.0))),
                l,
                2.0 + 2.0 * g,
                &|d| 1.0 + powi(a, d as i32) * g,
            )
        }
        Measure::Hits => {
            let c = mu * mu - mu * (kf + 1.0) + kf - 1.0;
            let l = (kf - 1.0) * (kf - 2.0) * (mu - 1.0);
            let r = ((mu - (kf * kf - 2.0 * kf + 4.0)) * mu + (3.0 * kf * kf - 7.0 * kf + 6.0)) * mu
                - (kf - 1.0) * (kf - 1.0);
            let t1 = (kf - 1.0) * (kf - 2.0);
            real4(c, l, r, &|d| if d == 1 { t1 } else { 0.0 })
        }
        Measure::Salsa => exact4(
            int((kk - 1) * (kk + 2)),
            int(kk * (kk + 2)),
            int(2 * (kk + 2)),
            &|d| if d == 1 { int(kk + 2) } else { int(kk * kk - kk + 4) },
        ),
        m => return Err(Error::NotTabulated(m)),
    };
    Ok(ClosedForm {
        measure,
        spec,
        proportional,
        entries,
    })
}

/// Outcome of comparing a closed form with the scores computed on the
/// generated graph.
#[derive(Clone, Debug, PartialEq)]
pub struct OracleCheck {
    pub measure: Measure,
    pub spec: GeneratorSpec,
    /// Every comparison was made, and held, in exact arithmetic.
    pub exact: bool,
    /// Largest deviation, relative to the largest predicted magnitude
    /// (after scaling both sides for proportional forms).
    pub max_error: f64,
}

impl OracleCheck {
    pub fn within(&self, tolerance: f64) -> bool {
        self.max_error <= tolerance
    }
}

/// Computes `form.measure` on the generated graph and compares.
pub fn check_oracle(form: &ClosedForm, params: &SpectralParams) -> Result<OracleCheck> {
    let g: Graph = form.spec.build();
    let computed = evaluate(&g, form.measure, params)?;
    let predicted = form.per_node();
    Ok(compare_with(form, &computed, &predicted))
}

fn compare_with(form: &ClosedForm, computed: &Values, predicted: &[Value]) -> OracleCheck {
    let reference = predicted
        .iter()
        .position(|v| v.to_f64() != 0.0)
        .unwrap_or(0);
    let all_exact = matches!(computed, Values::Exact(_)) && predicted.iter().all(Value::is_exact);
    if all_exact {
        let ok = (0..predicted.len()).all(|x| {
            let (Value::Exact(c), Value::Exact(o)) = (computed.get(x), predicted[x].clone()) else {
                unreachable!()
            };
            if form.proportional {
                let (Value::Exact(cr), Value::Exact(or)) = (computed.get(reference), predicted[reference].clone())
                else {
                    unreachable!()
                };
                c * or == o * cr
            } else {
                c == o
            }
        });
        if ok {
            return OracleCheck {
                measure: form.measure,
                spec: form.spec,
                exact: true,
                max_error: 0.0,
            };
        }
    }
    let c = computed.to_f64();
    let o: Vec<f64> = predicted.iter().map(Value::to_f64).collect();
    let (cs, os) = if form.proportional {
        (c[reference], o[reference])
    } else {
        (1.0, 1.0)
    };
    let scale = o.iter().fold(0.0f64, |m, v| m.max((v / os).abs()));
    let max_error = c
        .iter()
        .zip(&o)
        .map(|(a, b)| ((a / cs) - (b / os)).abs() / scale)
        .fold(0.0f64, |m, e| if e.is_nan() { f64::INFINITY } else { m.max(e) });
    OracleCheck {
        measure: form.measure,
        spec: form.spec,
        exact: all_exact && max_error == 0.0,
        max_error,
    }
}

/// Compares the clique-bridge and cycle-bridge scores of `D_{k,p}`.
pub fn compare_bridges(measure: Measure, k: usize, p: usize, params: &SpectralParams) -> Result<core::cmp::Ordering> {
    let spec = GeneratorSpec::new(Family::D, k, p)?;
    let values = evaluate(&spec.build(), measure, params)?;
    Ok(compare(&values.get(spec.clique_bridge()), &values.get(spec.cycle_bridge()), None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::estimate_dominant_eigenvalues;

    #[test]
    fn harmonic_on_s() {
        let f = oracle_s(Measure::Harmonic, 10, 10, &SpectralParams::default()).unwrap();
        assert_eq!(f.value(Role::Clique), Some(&Value::Exact(int(9))));
        assert_eq!(f.value(Role::Cycle), Some(&Value::Exact(exact::harmonic_number(9).unwrap())));
    }

    #[test]
    fn betweenness_on_d() {
        let e = EigenEstimate { lambda: 0.0, mu: 0.0, residual: 0.0 };
        let f = oracle_d(Measure::Betweenness, 5, 7, &SpectralParams::default(), &e).unwrap();
        assert_eq!(f.value(Role::Clique), Some(&Value::Exact(int(0))));
        assert_eq!(f.value(Role::CliqueBridge), Some(&Value::Exact(int(56))));
        assert_eq!(f.value(Role::CycleBridge), Some(&Value::Exact(int(75))));
    }

    #[test]
    fn cycle_betweenness_has_a_single_k_term() {
        // A variant with 2k(p−2) in front of the cycle term is sometimes
        // quoted; brute force agrees with k(p−2) for every d.
        for (k, p) in [(3, 3), (4, 6), (7, 5)] {
            let b = crate::path::betweenness_bruteforce(&super::super::gen_d(k, p).unwrap()).unwrap();
            for d in 1..p {
                assert_eq!(b[k + d], betweenness_d_cycle(k, p));
            }
            let quoted = int(n(2 * k * (p - 2))) + frac(n((p - 1) * (p - 2)), 2);
            assert_ne!(b[k + 1], quoted);
        }
    }

    #[test]
    fn seeley_on_d_is_proportional_to_degree() {
        let e = EigenEstimate { lambda: 0.0, mu: 0.0, residual: 0.0 };
        let f = oracle_d(Measure::Seeley, 4, 6, &SpectralParams::default(), &e).unwrap();
        assert!(f.proportional);
        let vals: Vec<f64> = [Role::Clique, Role::CliqueBridge, Role::CycleBridge, Role::CycleAt(3)]
            .iter()
            .map(|r| f.value(*r).unwrap().to_f64())
            .collect();
        assert_eq!(vals, [3.0, 4.0, 2.0, 1.0]);
    }

    #[test]
    fn spectral_forms_match_small_cases() {
        let params = SpectralParams::default();
        for (k, p) in [(3, 3), (5, 4), (6, 9)] {
            let g = super::super::gen_d(k, p).unwrap();
            let e = estimate_dominant_eigenvalues(&g, &params).unwrap();
            for m in [Measure::Dominant, Measure::Katz, Measure::PageRank, Measure::Hits, Measure::Seeley] {
                let f = oracle_d(m, k, p, &params, &e).unwrap();
                let check = check_oracle(&f, &params).unwrap();
                assert!(check.within(1e-8), "{m} {k} {p}: {}", check.max_error);
            }
            assert!(hits_quartic(k, e.mu).abs() < 1e-6 * powi(e.mu, 4));
        }
    }

    #[test]
    fn unsupported_inputs() {
        let e = EigenEstimate { lambda: 0.0, mu: 0.0, residual: 0.0 };
        assert!(oracle_s(Measure::Degree, 1, 5, &SpectralParams::default()).is_err());
        assert_eq!(
            oracle_d(Measure::Beta, 3, 3, &SpectralParams::default(), &e),
            Err(Error::NotTabulated(Measure::Beta))
        );
    }
}
