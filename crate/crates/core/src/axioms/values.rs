//! Scores as compared by the axiom checks: exact rationals where the
//! measure is rational-valued, floating point otherwise.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::exact::{self, Rational};
use crate::spectral::SpectralParams;
use crate::{geometric, naive, path, spectral, Error, Graph, Measure, Result};

/// Relative difference below which two floating-point scores tie.
pub const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Exact(Rational),
    Real(f64),
}

impl Value {
    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(r) => exact::to_f64(r),
            Value::Real(x) => *x,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Value::Exact(_))
    }
}

impl From<Rational> for Value {
    fn from(r: Rational) -> Self {
        Value::Exact(r)
    }
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Real(x)
    }
}

/// Exact comparison when both sides are exact; otherwise a tie is declared
/// when `|a − b| ≤ TIE_TOLERANCE · scale`, where `scale` defaults to
/// `max(|a|, |b|)`.
pub fn compare(a: &Value, b: &Value, scale: Option<f64>) -> Ordering {
    if let (Value::Exact(x), Value::Exact(y)) = (a, b) {
        return x.cmp(y);
    }
    let (x, y) = (a.to_f64(), b.to_f64());
    let scale = scale.unwrap_or(x.abs().max(y.abs()));
    if (x - y).abs() <= TIE_TOLERANCE * scale {
        Ordering::Equal
    } else if x < y {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Per-node scores of one measure.
#[derive(Clone, Debug, PartialEq)]
pub enum Values {
    Exact(Vec<Rational>),
    Real(Vec<f64>),
}

impl Values {
    pub fn len(&self) -> usize {
        match self {
            Values::Exact(v) => v.len(),
            Values::Real(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, x: usize) -> Value {
        match self {
            Values::Exact(v) => Value::Exact(v[x]),
            Values::Real(v) => Value::Real(v[x]),
        }
    }

    pub fn to_f64(&self) -> Vec<f64> {
        match self {
            Values::Exact(v) => v.iter().map(exact::to_f64).collect(),
            Values::Real(v) => v.clone(),
        }
    }

    /// `max_x |score(x)|`.
    pub fn scale(&self) -> f64 {
        self.to_f64().iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// Exact scores of the rational-valued measures; `None` for the others.
///
/// Overflow of the 128-bit rationals surfaces as [`Error::Overflow`].
pub fn compute_exact(g: &Graph, measure: Measure) -> Option<Result<Vec<Rational>>> {
    Some(match measure {
        Measure::Degree => Ok(geometric::exact_scores::indegree(g)),
        Measure::Harmonic => geometric::exact_scores::harmonic(g),
        Measure::Closeness => Ok(geometric::exact_scores::closeness(g)),
        Measure::Lin => Ok(geometric::exact_scores::lin(g)),
        Measure::Betweenness => path::betweenness_exact(g),
        Measure::Salsa => Ok(spectral::salsa_exact(g)),
        Measure::Beta => naive::exact_scores::beta_measure(g),
        m => {
            let (d, s) = m.naive_factors()?;
            naive::exact_scores::naive_product(g, d, s)
        }
    })
}

/// Scores of `measure` on `g`, exact when possible.
///
/// Katz's attenuation factor defaults to `1/(2λ̂)` of `g` itself.
pub fn evaluate(g: &Graph, measure: Measure, params: &SpectralParams) -> Result<Values> {
    match compute_exact(g, measure) {
        Some(Ok(v)) => return Ok(Values::Exact(v)),
        Some(Err(Error::Overflow)) | None => {}
        Some(Err(e)) => return Err(e),
    }
    Ok(Values::Real(crate::compute(g, measure, params)?.scores))
}

impl core::fmt::Display for Value {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Value::Exact(r) => write!(f, "{r}"),
            Value::Real(x) => write!(f, "{x:e}"),
        }
    }
}
