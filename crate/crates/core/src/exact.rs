//! Exact rational arithmetic for the measures whose values are rational.
//!
//! Values are `Ratio<i128>`; every operation is checked and overflow
//! surfaces as [`Error::Overflow`] instead of wrapping.

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, ToPrimitive};

use crate::{Error, Result};

pub type Rational = Ratio<i128>;

pub fn int(v: i128) -> Rational {
    Rational::from_integer(v)
}

pub fn frac(num: i128, den: i128) -> Rational {
    Rational::new(num, den)
}

pub fn add(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub fn sub(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub fn mul(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub fn div(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_div(b).ok_or(Error::Overflow)
}

pub fn to_f64(r: &Rational) -> f64 {
    // `Ratio::to_f64` rounds correctly even when numerator and
    // denominator are beyond 2^53.
    r.to_f64().unwrap_or(f64::NAN)
}

/// `H_m = 1 + 1/2 + … + 1/m`; `H_0 = 0`.
pub fn harmonic_number(m: usize) -> Result<Rational> {
    let mut h = int(0);
    for i in 1..=m {
        h = add(&h, &frac(1, i as i128))?;
    }
    Ok(h)
}

/// `H_m` in floating point, summed from the largest term.
pub fn harmonic_number_f64(m: usize) -> f64 {
    (1..=m).map(|i| 1.0 / i as f64).sum()
}
