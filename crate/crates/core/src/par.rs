//! Per-node maps that run on rayon when the `parallel` feature is on.
//!
//! Every element is computed independently of the others, so the output is
//! bit-identical with and without the feature.

use alloc::vec::Vec;

#[cfg(feature = "parallel")]
pub(crate) fn map_nodes<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_nodes<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

/// `out[i] = f(i)` for every index.
#[cfg(feature = "parallel")]
pub(crate) fn fill<F>(out: &mut [f64], f: F)
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    use rayon::prelude::*;
    out.par_iter_mut().enumerate().for_each(|(i, o)| *o = f(i));
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn fill<F>(out: &mut [f64], f: F)
where
    F: Fn(usize) -> f64,
{
    for (i, o) in out.iter_mut().enumerate() {
        *o = f(i);
    }
}
