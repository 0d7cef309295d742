//! Dense Gaussian elimination for the small linear systems used by the
//! closed-form oracles and by cross-checks.

use alloc::vec::Vec;

use crate::{Error, Result};

/// Solves `M x = b` for a square, row-major `m` by partial pivoting.
pub fn solve(mut m: Vec<Vec<f64>>, mut b: Vec<f64>) -> Result<Vec<f64>> {
    let n = b.len();
    if m.len() != n || m.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidParameter("system is not square".into()));
    }
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
            .unwrap();
        if m[pivot][col] == 0.0 {
            return Err(Error::InvalidParameter("singular system".into()));
        }
        m.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            let f = m[row][col] / m[col][col];
            if f != 0.0 {
                for c in col..n {
                    m[row][c] -= f * m[col][c];
                }
                b[row] -= f * b[col];
            }
        }
    }
    let mut x = alloc::vec![0.0; n];
    for row in (0..n).rev() {
        let tail: f64 = (row + 1..n).map(|c| m[row][c] * x[c]).sum();
        x[row] = (b[row] - tail) / m[row][row];
    }
    Ok(x)
}
