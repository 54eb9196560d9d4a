use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::ZPoly;
use crate::{Error, Result};

/// The `(m+n) x (m+n)` Sylvester matrix of `f` (degree `m`) and `g`
/// (degree `n`): `n` shifted rows of `f` followed by `m` shifted rows of `g`,
/// coefficients in descending order.
pub fn sylvester_matrix(f: &ZPoly, g: &ZPoly) -> Vec<Vec<BigInt>> {
    let m = f.degree().unwrap_or(0);
    let n = g.degree().unwrap_or(0);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (poly, shifts) in [(f, n), (g, m)] {
        for s in 0..shifts {
            let mut row = vec![BigInt::zero(); size];
            for (k, c) in poly.coeffs().iter().rev().enumerate() {
                row[s + k] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// Determinant by fraction-free (Bareiss) elimination. Pivots are taken from
/// the first row at or below the diagonal with a nonzero entry.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, bottom) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            for j in k + 1..n {
                let v = &row[j] * &pivot_row[k] - &row[k] * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Resultant as the determinant of [`sylvester_matrix`].
pub fn resultant(f: &ZPoly, g: &ZPoly) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::Precondition("resultant of the zero polynomial".into()));
    }
    Ok(bareiss_determinant(sylvester_matrix(f, g)))
}
