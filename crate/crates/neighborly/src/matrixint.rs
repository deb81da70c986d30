//! Exact integer determinants via fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::OmError;

/// Exact determinant of a square integer matrix.
pub fn det_exact(m: &[Vec<i64>]) -> Result<BigInt, OmError> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(OmError::NonSquareMatrix {
            rows: n,
            cols: m.first().map_or(0, |r| r.len()),
        });
    }
    let mut work: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    Ok(det_bareiss(&mut work))
}

/// Fraction-free elimination; consumes the workspace. All intermediate
/// divisions are exact, so the result is the true integer determinant.
pub fn det_bareiss(a: &mut [Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign_flip = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

/// Sign of the determinant without building the full product when possible.
pub fn det_sign(m: &[Vec<i64>]) -> Result<crate::sign::Sign, OmError> {
    let d = det_exact(m)?;
    Ok(if d.is_zero() {
        crate::sign::Sign::Zero
    } else if d.is_positive() {
        crate::sign::Sign::Plus
    } else {
        crate::sign::Sign::Minus
    })
}
