//! Exact determinants and the brute-force forest count.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::graph::{forest_matrix, BicirculantSpec};
use crate::matrix::BigMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinearError {
    #[error("determinant of a non-square {rows}x{cols} matrix")]
    NotSquare { rows: usize, cols: usize },
}

/// Number of rooted spanning forests; always at least 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ForestCount(BigUint);

impl ForestCount {
    pub fn new(value: BigUint) -> Self {
        ForestCount(value)
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from(self.0.clone())
    }
}

impl fmt::Display for ForestCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u64> for ForestCount {
    fn from(v: u64) -> Self {
        ForestCount(BigUint::from(v))
    }
}

/// Fraction-free (Bareiss) elimination with row pivoting.
///
/// Every intermediate division is exact, so the result is the exact
/// determinant.
pub fn det_exact(m: &BigMatrix) -> Result<BigInt, LinearError> {
    if !m.is_square() {
        return Err(LinearError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let size = m.rows();
    if size == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone().into_rows();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..size - 1 {
        if a[k][k].is_zero() {
            match (k + 1..size).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        for row in tail.iter_mut() {
            let factor = row[k].clone();
            for j in k + 1..size {
                let v = &row[j] * pivot - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    Ok(sign * &a[size - 1][size - 1])
}

/// `det(I + L)` of the bicirculant graph, computed directly from its matrix.
///
/// Meant for `2n` up to a few hundred; the polynomial routes are the ones to
/// use beyond that.
pub fn forest_count_oracle(spec: &BicirculantSpec) -> ForestCount {
    let det = det_exact(&forest_matrix(spec)).expect("forest matrix is square");
    assert!(det.is_positive(), "I + L is positive definite, got determinant {det}");
    ForestCount(det.magnitude().clone())
}
