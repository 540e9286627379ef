//! Chebyshev transform of palindromic Laurent polynomials.
//!
//! With `w = (z + 1/z)/2` one has `T_j(w) = (z^j + z^-j)/2`, so a palindromic
//! `P(z) = η_0 + Σ η_j (z^j + z^-j)` equals `U(w) = η_0 + Σ 2η_j T_j(w)`.

use num_bigint::BigInt;

use super::{IntLaurentPoly, LaurentError};
use crate::poly::IntPoly;

/// `U(w)` in the monomial basis of `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChebTransform {
    poly: IntPoly,
    /// `η_k`, the leading coefficient of the source polynomial.
    source_leading: BigInt,
}

impl ChebTransform {
    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    pub fn source_leading(&self) -> &BigInt {
        &self.source_leading
    }
}

/// `T_j` in the monomial basis, via `T_{j+1} = 2w T_j - T_{j-1}`.
pub fn chebyshev_t_poly(j: usize) -> IntPoly {
    let two_w = IntPoly::from_i64s(&[0, 2]);
    let mut prev = IntPoly::from_i64s(&[1]);
    if j == 0 {
        return prev;
    }
    let mut cur = IntPoly::from_i64s(&[0, 1]);
    for _ in 1..j {
        let next = two_w.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

pub fn cheb_transform(p: &IntLaurentPoly) -> Result<ChebTransform, LaurentError> {
    if p.is_zero() {
        return Err(LaurentError::ZeroPolynomial);
    }
    let k = p.palindromic_degree().ok_or_else(|| LaurentError::NotPalindromic(p.to_string()))?;
    let mut poly = IntPoly::constant(p.coeff(0));
    for j in 1..=k {
        let eta = p.coeff(j as i64);
        poly = poly.add(&chebyshev_t_poly(j).scale(&(eta * 2)));
    }
    Ok(ChebTransform { poly, source_leading: p.leading().cloned().unwrap() })
}
