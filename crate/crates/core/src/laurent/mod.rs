//! Integer Laurent polynomials and the exact polynomial route to forest counts.

mod cheb;
mod cyclotomic;
mod pack;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::poly::IntPoly;

pub use cheb::{cheb_transform, chebyshev_t_poly, ChebTransform};
pub use cyclotomic::{cyclotomic_product, forest_count_formula, forest_count_formula_at};
pub use pack::{build_abc, build_p, SymmetricPolyPack};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("polynomial is not palindromic: {0}")]
    NotPalindromic(String),
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("class {class} needs an even order, got n = {n}")]
    OddOrderForHalfClass { class: crate::graph::GammaClass, n: u64 },
    #[error("cyclotomic quotient {numerator} / {denominator} is not exact")]
    NonDivisible { numerator: BigInt, denominator: BigInt },
    #[error("order must be positive")]
    ZeroOrder,
    #[error("cannot parse Laurent polynomial: {0}")]
    Parse(String),
}

/// `Σ coeffs[i] z^(lo + i)` with integer coefficients.
///
/// Canonical form: either no coefficients (the zero polynomial, `lo = 0`) or
/// first and last coefficients nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntLaurentPoly {
    lo: i64,
    coeffs: Vec<BigInt>,
}

impl IntLaurentPoly {
    pub fn new(lo: i64, coeffs: Vec<BigInt>) -> Self {
        let Some(first) = coeffs.iter().position(|c| !c.is_zero()) else {
            return Self::zero();
        };
        let last = coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
        IntLaurentPoly { lo: lo + first as i64, coeffs: coeffs[first..=last].to_vec() }
    }

    pub fn zero() -> Self {
        IntLaurentPoly { lo: 0, coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(0, vec![c.into()])
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        Self::new(exp, vec![c.into()])
    }

    /// `c (z^e + z^-e)`
    pub fn symmetric_pair(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        Self::monomial(c.clone(), e).add(&Self::monomial(c, -e))
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        terms.into_iter().fold(Self::zero(), |acc, (e, c)| acc.add(&Self::monomial(c, e)))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let i = exp - self.lo;
        if i < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_default()
    }

    /// Coefficient of the highest power.
    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        Self::new(lo, (lo..=hi).map(|e| self.coeff(e) + other.coeff(e)).collect())
    }

    pub fn neg(&self) -> Self {
        IntLaurentPoly { lo: self.lo, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(self.lo + other.lo, out)
    }

    pub fn add_constant(&self, c: impl Into<BigInt>) -> Self {
        self.add(&Self::constant(c))
    }

    /// `P(z^-1)`
    pub fn reflect(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(-self.hi(), coeffs)
    }

    /// `P(z) = P(z^-1)`.
    pub fn is_palindromic(&self) -> bool {
        *self == self.reflect()
    }

    /// Degree `k` of a palindromic polynomial `η_0 + Σ η_j (z^j + z^-j)`.
    pub fn palindromic_degree(&self) -> Option<usize> {
        if self.is_zero() || !self.is_palindromic() {
            return None;
        }
        Some(self.hi() as usize)
    }

    /// `(lo, q)` with `P(z) = z^lo q(z)` and `q` an ordinary polynomial.
    pub fn to_poly(&self) -> (i64, IntPoly) {
        (self.lo, IntPoly::new(self.coeffs.clone()))
    }

    pub fn eval_rational(&self, z: &BigRational) -> BigRational {
        let (lo, q) = self.to_poly();
        let base = q.eval_rational(z);
        if lo >= 0 {
            base * num_traits::pow(z.clone(), lo as usize)
        } else {
            base / num_traits::pow(z.clone(), (-lo) as usize)
        }
    }

    pub fn eval_int(&self, z: i64) -> BigRational {
        self.eval_rational(&BigRational::from_integer(z.into()))
    }

    /// Values on the unit circle `e^{iθ}` in double precision.
    pub fn eval_on_circle(&self, theta: f64) -> num_complex::Complex64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let c: f64 = num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::NAN);
                num_complex::Complex64::from_polar(c, theta * (self.lo + i as i64) as f64)
            })
            .sum()
    }
}

impl fmt::Display for IntLaurentPoly {
    /// `c_lo*z^lo + ... + c_hi*z^hi`, exponents ascending, zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{c}*z^{}", self.lo + i as i64))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl FromStr for IntLaurentPoly {
    type Err = LaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let bad = || LaurentError::Parse(s.to_string());
        let mut acc = Self::zero();
        for term in s.split(" + ") {
            let (c, e) = term.trim().split_once("*z^").ok_or_else(bad)?;
            let c: BigInt = c.parse().map_err(|_| bad())?;
            let e: i64 = e.parse().map_err(|_| bad())?;
            acc = acc.add(&Self::monomial(c, e));
        }
        Ok(acc)
    }
}
