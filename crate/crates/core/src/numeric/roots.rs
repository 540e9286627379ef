//! Certified isolation of all complex roots of an integer polynomial.
//!
//! Approximations come from Aberth iteration (first in `f64`, then at the
//! working precision); every approximation is then certified by a
//! Weierstrass inclusion disc `D(z_i, d·|W_i|)`. Pairwise disjoint discs
//! each contain exactly one root.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use super::ball::Ball;
use super::complex::CBall;
use super::float::{Float, Round};
use super::NumericError;
use crate::laurent::ChebTransform;
use crate::poly::IntPoly;

/// Certified roots with multiplicities. Each root is a rectangle containing
/// the certified disc around its midpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSet {
    roots: Vec<CBall>,
    multiplicities: Vec<usize>,
}

impl RootSet {
    pub fn empty() -> RootSet {
        RootSet { roots: Vec::new(), multiplicities: Vec::new() }
    }

    pub fn roots(&self) -> &[CBall] {
        &self.roots
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CBall, usize)> {
        self.roots.iter().zip(self.multiplicities.iter().copied())
    }

    /// Number of roots counted with multiplicity.
    pub fn degree(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

/// All roots of the Chebyshev transform; empty for a constant transform.
pub fn find_transform_roots(u: &ChebTransform, prec: u32) -> Result<RootSet, NumericError> {
    find_poly_roots(u.poly(), prec)
}

/// All complex roots of a nonzero integer polynomial.
pub fn find_poly_roots(p: &IntPoly, prec: u32) -> Result<RootSet, NumericError> {
    if p.is_zero() {
        return Err(NumericError::ZeroPolynomial);
    }
    let mut set = RootSet::empty();
    for (factor, mult) in p.squarefree_decomposition() {
        if factor.degree().unwrap_or(0) == 0 {
            continue;
        }
        for root in squarefree_roots(&factor, prec)? {
            set.roots.push(root);
            set.multiplicities.push(mult);
        }
    }
    for i in 0..set.roots.len() {
        for j in i + 1..set.roots.len() {
            if set.roots[i].overlaps(&set.roots[j]) {
                return Err(NumericError::PrecisionExhausted { bits: prec });
            }
        }
    }
    Ok(set)
}

fn horner(coeffs: &[Ball], z: &CBall) -> CBall {
    let prec = z.prec();
    coeffs.iter().rev().fold(CBall::zero(prec), |acc, c| acc.mul(z).add_real(c))
}

fn to_c64_coeffs(p: &IntPoly) -> Option<Vec<f64>> {
    let v: Vec<f64> = p.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::INFINITY)).collect();
    v.iter().all(|x| x.is_finite()).then_some(v)
}

fn eval_c64(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// `f64` Aberth iteration for starting points.
fn aberth_f64(c: &[f64]) -> Vec<Complex64> {
    let d = c.len() - 1;
    let lead = c[d].abs();
    let radius = 1.0 + c[..d].iter().map(|a| a.abs() / lead).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * k as f64 / d as f64 + 0.4))
        .collect();
    for _ in 0..2000 {
        let mut biggest: f64 = 0.0;
        for i in 0..d {
            let (p, dp) = eval_c64(c, z[i]);
            if p == Complex64::zero() {
                continue;
            }
            let ratio = p / dp;
            let sum: Complex64 = (0..d).filter(|&j| j != i).map(|j| 1.0 / (z[i] - z[j])).sum();
            let step = ratio / (1.0 - ratio * sum);
            if step.is_finite() {
                z[i] -= step;
                biggest = biggest.max(step.norm() / (1.0 + z[i].norm()));
            }
        }
        if biggest < 1e-15 {
            break;
        }
    }
    z
}

fn squarefree_roots(g: &IntPoly, prec: u32) -> Result<Vec<CBall>, NumericError> {
    let d = g.degree().expect("nonconstant");
    let coeffs: Vec<Ball> = g.coeffs().iter().map(|c| Ball::from_int(c.clone(), prec)).collect();
    let dcoeffs: Vec<Ball> = g.derivative().coeffs().iter().map(|c| Ball::from_int(c.clone(), prec)).collect();
    let lead = Ball::from_int(g.leading().cloned().unwrap_or_else(BigInt::zero), prec);

    if d == 1 {
        let root = coeffs[0].neg().div(&coeffs[1]).expect("nonzero leading coefficient");
        return Ok(vec![CBall::real(root)]);
    }

    let start = to_c64_coeffs(g).ok_or(NumericError::PrecisionExhausted { bits: prec })?;
    let mut z: Vec<CBall> = aberth_f64(&start)
        .into_iter()
        .map(|w| CBall::from_f64(w.re, w.im, prec))
        .collect();

    let target = -(prec as i64) + 8;
    let max_iter = 8 + 2 * (64 - (prec as u64).leading_zeros()) as usize;
    for _ in 0..max_iter {
        let mut converged = true;
        for i in 0..d {
            let p = horner(&coeffs, &z[i]);
            let dp = horner(&dcoeffs, &z[i]);
            let Some(ratio) = p.div(&dp) else { continue };
            let mut sum = CBall::zero(prec);
            for j in 0..d {
                if j != i {
                    if let Some(r) = z[i].sub(&z[j]).recip() {
                        sum = sum.add(&r);
                    }
                }
            }
            let denom = CBall::one(prec).sub(&ratio.mul(&sum));
            let Some(step) = ratio.div(&denom) else { continue };
            let step = step.center();
            let size = step.re.mid().abs().max(step.im.mid().abs());
            let scale = z[i].re.mid().abs().max(z[i].im.mid().abs()).max(Float::one());
            if !size.is_zero() && size.magnitude() - scale.magnitude() > target {
                converged = false;
            }
            z[i] = z[i].sub(&step).center();
        }
        if converged {
            break;
        }
    }

    // Weierstrass corrections and inclusion radii
    let degree = Float::from_int(d as i64);
    let mut radii = Vec::with_capacity(d);
    for i in 0..d {
        let p = horner(&coeffs, &z[i]);
        let mut den = CBall::real(lead.clone());
        for j in 0..d {
            if j != i {
                den = den.mul(&z[i].sub(&z[j]));
            }
        }
        let w = p.div(&den).ok_or(NumericError::PrecisionExhausted { bits: prec })?;
        radii.push(degree.mul(&w.abs().upper()).round(32, Round::Ceil));
    }
    for i in 0..d {
        for j in i + 1..d {
            let gap = z[i].sub(&z[j]).abs().lower();
            if gap <= radii[i].add(&radii[j]) {
                return Err(NumericError::PrecisionExhausted { bits: prec });
            }
        }
    }
    Ok(z
        .into_iter()
        .zip(radii)
        .map(|(c, r)| CBall::new(c.re.add_error(&r), c.im.add_error(&r)))
        .collect())
}
