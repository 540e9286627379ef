//! Real balls `[mid ± rad]` with rigorous error propagation.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::float::{Float, Round};

/// Bits kept in radii; radii are always rounded upward.
const RAD_PREC: u32 = 32;

/// A certified real: the true value lies in `[mid - rad, mid + rad]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ball {
    mid: Float,
    rad: Float,
    prec: u32,
}

fn rad_up(x: &Float) -> Float {
    x.round(RAD_PREC, Round::Ceil)
}

impl Ball {
    /// Round an exact midpoint to the working precision and fold the rounding
    /// error into the radius.
    fn finish(exact_mid: Float, rad: Float, prec: u32) -> Ball {
        let mid = exact_mid.round(prec, Round::Floor);
        let err = exact_mid.sub(&mid);
        Ball { mid, rad: rad_up(&rad.add(&err)), prec }
    }

    pub fn new(mid: Float, rad: Float, prec: u32) -> Ball {
        assert!(!rad.is_negative(), "negative radius");
        Self::finish(mid, rad, prec)
    }

    pub fn exact(x: Float, prec: u32) -> Ball {
        Self::finish(x, Float::zero(), prec)
    }

    pub fn zero(prec: u32) -> Ball {
        Ball { mid: Float::zero(), rad: Float::zero(), prec }
    }

    pub fn one(prec: u32) -> Ball {
        Self::from_int(1, prec)
    }

    pub fn from_int(v: impl Into<BigInt>, prec: u32) -> Ball {
        Self::exact(Float::from_int(v), prec)
    }

    pub fn from_ratio(num: &BigInt, den: &BigInt, prec: u32) -> Ball {
        let (a, b) = (Float::from_int(num.clone()), Float::from_int(den.clone()));
        Self::from_bounds(a.div(&b, prec, Round::Floor), a.div(&b, prec, Round::Ceil), prec)
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Ball {
        Self::from_ratio(q.numer(), q.denom(), prec)
    }

    /// Smallest ball (up to rounding) containing `[lo, hi]`.
    pub fn from_bounds(lo: Float, hi: Float, prec: u32) -> Ball {
        assert!(lo <= hi, "empty interval");
        let mid = lo.add(&hi).mul_pow2(-1);
        let rad = hi.sub(&lo).mul_pow2(-1);
        Self::finish(mid, rad, prec)
    }

    pub fn mid(&self) -> &Float {
        &self.mid
    }

    pub fn rad(&self) -> &Float {
        &self.rad
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn with_prec(&self, prec: u32) -> Ball {
        Self::finish(self.mid.clone(), self.rad.clone(), prec)
    }

    pub fn lower(&self) -> Float {
        self.mid.sub(&self.rad)
    }

    pub fn upper(&self) -> Float {
        self.mid.add(&self.rad)
    }

    pub fn add_error(&self, err: &Float) -> Ball {
        Ball { mid: self.mid.clone(), rad: rad_up(&self.rad.add(&err.abs())), prec: self.prec }
    }

    fn prec_with(&self, other: &Ball) -> u32 {
        self.prec.max(other.prec)
    }

    pub fn neg(&self) -> Ball {
        Ball { mid: self.mid.neg(), rad: self.rad.clone(), prec: self.prec }
    }

    pub fn add(&self, other: &Ball) -> Ball {
        Self::finish(self.mid.add(&other.mid), self.rad.add(&other.rad), self.prec_with(other))
    }

    pub fn sub(&self, other: &Ball) -> Ball {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Ball) -> Ball {
        let rad = self
            .mid
            .abs()
            .mul(&other.rad)
            .add(&other.mid.abs().mul(&self.rad))
            .add(&self.rad.mul(&other.rad));
        Self::finish(self.mid.mul(&other.mid), rad, self.prec_with(other))
    }

    pub fn mul_int(&self, k: i64) -> Ball {
        self.mul(&Ball::from_int(k, self.prec))
    }

    pub fn mul_pow2(&self, k: i64) -> Ball {
        Ball { mid: self.mid.mul_pow2(k), rad: self.rad.mul_pow2(k), prec: self.prec }
    }

    /// `x²`, aware that the result is non-negative.
    pub fn sqr(&self) -> Ball {
        if !self.contains_zero() {
            return self.mul(self);
        }
        let m = self.lower().abs().max(self.upper().abs());
        Self::from_bounds(Float::zero(), m.mul(&m), self.prec)
    }

    pub fn contains_zero(&self) -> bool {
        self.mid.abs() <= self.rad
    }

    pub fn is_positive(&self) -> bool {
        self.lower().is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.upper().is_negative()
    }

    pub fn contains(&self, x: &Float) -> bool {
        self.lower() <= *x && *x <= self.upper()
    }

    /// Whether the two balls intersect.
    pub fn overlaps(&self, other: &Ball) -> bool {
        self.lower() <= other.upper() && other.lower() <= self.upper()
    }

    /// `None` when the divisor contains zero.
    pub fn div(&self, other: &Ball) -> Option<Ball> {
        if other.contains_zero() {
            return None;
        }
        let prec = self.prec_with(other);
        let q_lo = self.mid.div(&other.mid, prec, Round::Floor);
        let q_hi = self.mid.div(&other.mid, prec, Round::Ceil);
        let q_abs = q_lo.abs().max(q_hi.abs());
        // |a/b - ma/mb| <= (ra + |ma/mb| rb) / (|mb| - rb)
        let num = self.rad.add(&q_abs.mul(&other.rad));
        let den = other.mid.abs().sub(&other.rad);
        let prop = num.div(&den, RAD_PREC, Round::Ceil);
        Some(Self::finish(q_lo.clone(), prop.add(&q_hi.sub(&q_lo)), prec))
    }

    pub fn recip(&self) -> Option<Ball> {
        Ball::one(self.prec).div(self)
    }

    /// Square root; `None` if the ball reaches below zero by more than its
    /// radius allows (negative lower bounds are clamped to zero otherwise).
    pub fn sqrt(&self) -> Option<Ball> {
        if self.upper().is_negative() {
            return None;
        }
        let lo = self.lower().max(Float::zero());
        let hi = self.upper();
        Some(Self::from_bounds(lo.sqrt(self.prec, Round::Floor), hi.sqrt(self.prec, Round::Ceil), self.prec))
    }

    pub fn abs(&self) -> Ball {
        if !self.contains_zero() {
            return if self.mid.is_negative() { self.neg() } else { self.clone() };
        }
        let m = self.lower().abs().max(self.upper().abs());
        Self::from_bounds(Float::zero(), m, self.prec)
    }

    pub fn pow(&self, mut e: u64) -> Ball {
        let mut base = self.clone();
        let mut acc = Ball::one(self.prec);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.sqr();
            }
        }
        acc
    }

    pub fn hull(&self, other: &Ball) -> Ball {
        let lo = self.lower().min(other.lower());
        let hi = self.upper().max(other.upper());
        Self::from_bounds(lo, hi, self.prec_with(other))
    }

    /// Full width `2·rad`.
    pub fn width(&self) -> Float {
        self.rad.mul_pow2(1)
    }

    /// The only integer in the ball, if there is exactly one.
    pub fn unique_integer(&self) -> Option<BigInt> {
        let lo = self.lower().to_integer(Round::Ceil);
        let hi = self.upper().to_integer(Round::Floor);
        (lo == hi).then_some(lo)
    }

    pub fn to_f64(&self) -> f64 {
        self.mid.to_f64()
    }

    /// Decimal midpoint showing the digits the radius leaves meaningful.
    pub fn mid_decimal(&self) -> String {
        let digits = if self.rad.is_zero() {
            (self.prec as f64 * std::f64::consts::LOG10_2) as i64
        } else {
            -((self.rad.magnitude() as f64) * std::f64::consts::LOG10_2).floor() as i64 + 1
        };
        let text = self.mid.to_decimal(digits.clamp(0, 80) as usize);
        if self.rad.is_zero() && text.contains('.') {
            text.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            text
        }
    }

    /// Radius as an upward-rounded decimal.
    pub fn rad_decimal(&self) -> String {
        self.rad.to_sci_up(3)
    }

    /// `|self - other| <= tol + rad(self) + rad(other)` in the worst case.
    pub fn agrees_with(&self, other: &Ball, tol: f64) -> bool {
        let gap = self.mid.sub(&other.mid).abs();
        let allowed = Float::from_f64(tol).add(&self.rad).add(&other.rad);
        gap <= allowed
    }

    pub fn from_f64_exact(x: f64, prec: u32) -> Ball {
        Self::exact(Float::from_f64(x), prec)
    }

    /// Whether `|self - x| < tol` for every point of the ball.
    pub fn within(&self, x: &Ball, tol: f64) -> bool {
        let d = self.sub(x).abs();
        d.upper() < Float::from_f64(tol)
    }

    pub fn is_exact(&self) -> bool {
        self.rad.is_zero()
    }
}

impl fmt::Display for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ± {}", self.mid_decimal(), self.rad_decimal())
    }
}

pub(crate) fn ratio_ball(num: i64, den: i64, prec: u32) -> Ball {
    Ball::from_ratio(&BigInt::from(num), &BigInt::from(den), prec)
}
