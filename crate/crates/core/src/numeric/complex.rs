//! Complex balls: rectangular enclosures built from two real balls.

use std::fmt;

use super::ball::Ball;
use super::float::Float;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CBall {
    pub re: Ball,
    pub im: Ball,
}

impl CBall {
    pub fn new(re: Ball, im: Ball) -> CBall {
        CBall { re, im }
    }

    pub fn real(re: Ball) -> CBall {
        let prec = re.prec();
        CBall { re, im: Ball::zero(prec) }
    }

    pub fn zero(prec: u32) -> CBall {
        CBall::real(Ball::zero(prec))
    }

    pub fn one(prec: u32) -> CBall {
        CBall::real(Ball::one(prec))
    }

    pub fn from_f64(re: f64, im: f64, prec: u32) -> CBall {
        CBall::new(Ball::from_f64_exact(re, prec), Ball::from_f64_exact(im, prec))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    /// Midpoint with zero radius, for use as an iteration point.
    pub fn center(&self) -> CBall {
        let p = self.prec();
        CBall::new(Ball::exact(self.re.mid().clone(), p), Ball::exact(self.im.mid().clone(), p))
    }

    pub fn to_c64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn neg(&self) -> CBall {
        CBall::new(self.re.neg(), self.im.neg())
    }

    pub fn conj(&self) -> CBall {
        CBall::new(self.re.clone(), self.im.neg())
    }

    pub fn add(&self, o: &CBall) -> CBall {
        CBall::new(self.re.add(&o.re), self.im.add(&o.im))
    }

    pub fn sub(&self, o: &CBall) -> CBall {
        CBall::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }

    pub fn add_real(&self, x: &Ball) -> CBall {
        CBall::new(self.re.add(x), self.im.clone())
    }

    pub fn mul(&self, o: &CBall) -> CBall {
        if o.im.is_exact() && o.im.mid().is_zero() {
            return self.scale(&o.re);
        }
        let re = self.re.mul(&o.re).sub(&self.im.mul(&o.im));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        CBall::new(re, im)
    }

    pub fn scale(&self, k: &Ball) -> CBall {
        CBall::new(self.re.mul(k), self.im.mul(k))
    }

    pub fn mul_pow2(&self, k: i64) -> CBall {
        CBall::new(self.re.mul_pow2(k), self.im.mul_pow2(k))
    }

    pub fn sqr(&self) -> CBall {
        let re = self.re.sqr().sub(&self.im.sqr());
        let im = self.re.mul(&self.im).mul_pow2(1);
        CBall::new(re, im)
    }

    /// `|z|²`
    pub fn norm_sqr(&self) -> Ball {
        self.re.sqr().add(&self.im.sqr())
    }

    pub fn abs(&self) -> Ball {
        self.norm_sqr().sqrt().expect("sum of squares is non-negative")
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn div(&self, o: &CBall) -> Option<CBall> {
        let d = o.norm_sqr();
        let num = self.mul(&o.conj());
        Some(CBall::new(num.re.div(&d)?, num.im.div(&d)?))
    }

    pub fn recip(&self) -> Option<CBall> {
        CBall::one(self.prec()).div(self)
    }

    pub fn pow(&self, mut e: u64) -> CBall {
        let mut base = self.clone();
        let mut acc = CBall::one(self.prec());
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

    /// Principal square root; `None` when the ball meets the branch cut
    /// (the non-positive real axis) so that no single branch applies.
    pub fn sqrt(&self) -> Option<CBall> {
        let (x, y) = (&self.re, &self.im);
        let r = self.abs();
        if x.is_positive() {
            let a = r.add(x).mul_pow2(-1).sqrt()?;
            let b = y.div(&a.mul_pow2(1))?;
            return Some(CBall::new(a, b));
        }
        if y.contains_zero() {
            return None;
        }
        let b = r.sub(x).mul_pow2(-1).sqrt()?;
        let b = if y.is_negative() { b.neg() } else { b };
        let a = y.div(&b.mul_pow2(1))?;
        Some(CBall::new(a, b))
    }

    /// Whether the rectangles intersect.
    pub fn overlaps(&self, o: &CBall) -> bool {
        self.re.overlaps(&o.re) && self.im.overlaps(&o.im)
    }

    /// Upper bound on the distance from the midpoint to any point of the ball.
    pub fn radius_bound(&self) -> Float {
        self.re.rad().add(self.im.rad())
    }
}

impl fmt::Display for CBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})i", self.re, self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use proptest::prelude::*;

    const P: u32 = 128;

    fn close(a: &CBall, b: Complex64) -> bool {
        (a.to_c64() - b).norm() < 1e-12 * (1.0 + b.norm())
    }

    #[test]
    fn sqrt_branches() {
        let m1 = CBall::from_f64(-1.0, 0.0, P);
        assert!(m1.sqrt().is_none());
        let i = CBall::from_f64(-4.0, 1e-3, P).sqrt().unwrap();
        assert!(close(&i, Complex64::new(-4.0, 1e-3).sqrt()));
        let s = CBall::from_f64(9.0, 0.0, P).sqrt().unwrap();
        assert!(s.re.contains(&Float::from_int(3)) && s.im.contains_zero());
    }

    proptest! {
        #[test]
        fn matches_f64(a in -10.0f64..10.0, b in -10.0f64..10.0, c in -10.0f64..10.0, d in 0.1f64..10.0) {
            let (x, y) = (CBall::from_f64(a, b, P), CBall::from_f64(c, d, P));
            let (zx, zy) = (Complex64::new(a, b), Complex64::new(c, d));
            prop_assert!(close(&x.mul(&y), zx * zy));
            prop_assert!(close(&x.div(&y).unwrap(), zx / zy));
            prop_assert!(close(&x.pow(7), zx.powu(7)));
            prop_assert!((x.abs().to_f64() - zx.norm()).abs() < 1e-12 * (1.0 + zx.norm()));
            prop_assert!(close(&y.sqrt().unwrap(), zy.sqrt()));
        }

        #[test]
        fn sqrt_squares_back(a in -10.0f64..10.0, b in 0.01f64..10.0) {
            let x = CBall::from_f64(a, -b, P);
            let r = x.sqrt().unwrap().sqr();
            prop_assert!(r.re.contains(x.re.mid()) && r.im.contains(x.im.mid()));
        }
    }
}
