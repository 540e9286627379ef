//! Elementary functions on balls: `π`, `exp`, `ln`, `cos`, `sin`.
//!
//! Each function is evaluated at the midpoint with a truncated series plus an
//! explicit tail bound, then widened by a Lipschitz bound over the input ball.

use num_bigint::BigInt;

use super::ball::{ratio_ball, Ball};
use super::float::Float;

fn guard(prec: u32) -> u32 {
    prec + 32
}

fn pow2(k: i64) -> Float {
    Float::one().mul_pow2(k)
}

/// `atan(1/q)` for an integer `q >= 2`.
fn atan_recip(q: i64, prec: u32) -> Ball {
    let p = guard(prec);
    let q2 = BigInt::from(q * q);
    let mut den = BigInt::from(q);
    let mut sum = Ball::zero(p);
    let mut k = 0i64;
    loop {
        let term = Ball::from_ratio(&BigInt::from(1), &(&den * (2 * k + 1)), p);
        sum = if k % 2 == 0 { sum.add(&term) } else { sum.sub(&term) };
        k += 1;
        den *= &q2;
        if den.bits() as i64 > p as i64 + 4 {
            // alternating series: the tail is bounded by the first omitted term
            let tail = Float::one().div(&Float::from_int(den.clone()), 32, super::float::Round::Ceil);
            return sum.add_error(&tail);
        }
    }
}

/// `π` by Machin's formula.
pub fn pi(prec: u32) -> Ball {
    let a = atan_recip(5, prec).mul_int(16);
    let b = atan_recip(239, prec).mul_int(4);
    a.sub(&b).with_prec(prec)
}

/// `exp` at an exact point.
fn exp_point(x: &Float, prec: u32) -> Ball {
    let p = guard(prec) + 8;
    // halve until |x| < 2^-8
    let mag = x.magnitude();
    let halvings = if x.is_zero() { 0 } else { (mag + 8).max(0) as u32 };
    let p = p + halvings;
    let r = Ball::exact(x.mul_pow2(-(halvings as i64)), p);
    let mut term = Ball::one(p);
    let mut sum = Ball::one(p);
    let mut k = 1i64;
    loop {
        term = term.mul(&r).div(&Ball::from_int(k, p)).expect("nonzero");
        sum = sum.add(&term);
        k += 1;
        if term.upper().abs().magnitude() < -(p as i64) - 2 || term.is_exact() && term.mid().is_zero() {
            break;
        }
    }
    // |r| < 2^-8 so the tail is at most twice the last term
    let tail = term.upper().abs().mul_pow2(1);
    let mut out = sum.add_error(&tail);
    for _ in 0..halvings {
        out = out.sqr();
    }
    out.with_prec(prec)
}

pub fn exp(x: &Ball) -> Ball {
    let prec = x.prec();
    let center = exp_point(x.mid(), prec);
    if x.is_exact() {
        return center;
    }
    // |exp(y) - exp(m)| <= exp(m + r) · r
    let bound = exp_point(&x.upper(), 32).upper().mul(x.rad());
    center.add_error(&bound)
}

/// `atanh(t)` for an exact `|t| <= 1/2`.
fn atanh_point(t: &Ball, prec: u32) -> Ball {
    let p = guard(prec);
    let t2 = t.sqr();
    let mut power = t.clone();
    let mut sum = Ball::zero(p);
    let mut k = 0i64;
    loop {
        sum = sum.add(&power.div(&Ball::from_int(2 * k + 1, p)).expect("nonzero"));
        power = power.mul(&t2);
        k += 1;
        let mag = power.upper().abs().magnitude();
        if mag < -(p as i64) - 2 || power.mid().is_zero() {
            break;
        }
    }
    // tail <= |t|^(2k+1) / (1 - t²) <= 4/3 |t|^(2k+1)
    let tail = power.upper().abs().mul_pow2(1);
    sum.add_error(&tail)
}

fn ln2(prec: u32) -> Ball {
    atanh_point(&ratio_ball(1, 3, guard(prec)), prec).mul_pow2(1)
}

/// Natural logarithm at an exact positive point.
fn ln_point(x: &Float, prec: u32) -> Ball {
    assert!(x.is_positive(), "logarithm of a non-positive number");
    let p = guard(prec);
    // x = m · 2^e with m in [1/√2, √2)
    let mut e = x.magnitude() - 1;
    let mut m = x.mul_pow2(-e);
    if m > Float::from_f64(std::f64::consts::SQRT_2) {
        m = m.mul_pow2(-1);
        e += 1;
    }
    let mb = Ball::exact(m, p);
    let one = Ball::one(p);
    let t = mb.sub(&one).div(&mb.add(&one)).expect("positive");
    let log_m = atanh_point(&t, p).mul_pow2(1);
    log_m.add(&ln2(p).mul_int(e)).with_prec(prec)
}

/// `None` unless the ball is strictly positive.
pub fn ln(x: &Ball) -> Option<Ball> {
    if !x.is_positive() {
        return None;
    }
    let center = ln_point(x.mid(), x.prec());
    if x.is_exact() {
        return Some(center);
    }
    let bound = x.rad().div(&x.lower(), 32, super::float::Round::Ceil);
    Some(center.add_error(&bound))
}

/// `(cos x, sin x)` at an exact point with `|x| <= 4`.
fn cos_sin_point(x: &Float, prec: u32) -> (Ball, Ball) {
    let p = guard(prec);
    let xb = Ball::exact(x.clone(), p);
    let x2 = xb.sqr();
    let mut c = Ball::one(p);
    let mut s = xb.clone();
    let mut term_c = Ball::one(p);
    let mut term_s = xb.clone();
    let mut k = 1i64;
    loop {
        term_c = term_c.mul(&x2).div(&Ball::from_int((2 * k - 1) * (2 * k), p)).expect("nonzero").neg();
        term_s = term_s.mul(&x2).div(&Ball::from_int((2 * k) * (2 * k + 1), p)).expect("nonzero").neg();
        c = c.add(&term_c);
        s = s.add(&term_s);
        k += 1;
        let small = pow2(-(p as i64) - 2);
        if term_c.upper().abs().max(term_c.lower().abs()) < small
            && term_s.upper().abs().max(term_s.lower().abs()) < small
        {
            break;
        }
    }
    // Lagrange remainder: bounded by the next term, itself below the last term for |x| <= 4 and k >= 4
    let tail = term_c.mid().abs().add(&term_s.mid().abs()).add(&pow2(-(p as i64)));
    (c.add_error(&tail).with_prec(prec), s.add_error(&tail).with_prec(prec))
}

fn reduce_check(x: &Ball) {
    assert!(x.upper().abs() <= Float::from_int(4) && x.lower().abs() <= Float::from_int(4), "argument out of range");
}

/// `cos x` for `|x| <= 4`.
pub fn cos(x: &Ball) -> Ball {
    reduce_check(x);
    let (c, _) = cos_sin_point(x.mid(), x.prec());
    c.add_error(x.rad())
}

/// `sin x` for `|x| <= 4`.
pub fn sin(x: &Ball) -> Ball {
    reduce_check(x);
    let (_, s) = cos_sin_point(x.mid(), x.prec());
    s.add_error(x.rad())
}
