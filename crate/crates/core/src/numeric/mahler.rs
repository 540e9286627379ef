//! Mahler measures by root moduli and by quadrature of `log|P|` on the circle.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, Zero};

use super::ball::Ball;
use super::elementary::{cos, exp, ln, pi};
use super::float::Float;
use super::roots::find_poly_roots;
use super::{NumericError, MAX_PRECISION};
use crate::laurent::{cheb_transform, IntLaurentPoly};
use crate::poly::IntPoly;

/// `|lc| ∏_{|α| > 1} |α|` over the roots of `z^-lo p(z)`, raising the working
/// precision from `prec` until every root is separated from the unit circle.
pub fn mahler_roots(p: &IntLaurentPoly, prec: u32) -> Result<Ball, NumericError> {
    if p.is_zero() {
        return Err(NumericError::ZeroPolynomial);
    }
    let (_, q) = p.to_poly();
    let lead = q.leading().expect("nonzero").abs();
    let mut bits = prec.max(64);
    while bits <= MAX_PRECISION.max(prec) {
        if let Some(m) = mahler_roots_pass(&q, &lead, bits)? {
            return Ok(m);
        }
        bits *= 2;
    }
    Err(NumericError::RootOnUnitCircle)
}

fn mahler_roots_pass(q: &IntPoly, lead: &BigInt, prec: u32) -> Result<Option<Ball>, NumericError> {
    let roots = match find_poly_roots(q, prec) {
        Ok(r) => r,
        Err(NumericError::PrecisionExhausted { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    let one = Float::one();
    let mut m = Ball::from_int(lead.clone(), prec);
    for (root, mult) in roots.iter() {
        let modulus = root.abs();
        if modulus.lower() > one {
            m = m.mul(&modulus.pow(mult as u64));
        } else if modulus.upper() >= one {
            return Ok(None);
        }
    }
    Ok(Some(m))
}

/// Values `p(e^{iθ})` on an evenly spaced grid of `count` angles in `[0, 2π)`.
pub fn circle_samples(p: &IntLaurentPoly, count: usize) -> Vec<(f64, Complex64)> {
    (0..count)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / count as f64;
            (theta, p.eval_on_circle(theta))
        })
        .collect()
}

fn horner(coeffs: &[Ball], x: &Ball) -> Ball {
    coeffs.iter().rev().fold(Ball::zero(x.prec()), |acc, c| acc.mul(x).add(c))
}

/// Certified lower bound of a polynomial on `[-1, 1]`, if it is positive there.
fn lower_bound_on_interval(coeffs: &[Ball]) -> Option<Float> {
    const PREC: u32 = 96;
    let mut stack = vec![(Float::from_int(-1), Float::one())];
    let mut best: Option<Float> = None;
    let mut work = 0usize;
    while let Some((a, b)) = stack.pop() {
        work += 1;
        if work > 1 << 18 {
            return None;
        }
        let x = Ball::from_bounds(a.clone(), b.clone(), PREC);
        let v = horner(coeffs, &x);
        if v.is_positive() {
            let lo = v.lower();
            best = Some(match best {
                Some(cur) => cur.min(lo),
                None => lo,
            });
            continue;
        }
        if b.sub(&a).magnitude() < -40 || v.is_negative() {
            return None;
        }
        let mid = a.add(&b).mul_pow2(-1);
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    best
}

/// Quadrature of `exp(∫ log|p(e^{2πit})| dt)` to absolute error `tolerance`.
///
/// The integrand is written as `log S(cos θ) / power` with `S = ±p` for a
/// palindromic `p` (real and of fixed sign on the circle) and
/// `S = p(z) p(1/z)`, `power = 2` otherwise. The midpoint rule on the
/// Chebyshev nodes of `log S` is exact up to `2 M / (ρ^{2N} - 1)`, where
/// `ρ = e^a` and `|log S| <= M` on the strip `|Im θ| < a`.
pub fn mahler_integral(p: &IntLaurentPoly, tolerance: f64) -> Result<Ball, NumericError> {
    if p.is_zero() {
        return Err(NumericError::ZeroPolynomial);
    }
    assert!(tolerance > 0.0, "tolerance must be positive");
    let prec = ((-tolerance.log2()).ceil().max(0.0) as u32 + 64).max(128);
    let (r, power) = if p.is_palindromic() {
        let at_one = p.eval_int(1);
        (if at_one < num_rational::BigRational::zero() { p.neg() } else { p.clone() }, 1i64)
    } else {
        (p.mul(&p.reflect()), 2)
    };
    if r.hi() == 0 {
        let c = Ball::from_int(r.coeff(0).abs(), prec);
        return Ok(if power == 2 { c.sqrt().expect("non-negative") } else { c });
    }
    let u = cheb_transform(&r)?;
    let coeffs: Vec<Ball> = u.poly().coeffs().iter().map(|c| Ball::from_int(c.clone(), prec)).collect();
    let low_coeffs: Vec<Ball> = u.poly().coeffs().iter().map(|c| Ball::from_int(c.clone(), 96)).collect();
    let r_min = lower_bound_on_interval(&low_coeffs).ok_or(NumericError::RootOnUnitCircle)?;
    let r_min = Ball::exact(r_min, prec);
    let half_min = r_min.mul_pow2(-1);

    let k = r.hi();
    let eta: Vec<BigInt> = (0..=k).map(|j| r.coeff(j).abs()).collect();

    // ρ = 1 + 2^-m, smallest m whose strip keeps Re R >= Rmin/2
    let mut m = 1i64;
    let (rho, u_a) = loop {
        let rho = Ball::one(prec).add(&Ball::exact(Float::one().mul_pow2(-m), prec));
        let inv = rho.recip().expect("positive");
        let mut dev = Ball::zero(prec);
        let mut top = Ball::from_int(eta[0].clone(), prec);
        for (j, e) in eta.iter().enumerate().skip(1) {
            let pair = rho.pow(j as u64).add(&inv.pow(j as u64));
            let ej = Ball::from_int(e.clone(), prec);
            dev = dev.add(&ej.mul(&pair.sub(&Ball::from_int(2, prec))));
            top = top.add(&ej.mul(&pair));
        }
        if dev.upper() <= half_min.lower() {
            break (rho, top);
        }
        m += 1;
        if m > 200 {
            return Err(NumericError::RootOnUnitCircle);
        }
    };
    let pi = pi(prec);
    let log_lo = ln(&half_min).ok_or(NumericError::RootOnUnitCircle)?.abs();
    let log_hi = ln(&u_a).ok_or(NumericError::RootOnUnitCircle)?.abs();
    let bound = Ball::exact(log_lo.upper().max(log_hi.upper()), prec).add(&pi.mul_pow2(-1));

    let l1: f64 = p.coeffs().iter().map(|c| c.abs()).sum::<BigInt>().to_string().parse().unwrap_or(f64::MAX);
    let target_mean = tolerance / (4.0 * l1.max(1.0));
    let log_rho = (1.0 + 2f64.powi(-m as i32)).ln();
    let estimate = ((2.0 * bound.to_f64() / target_mean + 1.0).ln() / (2.0 * log_rho)).ceil();
    let mut nodes = (estimate as u64).max(4);

    for _ in 0..6 {
        let two_n = rho.pow(2 * nodes).sub(&Ball::one(prec));
        let quad_err = bound.mul_pow2(1).div(&two_n).expect("positive").upper();
        let mut product = Ball::one(prec);
        let denom = Ball::from_int(BigInt::from(2 * nodes), prec);
        for kk in 1..=nodes {
            let theta = pi.mul(&Ball::from_int(2 * kk - 1, prec)).div(&denom).expect("positive");
            let x = cos(&theta);
            product = product.mul(&horner(&coeffs, &x));
        }
        let mean = ln(&product)
            .ok_or(NumericError::RootOnUnitCircle)?
            .div(&Ball::from_int(nodes, prec))
            .expect("positive")
            .add_error(&quad_err);
        let measure = exp(&mean.div(&Ball::from_int(power, prec)).expect("nonzero"));
        if measure.rad().to_f64() <= tolerance {
            return Ok(measure);
        }
        nodes *= 2;
    }
    Err(NumericError::ToleranceNotMet { tolerance })
}

/// `‖p‖₁`, an upper bound for the Mahler measure.
pub fn l1_norm(p: &IntLaurentPoly) -> BigInt {
    p.coeffs().iter().map(|c| c.abs()).fold(BigInt::zero(), |a, b| a + b)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::elementary;

    fn lp(s: &str) -> IntLaurentPoly {
        s.parse().unwrap()
    }

    /// (7 + √33)/2
    fn golden_a(prec: u32) -> Ball {
        Ball::from_int(33, prec).sqrt().unwrap().add(&Ball::from_int(7, prec)).mul_pow2(-1)
    }

    #[test]
    fn roots_route_on_linear_symbol() {
        let m = mahler_roots(&lp("-2*z^-1 + 7*z^0 + -2*z^1"), 128).unwrap();
        assert!(m.overlaps(&golden_a(128)));
        assert!(m.mid_decimal().starts_with("6.372281323"));
    }

    #[test]
    fn constants_and_monomials() {
        assert!(mahler_roots(&IntLaurentPoly::constant(-5), 64).unwrap().contains(&Float::from_int(5)));
        assert!(mahler_roots(&IntLaurentPoly::monomial(3, 4), 64).unwrap().contains(&Float::from_int(3)));
        let i = mahler_integral(&IntLaurentPoly::constant(5), 1e-12).unwrap();
        assert!(i.contains(&Float::from_int(5)));
        assert!(mahler_roots(&IntLaurentPoly::zero(), 64).is_err());
    }

    #[test]
    fn integral_route_on_linear_symbol() {
        let m = mahler_integral(&lp("-2*z^-1 + 7*z^0 + -2*z^1"), 1e-12).unwrap();
        assert!(m.rad().to_f64() <= 1e-12);
        assert!(m.agrees_with(&golden_a(128), 1e-12));
    }

    #[test]
    fn non_symmetric_polynomial() {
        // z - 3: M = 3; 2z + 1: M = 2
        for (text, v) in [("-3*z^0 + 1*z^1", 3), ("1*z^0 + 2*z^1", 2)] {
            let p = lp(text);
            assert!(mahler_roots(&p, 128).unwrap().contains(&Float::from_int(v)));
            assert!(mahler_integral(&p, 1e-10).unwrap().agrees_with(&Ball::from_int(v, 64), 1e-10));
        }
    }

    #[test]
    fn root_on_circle_is_reported() {
        assert_eq!(mahler_roots(&lp("-1*z^0 + 1*z^1"), 64), Err(NumericError::RootOnUnitCircle));
        assert_eq!(mahler_integral(&lp("-1*z^0 + 1*z^1"), 1e-6), Err(NumericError::RootOnUnitCircle));
    }

    #[test]
    fn palindromic_of_either_sign() {
        // z^2 - 5z + 1 has the root (5 + sqrt 21) / 2 outside the circle
        let neg = lp("1*z^-1 + -5*z^0 + 1*z^1");
        let m = mahler_roots(&neg, 128).unwrap();
        assert!(m.mid_decimal().starts_with("4.79128784747792"));
        assert!(mahler_integral(&neg, 1e-12).unwrap().agrees_with(&m, 1e-12));
        assert!(mahler_integral(&neg.neg(), 1e-12).unwrap().agrees_with(&m, 1e-12));
        // 1 + 2 cos θ changes sign
        assert_eq!(mahler_integral(&lp("1*z^-1 + 1*z^0 + 1*z^1"), 1e-6), Err(NumericError::RootOnUnitCircle));
    }

    #[test]
    fn plastic_number() {
        let cubic = IntLaurentPoly::new(0, [-1, -1, 0, 1].map(BigInt::from).to_vec());
        let m = mahler_roots(&cubic, 128).unwrap();
        assert!(m.mid_decimal().starts_with("1.32471795724474602596"));
        let q = mahler_integral(&cubic, 1e-10).unwrap();
        assert!(q.agrees_with(&m, 1e-10));
    }

    #[test]
    fn log_helpers_are_consistent() {
        let x = elementary::exp(&Ball::from_int(3, 128));
        assert!(elementary::ln(&x).unwrap().contains(&Float::from_int(3)));
        assert_eq!(l1_norm(&lp("-2*z^-1 + 7*z^0 + -2*z^1")), BigInt::from(11));
    }
}
