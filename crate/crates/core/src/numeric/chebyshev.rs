//! Chebyshev-product evaluation of forest counts in certified arithmetic.

use num_traits::Signed;

use super::ball::Ball;
use super::complex::CBall;
use super::roots::{find_transform_roots, RootSet};
use super::{NumericError, MAX_PRECISION, START_PRECISION};
use crate::exact::ForestCount;
use crate::graph::{BicirculantSpec, GammaClass};
use crate::laurent::{build_p, cheb_transform, IntLaurentPoly, LaurentError};

/// `T_n(w)`.
///
/// Away from `[-1, 1]` this uses `T_n(w) = (z^n + z^-n)/2` with
/// `z = w + sqrt(w² - 1)`; otherwise the duplication ladder on `(T_m, T_{m+1})`.
pub fn cheb_t(n: u64, w: &CBall) -> CBall {
    let prec = w.prec();
    if n == 0 {
        return CBall::one(prec);
    }
    if n == 1 {
        return w.clone();
    }
    let d = w.sqr().add_real(&Ball::one(prec).neg());
    let far = d.abs().lower() > super::float::Float::one().mul_pow2(-4);
    if far {
        if let Some(s) = d.sqrt() {
            let z = w.add(&s);
            let zn = z.pow(n);
            if let Some(inv) = zn.recip() {
                return zn.add(&inv).mul_pow2(-1);
            }
        }
    }
    cheb_t_ladder(n, w)
}

fn cheb_t_ladder(n: u64, w: &CBall) -> CBall {
    let prec = w.prec();
    let one = Ball::one(prec);
    let mut lo = CBall::one(prec);
    let mut hi = w.clone();
    for bit in (0..64 - n.leading_zeros()).rev() {
        let cross = lo.mul(&hi).mul_pow2(1).sub(w);
        if (n >> bit) & 1 == 0 {
            hi = cross;
            lo = lo.sqr().mul_pow2(1).add_real(&one.neg());
        } else {
            lo = cross;
            hi = hi.sqr().mul_pow2(1).add_real(&one.neg());
        }
    }
    lo
}

/// `∏_ℓ |2 T_m(w_ℓ) + shift|^{mult_ℓ}`
fn root_product(roots: &RootSet, m: u64, shift: i64, prec: u32) -> Ball {
    let shift = Ball::from_int(shift, prec);
    roots.iter().fold(Ball::one(prec), |acc, (w, mult)| {
        let t = cheb_t(m, w).mul_pow2(1).add_real(&shift);
        acc.mul(&t.abs().pow(mult as u64))
    })
}

fn leading_abs(p: &IntLaurentPoly, prec: u32) -> Result<Ball, NumericError> {
    let lead = p.leading().ok_or(NumericError::ZeroPolynomial)?;
    Ok(Ball::from_int(lead.abs(), prec))
}

/// One pass of the Chebyshev product at a fixed working precision.
pub fn chebyshev_enclosure(spec: &BicirculantSpec, n: u64, prec: u32) -> Result<Ball, NumericError> {
    if n == 0 {
        return Err(LaurentError::ZeroOrder.into());
    }
    let class = spec.class();
    let pack = build_p(spec);
    let p1 = pack.p(1);
    let w = find_transform_roots(&cheb_transform(p1)?, prec)?;
    let a = leading_abs(p1, prec)?;
    if class == GammaClass::G1 {
        return Ok(a.pow(n).mul(&root_product(&w, n, -2, prec)));
    }
    if n % 2 == 1 {
        return Err(LaurentError::OddOrderForHalfClass { class, n }.into());
    }
    let half = n / 2;
    let pj = pack.class_poly(class);
    let v = find_transform_roots(&cheb_transform(pj)?, prec)?;
    let lead = leading_abs(pj, prec)?.mul(&a);
    Ok(lead.pow(half).mul(&root_product(&v, half, 2, prec)).mul(&root_product(&w, half, -2, prec)))
}

/// Forest count at order `n` together with the precision that certified it.
pub fn forest_count_chebyshev_at(
    spec: &BicirculantSpec,
    n: u64,
    ceiling: u32,
) -> Result<(ForestCount, u32), NumericError> {
    let mut prec = START_PRECISION;
    while prec <= ceiling {
        match chebyshev_enclosure(spec, n, prec) {
            Ok(ball) => {
                let narrow = ball.width() < super::float::Float::one().mul_pow2(-1);
                if let (true, Some(v)) = (narrow, ball.unique_integer()) {
                    if v.is_positive() {
                        return Ok((ForestCount::new(v.to_biguint().expect("positive")), prec));
                    }
                }
            }
            Err(NumericError::PrecisionExhausted { .. }) => {}
            Err(e) => return Err(e),
        }
        prec *= 2;
    }
    Err(NumericError::PrecisionExhausted { bits: ceiling })
}

/// Forest count of the spec's order by the certified Chebyshev route.
pub fn forest_count_chebyshev(spec: &BicirculantSpec, ceiling: u32) -> Result<ForestCount, NumericError> {
    forest_count_chebyshev_at(spec, spec.n(), ceiling).map(|(f, _)| f)
}

/// As [`forest_count_chebyshev`] with the default ceiling.
pub fn forest_count_chebyshev_default(spec: &BicirculantSpec) -> Result<ForestCount, NumericError> {
    forest_count_chebyshev(spec, MAX_PRECISION)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_spec;
    use crate::laurent::{chebyshev_t_poly, forest_count_formula, forest_count_formula_at};
    use crate::numeric::ball::ratio_ball;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn contains_rational(b: &Ball, q: &BigRational) -> bool {
        let (ln, ld) = b.lower().to_ratio();
        let (un, ud) = b.upper().to_ratio();
        BigRational::new(ln, ld) <= *q && *q <= BigRational::new(un, ud)
    }

    #[test]
    fn t3_at_seven_quarters() {
        let w = CBall::real(ratio_ball(7, 4, 128));
        let t = cheb_t(3, &w);
        assert!(contains_rational(&t.re, &BigRational::new(259.into(), 16.into())));
        assert!(t.im.contains_zero());
    }

    #[test]
    fn trivial_values() {
        let w = CBall::from_f64(0.3, -1.2, 128);
        assert_eq!(cheb_t(1, &w), w);
        let one = CBall::one(128);
        for n in 0..40 {
            let t = cheb_t(n, &one);
            assert!(t.re.contains(&super::super::float::Float::one()) && t.im.contains_zero());
        }
    }

    #[test]
    fn small_forest_counts() {
        let spec = parse_spec(3, &[1, 2], &[], &[0]).unwrap();
        assert_eq!(forest_count_chebyshev_default(&spec).unwrap(), ForestCount::from(243));
        let spec = parse_spec(4, &[1, 2, 3], &[], &[0]).unwrap();
        assert_eq!(forest_count_chebyshev_default(&spec).unwrap(), ForestCount::from(3993));
        let spec = parse_spec(4, &[1, 2, 3], &[2], &[0]).unwrap();
        assert_eq!(forest_count_chebyshev_default(&spec).unwrap(), forest_count_formula(&spec).unwrap());
        let empty = parse_spec(5, &[], &[], &[]).unwrap();
        assert_eq!(forest_count_chebyshev_default(&empty).unwrap(), ForestCount::from(1));
    }

    #[test]
    fn constant_symbol_is_empty_product() {
        // k = 0: only spokes 0 on an edgeless ring, P1 = 3
        let spec = parse_spec(6, &[], &[], &[0]).unwrap();
        for n in 1..8 {
            let (f, _) = forest_count_chebyshev_at(&spec, n, MAX_PRECISION).unwrap();
            assert_eq!(f, forest_count_formula_at(&spec, n).unwrap());
        }
    }

    proptest! {
        #[test]
        fn ladder_agrees_with_exact_polynomial(n in 0u64..30, num in -40i64..40) {
            let w = CBall::real(ratio_ball(num, 8, 256));
            let exact = chebyshev_t_poly(n as usize).eval_rational(&BigRational::new(num.into(), 8.into()));
            prop_assert!(contains_rational(&cheb_t_ladder(n, &w).re, &exact));
            prop_assert!(contains_rational(&cheb_t(n, &w).re, &exact));
        }

        #[test]
        fn composition(m in 1u64..7, n in 1u64..7, x in 2.0f64..5.0) {
            let w = CBall::from_f64(x, 0.0, 256);
            let lhs = cheb_t(m, &cheb_t(n, &w));
            let rhs = cheb_t(m * n, &w);
            prop_assert!(lhs.overlaps(&rhs));
        }

        #[test]
        fn complex_arguments_match_ladder(n in 2u64..40, a in -3.0f64..3.0, b in 0.2f64..3.0) {
            let w = CBall::from_f64(a, b, 192);
            prop_assert!(cheb_t(n, &w).overlaps(&cheb_t_ladder(n, &w)));
        }
    }
}
