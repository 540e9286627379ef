//! Exact products over roots of unity and the closed forest-count formula.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{build_p, IntLaurentPoly, LaurentError};
use crate::exact::ForestCount;
use crate::graph::{BicirculantSpec, GammaClass};
use crate::poly::{resultant, IntPoly};

/// `∏_{j=0}^{n-1} P(ε_n^j)` for `ε_n = exp(2πi/n)`, exactly.
///
/// Writing `P(z) = z^lo q(z)`, the product equals
/// `(-1)^{lo(n-1)} Res(z^n - 1, q)` because `∏_j ε_n^j = (-1)^{n-1}`.
pub fn cyclotomic_product(p: &IntLaurentPoly, n: u64) -> Result<BigInt, LaurentError> {
    if p.is_zero() {
        return Err(LaurentError::ZeroPolynomial);
    }
    if n == 0 {
        return Err(LaurentError::ZeroOrder);
    }
    let (lo, q) = p.to_poly();
    let unity = IntPoly::monomial(BigInt::one(), n as usize).sub(&IntPoly::constant(BigInt::one()));
    let res = resultant(&unity, &q).expect("both polynomials nonzero");
    let flip = (lo.rem_euclid(2) == 1) && (n - 1) % 2 == 1;
    Ok(if flip { -res } else { res })
}

/// Forest count of the spec's own order.
pub fn forest_count_formula(spec: &BicirculantSpec) -> Result<ForestCount, LaurentError> {
    forest_count_formula_at(spec, spec.n())
}

/// Forest count for the connection data of `spec` at order `n`.
///
/// `n` need not be a valid order for the data as a simple graph; for small
/// `n` the value is the rooted-forest count of the circulant multigraph with
/// the same symbol.
pub fn forest_count_formula_at(spec: &BicirculantSpec, n: u64) -> Result<ForestCount, LaurentError> {
    if n == 0 {
        return Err(LaurentError::ZeroOrder);
    }
    let class = spec.class();
    let pack = build_p(spec);
    let value = match class {
        GammaClass::G1 => cyclotomic_product(pack.p(1), n)?,
        _ => {
            if n % 2 == 1 {
                return Err(LaurentError::OddOrderForHalfClass { class, n });
            }
            let half = n / 2;
            let pj = pack.class_poly(class);
            let numerator = cyclotomic_product(pj, n)? * cyclotomic_product(pack.p(1), half)?;
            let denominator = cyclotomic_product(pj, half)?;
            let (q, r) = numerator.div_rem(&denominator);
            if !r.is_zero() {
                return Err(LaurentError::NonDivisible { numerator, denominator });
            }
            q
        }
    };
    assert!(!value.is_zero(), "forest count cannot vanish");
    Ok(ForestCount::new(value.abs().to_biguint().unwrap()))
}
