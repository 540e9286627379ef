//! Growth constants of forest counts and convergence of `f(2n) / M^n`.

use serde::Serialize;

use super::ball::Ball;
use super::mahler::{mahler_integral, mahler_roots};
use super::NumericError;
use crate::exact::ForestCount;
use crate::graph::{BicirculantSpec, GammaClass};
use crate::laurent::{build_p, forest_count_formula_at, IntLaurentPoly, LaurentError};

/// The polynomial whose Mahler measure is the growth constant: `P1` for Γ1,
/// `P_j · P1` for the half-order classes.
pub fn class_mahler_poly(spec: &BicirculantSpec) -> IntLaurentPoly {
    let pack = build_p(spec);
    match spec.class() {
        GammaClass::G1 => pack.p(1).clone(),
        class => pack.class_poly(class).mul(pack.p(1)),
    }
}

/// Growth constant by the root-moduli route.
pub fn asymptotic_constant(spec: &BicirculantSpec, prec: u32) -> Result<Ball, NumericError> {
    mahler_roots(&class_mahler_poly(spec), prec)
}

/// Growth constant by quadrature.
pub fn asymptotic_constant_integral(spec: &BicirculantSpec, tolerance: f64) -> Result<Ball, NumericError> {
    mahler_integral(&class_mahler_poly(spec), tolerance)
}

/// Exponent `e` with `f(2n) ~ M^e`.
pub fn growth_exponent(class: GammaClass, n: u64) -> Result<u64, NumericError> {
    match class {
        GammaClass::G1 => Ok(n),
        _ if n % 2 == 1 => Err(LaurentError::OddOrderForHalfClass { class, n }.into()),
        _ => Ok(n / 2),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergenceRecord {
    pub n: u64,
    pub count: ForestCount,
    pub constant: Ball,
    pub ratio: Ball,
}

#[derive(Serialize)]
struct BallJson {
    mid: String,
    rad: String,
}

#[derive(Serialize)]
struct RecordJson {
    n: u64,
    count: String,
    constant: BallJson,
    ratio: BallJson,
}

fn ball_json(b: &Ball) -> BallJson {
    BallJson { mid: b.mid_decimal(), rad: b.rad_decimal() }
}

impl ConvergenceRecord {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(RecordJson {
            n: self.n,
            count: self.count.to_string(),
            constant: ball_json(&self.constant),
            ratio: ball_json(&self.ratio),
        })
        .expect("serializable")
    }
}

/// `f(2n) / M^e` for each requested order, with exact counts and a
/// certified constant.
pub fn convergence_report(
    spec: &BicirculantSpec,
    orders: &[u64],
    prec: u32,
) -> Result<Vec<ConvergenceRecord>, NumericError> {
    let class = spec.class();
    let exps = orders.iter().map(|&n| growth_exponent(class, n)).collect::<Result<Vec<_>, _>>()?;
    let constant = asymptotic_constant(spec, prec)?;
    orders
        .iter()
        .zip(exps)
        .map(|(&n, e)| {
            let count = forest_count_formula_at(spec, n)?;
            let f = Ball::from_int(count.to_bigint(), prec);
            let ratio = f.div(&constant.pow(e)).ok_or(NumericError::PrecisionExhausted { bits: prec })?;
            Ok(ConvergenceRecord { n, count, constant: constant.clone(), ratio })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_spec;
    use crate::numeric::float::Float;

    fn prism() -> BicirculantSpec {
        parse_spec(3, &[1, 2], &[], &[0]).unwrap()
    }

    #[test]
    fn ratio_at_twenty_is_near_one() {
        let rec = convergence_report(&prism(), &[20], 128).unwrap();
        assert!(rec[0].ratio.within(&Ball::one(128), 1e-9));
    }

    #[test]
    fn ratio_at_three_is_direct_quotient() {
        let rec = convergence_report(&prism(), &[3], 128).unwrap();
        let a = asymptotic_constant(&prism(), 128).unwrap();
        let direct = Ball::from_int(243, 128).div(&a.pow(3)).unwrap();
        assert!(rec[0].ratio.overlaps(&direct));
        assert_eq!(rec[0].count, ForestCount::from(243));
    }

    #[test]
    fn empty_graph_ratio_is_one() {
        let empty = parse_spec(4, &[], &[], &[]).unwrap();
        for rec in convergence_report(&empty, &[1, 2, 5], 64).unwrap() {
            assert!(rec.ratio.contains(&Float::one()) && rec.ratio.is_exact());
            assert!(rec.constant.contains(&Float::one()));
        }
    }

    #[test]
    fn odd_order_rejected_for_half_classes() {
        let spec = parse_spec(4, &[1, 2, 3], &[], &[0]).unwrap();
        assert!(convergence_report(&spec, &[4, 5], 64).is_err());
    }

    #[test]
    fn json_record_shape() {
        let rec = convergence_report(&prism(), &[5], 128).unwrap();
        let v = rec[0].to_json_value();
        assert_eq!(v["n"], 5);
        assert!(v["count"].is_string());
        assert!(v["constant"]["mid"].as_str().unwrap().starts_with("6.37228132"));
        assert!(v["ratio"]["rad"].is_string());
    }
}
