//! Square-free parts and the square structure of forest counts.
//!
//! For each class the counts factor as `q · a(n)²` or `ℓ · b(n)²` depending
//! on the parity of `n` (Γ1) or `n/2` (Γ2–Γ4), with square-free constants
//! `q`, `ℓ` determined by the parity profile of the connection data.

use num_bigint::{BigInt, BigUint};
use num_integer::{Integer, Roots};
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exact::ForestCount;
use crate::graph::{BicirculantSpec, GammaClass};
use crate::laurent::{forest_count_formula_at, LaurentError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithmeticError {
    #[error("expected a positive integer, got {0}")]
    NonPositive(BigInt),
    #[error("{0} exceeds the 64-bit factorization range")]
    TooLarge(BigInt),
    #[error("class constant for {class} evaluates to {value}, which is not positive")]
    NegativeConstant { class: GammaClass, value: BigInt },
    #[error("n = {n}: constant {constant} does not divide f = {f}")]
    NotDivisible { n: u64, constant: BigUint, f: BigUint },
    #[error("n = {n}: f / {constant} = {quotient} is not a perfect square")]
    NotAPerfectSquare { n: u64, constant: BigUint, quotient: BigUint },
    #[error("order range {from}..{to} is empty or starts at 0")]
    InvalidRange { from: u64, to: u64 },
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// Parity counts of the half-set connection data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParityProfile {
    pub k1: u64,
    pub k2: u64,
    pub m1: u64,
    pub m2: u64,
    pub h1: u64,
    pub h2: u64,
    pub r: u64,
    pub t: u64,
    pub s: u64,
}

impl ParityProfile {
    pub fn of(spec: &BicirculantSpec) -> ParityProfile {
        let odd = |v: &[u64]| v.iter().filter(|x| *x % 2 == 1).count() as u64;
        let (a, b, g) = (spec.alphas(), spec.betas(), spec.gammas());
        ParityProfile {
            k1: odd(a),
            k2: a.len() as u64 - odd(a),
            m1: odd(b),
            m2: b.len() as u64 - odd(b),
            h1: odd(g),
            h2: g.len() as u64 - odd(g),
            r: a.len() as u64,
            t: b.len() as u64,
            s: g.len() as u64,
        }
    }

    /// `P1(1) = 2s + 1`
    pub fn p1_at_one(&self) -> BigInt {
        BigInt::from(2 * self.s + 1)
    }

    /// `P_j(-1)` for the shifts `(da, db)` added to `A(-1)` and `B(-1)`.
    fn shifted_at_minus_one(&self, da: u64, db: u64) -> BigInt {
        let a = BigInt::from(4 * self.k1 + self.s + 1 + da);
        let b = BigInt::from(4 * self.m1 + self.s + 1 + db);
        let c = BigInt::from(self.h2 as i64 - self.h1 as i64);
        a * b - &c * &c
    }

    /// `P1(-1) = (4k1+s+1)(4m1+s+1) - (h2-h1)²`
    pub fn p1_at_minus_one(&self) -> BigInt {
        self.shifted_at_minus_one(0, 0)
    }
}

/// Square-free class constants: `odd` for odd `n` (resp. `n/2`), `even` otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareStructure {
    pub class_constant_odd: u64,
    pub class_constant_even: u64,
}

/// `(v, r)` with `m = v r²` and `v` square-free.
pub fn square_free_decomposition(m: &BigInt) -> Result<(u64, u64), ArithmeticError> {
    if m.sign() != num_bigint::Sign::Plus {
        return Err(ArithmeticError::NonPositive(m.clone()));
    }
    let mut rest = m.to_u64().ok_or_else(|| ArithmeticError::TooLarge(m.clone()))?;
    let mut free = 1u64;
    let mut root = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p).saturating_mul(p) <= rest {
        if rest % p == 0 {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            root *= p.pow(e / 2);
            if e % 2 == 1 {
                free *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // rest has at most two prime factors, all above the cube root
    let s = rest.sqrt();
    if s * s == rest && rest > 1 {
        root *= s;
    } else {
        free *= rest;
    }
    Ok((free, root))
}

/// The square-free `v` with `m = v r²`.
pub fn square_free_part(m: &BigInt) -> Result<u64, ArithmeticError> {
    square_free_decomposition(m).map(|(v, _)| v)
}

fn positive_part(class: GammaClass, value: BigInt) -> Result<u64, ArithmeticError> {
    if value.sign() != num_bigint::Sign::Plus {
        return Err(ArithmeticError::NegativeConstant { class, value });
    }
    square_free_part(&value)
}

/// Raw (not yet square-free) class constants `(q_j, ℓ1)`.
pub fn raw_class_constants(spec: &BicirculantSpec) -> (BigInt, BigInt) {
    let p = ParityProfile::of(spec);
    let base = p.p1_at_one();
    let odd = match spec.class() {
        GammaClass::G1 => base.clone(),
        GammaClass::G2 => &base * p.shifted_at_minus_one(2, 0),
        GammaClass::G3 => &base * p.shifted_at_minus_one(0, 2),
        GammaClass::G4 => &base * p.shifted_at_minus_one(2, 2),
    };
    let even = &base * p.p1_at_minus_one();
    (odd, even)
}

pub fn theorem4_constants(spec: &BicirculantSpec) -> Result<SquareStructure, ArithmeticError> {
    let class = spec.class();
    let (odd, even) = raw_class_constants(spec);
    Ok(SquareStructure {
        class_constant_odd: positive_part(class, odd)?,
        class_constant_even: positive_part(class, even)?,
    })
}

/// Whether the parity selector (`n` for Γ1, `n/2` otherwise) is odd.
pub fn selector_is_odd(class: GammaClass, n: u64) -> Result<bool, ArithmeticError> {
    match class {
        GammaClass::G1 => Ok(n % 2 == 1),
        _ if n % 2 == 1 => Err(LaurentError::OddOrderForHalfClass { class, n }.into()),
        _ => Ok((n / 2) % 2 == 1),
    }
}

/// Checks `f = c · root²` for the parity-selected constant `c`; returns `(c, root)`.
pub fn verify_square_structure(
    spec: &BicirculantSpec,
    n: u64,
    f: &ForestCount,
) -> Result<(BigUint, BigUint), ArithmeticError> {
    let constants = theorem4_constants(spec)?;
    let constant = if selector_is_odd(spec.class(), n)? {
        constants.class_constant_odd
    } else {
        constants.class_constant_even
    };
    let constant = BigUint::from(constant);
    let (quotient, rem) = f.value().div_rem(&constant);
    if !rem.is_zero() {
        return Err(ArithmeticError::NotDivisible { n, constant, f: f.value().clone() });
    }
    let root = quotient.sqrt();
    if &root * &root != quotient {
        return Err(ArithmeticError::NotAPerfectSquare { n, constant, quotient });
    }
    Ok((constant, root))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceRow {
    pub n: u64,
    pub f: ForestCount,
    pub constant: BigUint,
    pub root: BigUint,
}

/// Orders in `from..=to` admissible for the class.
pub fn admissible_orders(class: GammaClass, from: u64, to: u64) -> Vec<u64> {
    (from.max(1)..=to).filter(|n| !class.needs_even_order() || n % 2 == 0).collect()
}

/// One verified row per admissible order in `from..=to`, counts taken from
/// the exact polynomial route.
pub fn sequence_table(spec: &BicirculantSpec, from: u64, to: u64) -> Result<Vec<SequenceRow>, ArithmeticError> {
    admissible_orders(spec.class(), from, to)
        .into_iter()
        .map(|n| {
            let f = forest_count_formula_at(spec, n)?;
            let (constant, root) = verify_square_structure(spec, n, &f)?;
            Ok(SequenceRow { n, f, constant, root })
        })
        .collect()
}

/// CSV with header `n,f,constant,root`.
pub fn rows_to_csv(rows: &[SequenceRow]) -> String {
    let mut out = String::from("n,f,constant,root\n");
    for r in rows {
        out.push_str(&format!("{},{},{},{}\n", r.n, r.f, r.constant, r.root));
    }
    out
}
