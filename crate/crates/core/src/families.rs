//! Built-in reference families with published constants.

use serde::Serialize;

use crate::graph::{parse_spec, BicirculantSpec, GammaClass, SpecError};
use crate::numeric::Ball;

/// `scale · ∏ (a + b√c)^pow`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClosedForm {
    pub scale_num: i64,
    pub scale_den: i64,
    pub factors: &'static [(i64, i64, i64, u32)],
}

impl ClosedForm {
    pub fn eval(&self, prec: u32) -> Ball {
        let mut acc = Ball::from_ratio(&self.scale_num.into(), &self.scale_den.into(), prec);
        for &(a, b, c, pow) in self.factors {
            let root = Ball::from_int(c, prec).sqrt().expect("non-negative radicand");
            let f = Ball::from_int(a, prec).add(&root.mul_int(b));
            acc = acc.mul(&f.pow(pow as u64));
        }
        acc
    }
}

impl std::fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.scale_num, self.scale_den)?;
        for &(a, b, c, pow) in self.factors {
            let coef = if b == 1 { String::new() } else { b.to_string() };
            write!(f, "·({a}+{coef}√{c})")?;
            if pow != 1 {
                write!(f, "^{pow}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ReferenceFamily {
    pub id: u8,
    pub description: &'static str,
    pub min_order: u64,
    pub class: GammaClass,
    /// Square-free constant for odd `n` (Γ1) or odd `n/2`.
    pub odd_constant: u64,
    /// Square-free constant for even `n` (Γ1) or even `n/2`.
    pub even_constant: u64,
    /// Growth constant.
    pub constant: ClosedForm,
    /// Name of the growth constant: `A`, `B`, `C` or `D`.
    pub constant_name: char,
    with_half_r: bool,
    with_half_t: bool,
    ring_t: bool,
}

impl ReferenceFamily {
    /// The member of order `n`.
    pub fn spec(&self, n: u64) -> Result<BicirculantSpec, SpecError> {
        if n < self.min_order {
            return Err(SpecError::IncompatibleOrder { order: n, reason: format!("family needs n >= {}", self.min_order) });
        }
        let n = n as i64;
        let ring = vec![1, n - 1];
        let mut r = ring.clone();
        if self.with_half_r {
            r.push(n / 2);
        }
        let mut t = if self.ring_t { ring } else { Vec::new() };
        if self.with_half_t {
            t.push(n / 2);
        }
        parse_spec(n, &r, &t, &[0])
    }

    /// Valid orders up to `max`.
    pub fn orders(&self, max: u64) -> Vec<u64> {
        (self.min_order..=max).filter(|n| !self.class.needs_even_order() || n % 2 == 0).collect()
    }
}

const A1: &[(i64, i64, i64, u32)] = &[(7, 1, 33, 1)];
const B2: &[(i64, i64, i64, u32)] = &[(7, 1, 33, 1), (11, 1, 105, 1)];
const C3: &[(i64, i64, i64, u32)] = &[(7, 1, 33, 1), (15, 1, 161, 1)];
const D4: &[(i64, i64, i64, u32)] = &[(7, 1, 33, 1), (23, 1, 465, 1)];
const A5: &[(i64, i64, i64, u32)] = &[(3, 1, 5, 1), (5, 1, 21, 1)];
const D6: &[(i64, i64, i64, u32)] = &[(3, 1, 5, 1), (5, 1, 21, 2), (7, 3, 5, 1)];

const fn family(
    id: u8,
    description: &'static str,
    class: GammaClass,
    flags: (bool, bool, bool),
    constants: (u64, u64),
    constant_name: char,
    constant: ClosedForm,
) -> ReferenceFamily {
    ReferenceFamily {
        id,
        description,
        min_order: if flags.0 || flags.1 { 4 } else { 3 },
        class,
        odd_constant: constants.0,
        even_constant: constants.1,
        constant,
        constant_name,
        with_half_r: flags.0,
        with_half_t: flags.1,
        ring_t: flags.2,
    }
}

const fn form(num: i64, den: i64, factors: &'static [(i64, i64, i64, u32)]) -> ClosedForm {
    ClosedForm { scale_num: num, scale_den: den, factors }
}

pub const FAMILIES: [ReferenceFamily; 6] = [
    family(1, "BC(Z_n; {±1}, ∅, {0})", GammaClass::G1, (false, false, false), (3, 33), 'A', form(1, 2, A1)),
    family(2, "BC(Z_n; {±1, n/2}, ∅, {0})", GammaClass::G2, (true, false, false), (5, 33), 'B', form(1, 4, B2)),
    family(3, "BC(Z_n; {±1}, {n/2}, {0})", GammaClass::G3, (false, true, false), (69, 33), 'C', form(1, 4, C3)),
    family(4, "BC(Z_n; {±1, n/2}, {n/2}, {0})", GammaClass::G4, (true, true, false), (93, 33), 'D', form(1, 4, D4)),
    family(5, "BC(Z_n; {±1}, {±1}, {0}) ≅ Cay(D_2n, {a, a⁻¹, b})", GammaClass::G1, (false, false, true), (3, 105), 'A', form(1, 4, A5)),
    family(
        6,
        "BC(Z_n; {±1, n/2}, {±1, n/2}, {0}) ≅ Cay(D_2n, {a, a⁻¹, a^(n/2), b})",
        GammaClass::G4,
        (true, true, true),
        (21, 105),
        'D',
        form(1, 16, D6),
    ),
];

pub fn reference_family(id: u8) -> Option<&'static ReferenceFamily> {
    FAMILIES.iter().find(|f| f.id == id)
}
