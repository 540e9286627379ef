//! The symbol polynomials `A`, `B`, `C` and the four products `P_1..P_4`.

use num_bigint::BigInt;

use super::IntLaurentPoly;
use crate::graph::{BicirculantSpec, GammaClass};

/// `A`, `B`, `C` and `P_1..P_4` for one spec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricPolyPack {
    pub a: IntLaurentPoly,
    pub b: IntLaurentPoly,
    pub c: IntLaurentPoly,
    /// `p[0]` is `P_1`, ..., `p[3]` is `P_4`.
    pub p: [IntLaurentPoly; 4],
}

impl SymmetricPolyPack {
    /// `P_j` for `j` in `1..=4`.
    pub fn p(&self, j: usize) -> &IntLaurentPoly {
        &self.p[j - 1]
    }

    /// The polynomial paired with `P_1` for the given class (`P_1` itself for `G1`).
    pub fn class_poly(&self, class: GammaClass) -> &IntLaurentPoly {
        self.p(class.index())
    }

    /// Palindromic degrees of `P_1..P_4`.
    pub fn degrees(&self) -> [usize; 4] {
        std::array::from_fn(|i| self.p[i].palindromic_degree().expect("P_j is palindromic and nonzero"))
    }

    /// The shared degree `k`, when all four agree.
    ///
    /// They can disagree when the leading terms of `A·B` and `C(z)C(z^-1)`
    /// cancel.
    pub fn common_degree(&self) -> Option<usize> {
        let d = self.degrees();
        d.iter().all(|&x| x == d[0]).then_some(d[0])
    }
}

fn diagonal_symbol(half: &[u64], s: usize) -> IntLaurentPoly {
    let base = IntLaurentPoly::constant(BigInt::from(2 * half.len() + s + 1));
    half.iter().fold(base, |acc, &x| acc.sub(&IntLaurentPoly::symmetric_pair(1, x as i64)))
}

/// `A = 2r+s+1 - Σ(z^α + z^-α)`, `B = 2t+s+1 - Σ(z^β + z^-β)`, `C = -Σ z^γ`.
///
/// The `n/2` generators are not counted in `r` or `t`; they enter through the
/// `+2` shifts of `P_2..P_4`.
pub fn build_abc(spec: &BicirculantSpec) -> (IntLaurentPoly, IntLaurentPoly, IntLaurentPoly) {
    let s = spec.gammas().len();
    let a = diagonal_symbol(spec.alphas(), s);
    let b = diagonal_symbol(spec.betas(), s);
    let c = spec
        .gammas()
        .iter()
        .fold(IntLaurentPoly::zero(), |acc, &g| acc.sub(&IntLaurentPoly::monomial(1, g as i64)));
    (a, b, c)
}

pub fn build_p(spec: &BicirculantSpec) -> SymmetricPolyPack {
    let (a, b, c) = build_abc(spec);
    let cc = c.reflect().mul(&c);
    let a2 = a.add_constant(2);
    let b2 = b.add_constant(2);
    let p = [
        a.mul(&b).sub(&cc),
        a2.mul(&b).sub(&cc),
        a.mul(&b2).sub(&cc),
        a2.mul(&b2).sub(&cc),
    ];
    SymmetricPolyPack { a, b, c, p }
}
