//! Bicirculant graph specifications.
//!
//! A bicirculant graph `BC(Z_n; R, T, S)` has a right part `g_0` and a left
//! part `g_1`, each a copy of `Z_n`. Right vertices `h_0, g_0` are joined when
//! `g - h ∈ R`, left vertices when `g - h ∈ T`, and spokes `h_0, g_1` when
//! `g - h ∈ S`. `R` and `T` are closed under negation and avoid `0`.
//!
//! Vertex ordering used by every matrix in this crate: right part at indices
//! `0..n`, left part at indices `n..2n`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::BigMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("group order must be positive, got {0}")]
    InvalidOrder(i64),
    #[error("element {element} of {set} is outside [0, {max}]")]
    OutOfRange { set: char, element: i64, max: i64 },
    #[error("element {element} appears twice in {set}")]
    DuplicateElement { set: char, element: i64 },
    #[error("0 is not allowed in {0}")]
    ZeroInRT(char),
    #[error("{set} is not closed under negation: {element} present but {missing} absent")]
    NonSymmetricConnectionSet { set: char, element: i64, missing: i64 },
    #[error("order {order} is incompatible with the connection data: {reason}")]
    IncompatibleOrder { order: u64, reason: String },
    #[error("malformed graph spec JSON: {0}")]
    Json(String),
}

/// The four structural classes, distinguished by whether the involution
/// `n/2` lies in `R`, `T`, both or neither.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GammaClass {
    G1,
    G2,
    G3,
    G4,
}

impl GammaClass {
    pub fn from_flags(half_in_r: bool, half_in_t: bool) -> Self {
        match (half_in_r, half_in_t) {
            (false, false) => GammaClass::G1,
            (true, false) => GammaClass::G2,
            (false, true) => GammaClass::G3,
            (true, true) => GammaClass::G4,
        }
    }

    /// Index `j` of the polynomial `P_j` that pairs with `P_1` for this class.
    pub fn index(self) -> usize {
        match self {
            GammaClass::G1 => 1,
            GammaClass::G2 => 2,
            GammaClass::G3 => 3,
            GammaClass::G4 => 4,
        }
    }

    /// Classes other than `G1` need an even order.
    pub fn needs_even_order(self) -> bool {
        self != GammaClass::G1
    }
}

impl fmt::Display for GammaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Γ{}", self.index())
    }
}

/// Normalized half-set representation of `BC(Z_n; R, T, S)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BicirculantSpec {
    n: u64,
    alphas: Vec<u64>,
    betas: Vec<u64>,
    gammas: Vec<u64>,
    half_in_r: bool,
    half_in_t: bool,
}

/// Wire form of a graph spec: `{"n": int, "R": [int], "T": [int], "S": [int]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecJson {
    pub n: i64,
    #[serde(rename = "R")]
    pub r: Vec<i64>,
    #[serde(rename = "T")]
    pub t: Vec<i64>,
    #[serde(rename = "S")]
    pub s: Vec<i64>,
}

fn check_range(set: char, elems: &[i64], n: i64) -> Result<(), SpecError> {
    let mut seen = std::collections::BTreeSet::new();
    for &e in elems {
        if e < 0 || e >= n {
            return Err(SpecError::OutOfRange { set, element: e, max: n - 1 });
        }
        if !seen.insert(e) {
            return Err(SpecError::DuplicateElement { set, element: e });
        }
    }
    Ok(())
}

/// Splits a symmetric connection set into its half-set and the `n/2` flag.
fn halve(set: char, elems: &[i64], n: i64) -> Result<(Vec<u64>, bool), SpecError> {
    let members: std::collections::BTreeSet<i64> = elems.iter().copied().collect();
    if members.contains(&0) {
        return Err(SpecError::ZeroInRT(set));
    }
    let mut half = Vec::new();
    let mut has_involution = false;
    for &x in &members {
        let partner = n - x;
        if !members.contains(&partner) {
            return Err(SpecError::NonSymmetricConnectionSet { set, element: x, missing: partner });
        }
        if 2 * x < n {
            half.push(x as u64);
        } else if 2 * x == n {
            has_involution = true;
        }
    }
    Ok((half, has_involution))
}

/// Validates `(n, R, T, S)` and returns the normalized spec.
pub fn parse_spec(n: i64, r: &[i64], t: &[i64], s: &[i64]) -> Result<BicirculantSpec, SpecError> {
    if n <= 0 {
        return Err(SpecError::InvalidOrder(n));
    }
    check_range('R', r, n)?;
    check_range('T', t, n)?;
    check_range('S', s, n)?;
    let (alphas, half_in_r) = halve('R', r, n)?;
    let (betas, half_in_t) = halve('T', t, n)?;
    let mut gammas: Vec<u64> = s.iter().map(|&x| x as u64).collect();
    gammas.sort_unstable();
    Ok(BicirculantSpec { n: n as u64, alphas, betas, gammas, half_in_r, half_in_t })
}

pub fn classify(spec: &BicirculantSpec) -> GammaClass {
    GammaClass::from_flags(spec.half_in_r, spec.half_in_t)
}

fn check_half_list(name: &str, list: &[u64]) -> Result<(), String> {
    if list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(format!("{name} must be strictly increasing"));
    }
    Ok(())
}

impl BicirculantSpec {
    /// Builds a spec directly from half-set data, validating it against `n`.
    pub fn from_parts(
        n: u64,
        alphas: Vec<u64>,
        betas: Vec<u64>,
        gammas: Vec<u64>,
        half_in_r: bool,
        half_in_t: bool,
    ) -> Result<Self, SpecError> {
        let incompatible = |reason: String| SpecError::IncompatibleOrder { order: n, reason };
        if n == 0 {
            return Err(SpecError::InvalidOrder(0));
        }
        check_half_list("alphas", &alphas).map_err(incompatible)?;
        check_half_list("betas", &betas).map_err(incompatible)?;
        check_half_list("gammas", &gammas).map_err(incompatible)?;
        for (name, list) in [("alphas", &alphas), ("betas", &betas)] {
            if let Some(&x) = list.iter().find(|&&x| x == 0 || 2 * x >= n) {
                return Err(incompatible(format!("{name} element {x} not in (0, n/2)")));
            }
        }
        if let Some(&g) = gammas.iter().find(|&&g| g >= n) {
            return Err(incompatible(format!("gamma {g} not in [0, n-1]")));
        }
        if (half_in_r || half_in_t) && n % 2 == 1 {
            return Err(incompatible("n/2 generator requires even n".into()));
        }
        Ok(BicirculantSpec { n, alphas, betas, gammas, half_in_r, half_in_t })
    }

    /// Same connection data (half-sets and flags) at a different order.
    pub fn with_order(&self, n: u64) -> Result<Self, SpecError> {
        Self::from_parts(
            n,
            self.alphas.clone(),
            self.betas.clone(),
            self.gammas.clone(),
            self.half_in_r,
            self.half_in_t,
        )
    }

    pub fn from_json(text: &str) -> Result<Self, SpecError> {
        let raw: SpecJson = serde_json::from_str(text).map_err(|e| SpecError::Json(e.to_string()))?;
        parse_spec(raw.n, &raw.r, &raw.t, &raw.s)
    }

    pub fn n(&self) -> u64 {
        self.n
    }
    pub fn alphas(&self) -> &[u64] {
        &self.alphas
    }
    pub fn betas(&self) -> &[u64] {
        &self.betas
    }
    pub fn gammas(&self) -> &[u64] {
        &self.gammas
    }
    pub fn half_in_r(&self) -> bool {
        self.half_in_r
    }
    pub fn half_in_t(&self) -> bool {
        self.half_in_t
    }
    pub fn class(&self) -> GammaClass {
        classify(self)
    }

    /// Full connection set `R` as sorted residues.
    pub fn r_set(&self) -> Vec<u64> {
        full_set(self.n, &self.alphas, self.half_in_r)
    }

    /// Full connection set `T` as sorted residues.
    pub fn t_set(&self) -> Vec<u64> {
        full_set(self.n, &self.betas, self.half_in_t)
    }

    pub fn has_edges(&self) -> bool {
        !(self.alphas.is_empty()
            && self.betas.is_empty()
            && self.gammas.is_empty()
            && !self.half_in_r
            && !self.half_in_t)
    }

    pub fn to_json_value(&self) -> SpecJson {
        let conv = |v: Vec<u64>| v.into_iter().map(|x| x as i64).collect();
        SpecJson {
            n: self.n as i64,
            r: conv(self.r_set()),
            t: conv(self.t_set()),
            s: conv(self.gammas.clone()),
        }
    }

    /// Canonical JSON with sorted arrays.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("spec serializes")
    }

    /// Canonical JSON of the order-independent connection data.
    pub fn family_key(&self) -> String {
        serde_json::json!({
            "alphas": self.alphas,
            "betas": self.betas,
            "gammas": self.gammas,
            "half_R": self.half_in_r,
            "half_T": self.half_in_t,
        })
        .to_string()
    }
}

impl fmt::Display for BicirculantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[u64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(
            f,
            "BC(Z_{}; {{{}}}, {{{}}}, {{{}}})",
            self.n,
            show(&self.r_set()),
            show(&self.t_set()),
            show(&self.gammas)
        )
    }
}

fn full_set(n: u64, half: &[u64], involution: bool) -> Vec<u64> {
    let mut out: Vec<u64> = half.iter().flat_map(|&a| [a, n - a]).collect();
    if involution {
        out.push(n / 2);
    }
    out.sort_unstable();
    out
}

/// 2n × 2n adjacency matrix in the block layout `[[R, S], [Sᵀ, T]]`.
pub fn adjacency_matrix(spec: &BicirculantSpec) -> BigMatrix {
    let n = spec.n as usize;
    let mut m = BigMatrix::zeros(2 * n, 2 * n);
    let r = spec.r_set();
    let t = spec.t_set();
    for i in 0..n {
        for &x in &r {
            m.set(i, (i + x as usize) % n, BigInt::from(1));
        }
        for &y in &t {
            m.set(n + i, n + (i + y as usize) % n, BigInt::from(1));
        }
        for &g in &spec.gammas {
            let j = n + (i + g as usize) % n;
            m.set(i, j, BigInt::from(1));
            m.set(j, i, BigInt::from(1));
        }
    }
    m
}

/// `I + D - A`, whose determinant counts rooted spanning forests.
pub fn forest_matrix(spec: &BicirculantSpec) -> BigMatrix {
    let adj = adjacency_matrix(spec);
    let size = adj.rows();
    let mut m = BigMatrix::zeros(size, size);
    for i in 0..size {
        let degree: BigInt = adj.row(i).iter().sum();
        for j in 0..size {
            if i == j {
                m.set(i, j, &degree + 1);
            } else {
                m.set(i, j, -adj.get(i, j));
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entries(m: &BigMatrix) -> Vec<Vec<i64>> {
        (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| i64::try_from(m.get(i, j)).unwrap()).collect())
            .collect()
    }

    #[test]
    fn parses_triangle_prism_family() {
        let spec = parse_spec(3, &[1, 2], &[], &[0]).unwrap();
        assert_eq!(spec.alphas(), &[1]);
        assert!(spec.betas().is_empty());
        assert_eq!(spec.gammas(), &[0]);
        assert_eq!(spec.class(), GammaClass::G1);
    }

    #[test]
    fn involution_sets_flag() {
        let spec = parse_spec(4, &[1, 2, 3], &[], &[0]).unwrap();
        assert_eq!(spec.alphas(), &[1]);
        assert!(spec.half_in_r());
        assert_eq!(spec.class(), GammaClass::G2);

        let only_half = parse_spec(6, &[3], &[], &[1]).unwrap();
        assert!(only_half.alphas().is_empty());
        assert!(only_half.half_in_r());
    }

    #[test]
    fn classes_follow_flags() {
        assert_eq!(parse_spec(4, &[1, 2, 3], &[2], &[0]).unwrap().class(), GammaClass::G4);
        assert_eq!(parse_spec(4, &[1, 3], &[2], &[0]).unwrap().class(), GammaClass::G3);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_spec(3, &[1], &[], &[0]),
            Err(SpecError::NonSymmetricConnectionSet { set: 'R', element: 1, missing: 2 })
        ));
        assert!(matches!(parse_spec(3, &[0], &[], &[]), Err(SpecError::ZeroInRT('R'))));
        assert!(matches!(parse_spec(3, &[], &[], &[0, 0]), Err(SpecError::DuplicateElement { .. })));
        assert!(matches!(parse_spec(3, &[], &[3], &[]), Err(SpecError::OutOfRange { .. })));
        assert!(matches!(parse_spec(3, &[], &[], &[-1]), Err(SpecError::OutOfRange { .. })));
        assert!(matches!(parse_spec(0, &[], &[], &[]), Err(SpecError::InvalidOrder(0))));
    }

    #[test]
    fn k2_adjacency() {
        let spec = parse_spec(1, &[], &[], &[0]).unwrap();
        assert_eq!(entries(&adjacency_matrix(&spec)), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(entries(&forest_matrix(&spec)), vec![vec![2, -1], vec![-1, 2]]);
    }

    #[test]
    fn triangle_with_spokes() {
        // Block layout written out by hand.
        let spec = parse_spec(3, &[1, 2], &[], &[0]).unwrap();
        let expected = vec![
            vec![0, 1, 1, 1, 0, 0],
            vec![1, 0, 1, 0, 1, 0],
            vec![1, 1, 0, 0, 0, 1],
            vec![1, 0, 0, 0, 0, 0],
            vec![0, 1, 0, 0, 0, 0],
            vec![0, 0, 1, 0, 0, 0],
        ];
        assert_eq!(entries(&adjacency_matrix(&spec)), expected);
        let fm = entries(&forest_matrix(&spec));
        let diag: Vec<i64> = (0..6).map(|i| fm[i][i]).collect();
        assert_eq!(diag, vec![4, 4, 4, 2, 2, 2]);
        for row in &fm {
            assert_eq!(row.iter().sum::<i64>(), 1);
        }
    }

    #[test]
    fn top_block_rows_are_regular() {
        let spec = parse_spec(8, &[1, 3, 4, 5, 7], &[2, 6], &[0, 5]).unwrap();
        let adj = entries(&adjacency_matrix(&spec));
        for (i, row) in adj.iter().enumerate() {
            let expected = if i < 8 { 5 + 2 } else { 2 + 2 };
            assert_eq!(row.iter().sum::<i64>(), expected);
        }
    }

    #[test]
    fn json_round_trip() {
        let spec = BicirculantSpec::from_json(r#"{"n":4,"R":[3,1,2],"T":[],"S":[0]}"#).unwrap();
        assert_eq!(spec.to_json(), r#"{"n":4,"R":[1,2,3],"T":[],"S":[0]}"#);
        assert_eq!(BicirculantSpec::from_json(&spec.to_json()).unwrap(), spec);
    }

    #[test]
    fn with_order_validates() {
        let spec = parse_spec(4, &[1, 2, 3], &[], &[0]).unwrap();
        assert!(spec.with_order(5).is_err());
        assert!(spec.with_order(2).is_err());
        let bigger = spec.with_order(10).unwrap();
        assert_eq!(bigger.r_set(), vec![1, 5, 9]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_sets() -> impl Strategy<Value = (i64, Vec<i64>, Vec<i64>, Vec<i64>)> {
            (1i64..12).prop_flat_map(|n| {
                let half = proptest::collection::btree_set(0..=n / 2, 0..3);
                let spokes = proptest::collection::btree_set(0..n, 0..4);
                (Just(n), half.clone(), half, spokes).prop_map(|(n, r, t, s)| {
                    let sym = |h: std::collections::BTreeSet<i64>| {
                        let mut v: Vec<i64> = h
                            .into_iter()
                            .filter(|&x| x >= 1 && x < n)
                            .flat_map(|x| [x, n - x])
                            .collect();
                        v.sort_unstable();
                        v.dedup();
                        v
                    };
                    (n, sym(r), sym(t), s.into_iter().collect())
                })
            })
        }

        proptest! {
            #[test]
            fn parse_ignores_element_order((n, r, t, s) in arb_sets()) {
                let a = parse_spec(n, &r, &t, &s).unwrap();
                let rev = |v: &Vec<i64>| v.iter().rev().copied().collect::<Vec<_>>();
                let b = parse_spec(n, &rev(&r), &rev(&t), &rev(&s)).unwrap();
                prop_assert_eq!(classify(&a), classify(&b));
                prop_assert_eq!(a, b);
            }

            #[test]
            fn adjacency_is_simple_and_forest_rows_sum_to_one((n, r, t, s) in arb_sets()) {
                let spec = parse_spec(n, &r, &t, &s).unwrap();
                let adj = entries(&adjacency_matrix(&spec));
                for (i, row) in adj.iter().enumerate() {
                    prop_assert_eq!(row[i], 0);
                    for (j, &v) in row.iter().enumerate() {
                        prop_assert_eq!(v, adj[j][i]);
                        prop_assert!(v == 0 || v == 1);
                    }
                }
                for row in entries(&forest_matrix(&spec)) {
                    prop_assert_eq!(row.iter().sum::<i64>(), 1);
                }
            }
        }
    }
}
