//! Cross-checks of the public counting routes against each other.

use bicirc_core::{
    asymptotic_constant, det_exact, forest_count_chebyshev, forest_count_formula, forest_count_oracle,
    forest_matrix, mahler_integral, parse_spec, reference_family, sequence_table, verify_square_structure,
    BicirculantSpec, GammaClass, FAMILIES,
};
use bicirc_core::numeric::{asymptotic_constant_integral, class_mahler_poly};

fn spec(n: i64, r: &[i64], t: &[i64], s: &[i64]) -> BicirculantSpec {
    parse_spec(n, r, t, s).unwrap()
}

fn sample() -> Vec<BicirculantSpec> {
    vec![
        spec(1, &[], &[], &[0]),
        spec(5, &[1, 4], &[2, 3], &[0, 1]),
        spec(6, &[1, 5, 3], &[], &[0, 2]),
        spec(6, &[2, 4], &[3], &[1]),
        spec(8, &[1, 7, 4], &[3, 5, 4], &[0, 5]),
        spec(7, &[], &[], &[0, 3, 6]),
        spec(10, &[1, 9, 3, 7], &[2, 8, 5], &[0, 1, 4]),
    ]
}

#[test]
fn three_routes_agree() {
    for s in sample() {
        let formula = forest_count_formula(&s).unwrap();
        assert_eq!(formula, forest_count_oracle(&s), "{s:?}");
        assert_eq!(formula, forest_count_chebyshev(&s, 4096).unwrap(), "{s:?}");
        assert_eq!(&det_exact(&forest_matrix(&s)).unwrap(), &formula.to_bigint());
    }
}

#[test]
fn sample_covers_every_class() {
    let classes: Vec<GammaClass> = sample().iter().map(|s| s.class()).collect();
    for c in [GammaClass::G1, GammaClass::G2, GammaClass::G3, GammaClass::G4] {
        assert!(classes.contains(&c), "{c:?} missing");
    }
}

#[test]
fn counts_are_constant_times_square() {
    for s in sample() {
        let f = forest_count_formula(&s).unwrap();
        let (c, root) = verify_square_structure(&s, s.n(), &f).unwrap();
        assert_eq!(&c * &root * &root, *f.value());
    }
}

#[test]
fn sequence_rows_match_single_counts() {
    let fam = reference_family(2).unwrap();
    let rows = sequence_table(&fam.spec(4).unwrap(), 4, 16).unwrap();
    assert_eq!(rows.len(), 7);
    for row in rows {
        assert_eq!(row.f, forest_count_formula(&fam.spec(row.n).unwrap()).unwrap());
    }
}

#[test]
fn growth_constants_by_both_routes() {
    for fam in FAMILIES.iter() {
        let s = fam.spec(fam.min_order.max(4)).unwrap();
        let closed = fam.constant.eval(128);
        let roots = asymptotic_constant(&s, 128).unwrap();
        let quad = asymptotic_constant_integral(&s, 1e-12).unwrap();
        assert!(roots.agrees_with(&closed, 1e-30), "family {}", fam.id);
        assert!(quad.agrees_with(&closed, 1e-12), "family {}", fam.id);
        let direct = mahler_integral(&class_mahler_poly(&s), 1e-12).unwrap();
        assert!(direct.agrees_with(&quad, 1e-12));
    }
}

#[test]
fn nth_root_of_count_approaches_the_constant() {
    let fam = reference_family(1).unwrap();
    let a = fam.constant.eval(64).to_f64();
    let f = forest_count_formula(&fam.spec(200).unwrap()).unwrap();
    let log_f = f.value().bits() as f64 * std::f64::consts::LN_2;
    let estimate = (log_f / 200.0).exp();
    assert!((estimate / a - 1.0).abs() < 0.02, "{estimate} vs {a}");
}
