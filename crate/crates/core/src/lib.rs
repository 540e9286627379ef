//! Rooted spanning forest counts of bicirculant graphs.
//!
//! Three independent routes to `f(2n) = det(I + L)`: exact elimination on the
//! forest matrix, exact products of Laurent symbols over roots of unity, and
//! certified ball arithmetic on Chebyshev roots. Asymptotic constants and the
//! square-structure of the counts are computed on top.

pub mod arithmetic;
pub mod exact;
pub mod families;
pub mod graph;
pub mod laurent;
pub mod matrix;
pub mod numeric;
pub mod poly;

pub use exact::{det_exact, forest_count_oracle, ForestCount, LinearError};
pub use graph::{
    adjacency_matrix, classify, forest_matrix, parse_spec, BicirculantSpec, GammaClass, SpecError,
};
pub use laurent::{
    build_abc, build_p, cheb_transform, cyclotomic_product, forest_count_formula, forest_count_formula_at,
    ChebTransform, IntLaurentPoly, LaurentError, SymmetricPolyPack,
};
pub use matrix::BigMatrix;
pub use poly::IntPoly;
pub use arithmetic::{
    rows_to_csv, sequence_table, square_free_part, theorem4_constants, verify_square_structure, ArithmeticError,
    ParityProfile, SequenceRow, SquareStructure,
};
pub use families::{reference_family, ClosedForm, ReferenceFamily, FAMILIES};
pub use numeric::{
    asymptotic_constant, cheb_t, convergence_report, find_transform_roots, forest_count_chebyshev, mahler_integral,
    mahler_roots, Ball, CBall, CertifiedReal, NumericError, RootSet,
};
