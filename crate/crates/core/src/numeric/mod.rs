//! Certified numerics: ball arithmetic, root isolation, Chebyshev products,
//! Mahler measures and asymptotic growth constants.

mod asymptotic;
pub mod ball;
mod chebyshev;
pub mod complex;
pub mod elementary;
pub mod float;
mod mahler;
mod roots;

use thiserror::Error;

use crate::laurent::LaurentError;

pub use asymptotic::{
    asymptotic_constant, asymptotic_constant_integral, class_mahler_poly, convergence_report, growth_exponent,
    ConvergenceRecord,
};
pub use ball::Ball;
pub use chebyshev::{
    cheb_t, chebyshev_enclosure, forest_count_chebyshev, forest_count_chebyshev_at, forest_count_chebyshev_default,
};
pub use complex::CBall;
pub use float::{Float, Round};
pub use mahler::{circle_samples, l1_norm, mahler_integral, mahler_roots};
pub use roots::{find_poly_roots, find_transform_roots, RootSet};

/// A certified real number.
pub type CertifiedReal = Ball;

/// First working precision of adaptive loops, in bits.
pub const START_PRECISION: u32 = 128;
/// Precision ceiling of adaptive loops, in bits.
pub const MAX_PRECISION: u32 = 16384;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericError {
    #[error("could not certify the result at {bits} bits")]
    PrecisionExhausted { bits: u32 },
    #[error("polynomial has a root on or too close to the unit circle")]
    RootOnUnitCircle,
    #[error("quadrature did not reach tolerance {tolerance:e}")]
    ToleranceNotMet { tolerance: f64 },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}
