//! Exact computer algebra for inversion polynomials and characteristic numbers.
//!
//! The crate computes the Lagrange inversion polynomials `L_n`, the
//! multiplicative inversion polynomials `M_n` (and their exponential variant),
//! generating functions of monomial Chern numbers of `CP^n`, theta divisors
//! and projective hypersurfaces, the theta-basis expansion of complex
//! cobordism classes, face censuses of associahedra and permutohedra, and a
//! small laboratory of Chern-number divisibility checks.
//!
//! Everything is exact. Coefficients are arbitrary-precision integers or
//! rationals, and every identity the crate asserts is reachable through two
//! independent computations.
//!
//! ```
//! use chern_inversion::inversion::{lagrange_polynomial, Route};
//!
//! let l4 = lagrange_polynomial(4, Route::Recursive).unwrap();
//! assert_eq!(l4.polynomial.to_string(), "-t4 + 6*t1*t3 + 3*t2^2 - 21*t1^2*t2 + 14*t1^4");
//! ```

pub mod chern;
pub mod cobordism;
pub mod divisibility;
mod error;
pub mod graded;
pub mod inversion;
pub mod json;
pub mod partition;
pub mod polytope;
pub mod ring;
pub mod series;
pub mod symmetric;
pub mod verify;

pub use error::{Error, Result};
pub use graded::{GradedPoly, IntPoly, RatPoly, ThetaExpression};
pub use partition::Partition;
pub use ring::{ExactRational, Ring};
pub use series::TruncatedSeries;
