//! Conchoidal transforms of projective plane curves.
//!
//! The conchoid of a curve `C` with respect to a base curve `B` and the
//! origin `A = [0:0:1]` is computed as the determinant of a Sylvester-type
//! matrix built from the equations of both curves. On top of that the crate
//! decomposes transforms into exceptional and proper parts, tests when the
//! conchoid of a curve with respect to a circle splits, iterates conchoids and
//! recognizes curves that are conchoids.
//!
//! All arithmetic is exact, over `Q` or the Gaussian rationals `Q(i)`.

pub mod algebra;
pub mod classical;
pub mod conchoid;
pub mod error;
pub mod resultant;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{Field, FieldKind, GaussianRational, Rational};

/// Polynomial with rational coefficients.
pub type QPoly = algebra::MultiPoly<Rational>;
/// Polynomial with Gaussian rational coefficients.
pub type QiPoly = algebra::MultiPoly<GaussianRational>;
