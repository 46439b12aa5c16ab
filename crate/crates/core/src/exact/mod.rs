//! Exact scalar and dense linear algebra over the Gaussian rationals.

mod linalg;
mod matrix;
mod scalar;

pub use linalg::{is_positive_definite, kernel, lie_closure, solve, Definiteness, Solution, Span};
pub(crate) use linalg::{flatten, unflatten};
pub use matrix::{Matrix, Vector};
pub use scalar::{format_rational, parse_rational, rat, Rational, Scalar};
