//! Exact rational numbers and sparse multivariate polynomials.
//!
//! `Rational` is `num_rational::BigRational` (always reduced, positive
//! denominator), re-exported with a few parsing/formatting helpers. Sparse
//! polynomials are maps from exponent vectors to nonzero coefficients, with
//! graded-lexicographic term order (x > y > z).

mod linalg;
mod multipoly;
mod parser;
mod rational;

pub use linalg::{kernel_basis, solve_linear};
pub use multipoly::{gcd, resultant, AlgebraError, MultiPoly};
pub use parser::{parse_poly, ParseError};
pub use rational::{format_rational, parse_rational, rat, rational_gcd, rational_roots, Rational};
