//! Exact-arithmetic toolkit for plane projective curves.
//!
//! Everything here is computed over the rationals with arbitrary-precision
//! integers; there is no floating point and no randomness. The crate is
//! organised bottom-up:
//!
//! - [`algebra`]: rationals, sparse multivariate polynomials, gcd/resultant,
//!   a small exact linear solver, and the polynomial text grammar.
//! - [`geom`]: projective points, plane curves, parametrized lines/conics,
//!   local intersection multiplicities and rational intersection points.
//! - [`cluster`]: blow-up charts, infinitely near points, multiplicity
//!   sequences and proximity.
//! - [`lattice`]: the integer intersection calculus on blow-ups of the plane
//!   and step-by-step contraction of curve configurations.
//! - [`sequences`]: admissibility arithmetic on multiplicity sequences, the
//!   degree ≤ 8 enumerator, Diophantine case registry and the embedding
//!   classifier.
//! - [`cremona`]: plane rational self-maps, composition and degree
//!   bookkeeping, de Jonquières constructors and the quintic map gallery.
//! - [`deg8`]: the end-to-end degree-8 construction of two projectively
//!   non-equivalent curves with isomorphic complements.

pub mod algebra;
pub mod cluster;
pub mod cremona;
pub mod deg8;
pub mod geom;
pub mod lattice;
pub mod sequences;

pub use algebra::{MultiPoly, Rational};
pub use geom::{PlaneCurve, ProjPoint};
