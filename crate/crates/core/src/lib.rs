//! Exact computation in Boolean metric spaces.
//!
//! Spaces are finite subsets of `B^n` for a finite atomic Boolean algebra
//! `B`, metrized by `d(x, y) = ⋁ (x_i △ y_i)`. The crate computes α-profiles,
//! bases, convex hulls and orthogonal complements, decides and constructs
//! isometries, and extends isometries and contractions between subsets of a
//! convex space to the whole space. Every constructed map is checked against
//! the definitions before it is returned.
//!
//! The [`counterexamples`] module works in the finite-cofinite algebra over
//! the naturals, where such extensions can fail.

pub mod algebra;
pub mod counterexamples;
pub mod error;
pub mod extension;
pub mod generate;
pub mod invariants;
pub mod metric;
pub mod suites;

pub use algebra::{Algebra, BooleanElement, Bits, Element, FinCof};
pub use error::{Error, Result};
pub use invariants::{AlphaProfile, Base};
pub use metric::{ConvexCoefficients, FiniteSpace, MapKind, MapVerdict, PartialMap, Point};
