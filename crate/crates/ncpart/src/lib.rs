//! Exact combinatorial enumeration for the non-crossing partition posets of the
//! classical reflection groups, together with brute-force verification oracles.
//!
//! The crate provides:
//!
//! * [`group`] — signed permutations realising the Weyl groups of types A, B and D,
//!   with absolute length, absolute order, cycle decompositions and type
//!   classification of elements;
//! * [`coxtype`] — canonical (possibly reducible) Coxeter types with a parse/print
//!   grammar;
//! * [`oracle`] — exhaustive enumeration of minimal reflection factorisations,
//!   generalised non-crossing partition posets, multichain counts, Möbius functions
//!   and zeta polynomials at desk scale;
//! * [`formulas`] — closed-form evaluators for decomposition numbers and
//!   multichain counts, all in exact big-integer/rational arithmetic;
//! * [`bijections`] — the explicit maps from factorisation tuples to m-divisible
//!   non-crossing partitions (circle, symmetric circle, annulus) with block
//!   statistics and isomorphism verification;
//! * [`triangles`] — M-triangles, the dual transform, the type-D F-side polynomial,
//!   the F=M comparison, and expected-maximal-interval ratios;
//! * [`exceptional`] — decomposition-number tables for the exceptional groups and
//!   rank-selected chain polynomials in the divisibility parameter m;
//! * [`inversion`] — truncated multivariate power series with multivariate
//!   (Lagrange–Good) inversion and exact determinant identity checks;
//! * [`verify`] — the acceptance suites cross-checking every closed formula
//!   against the oracles.
//!
//! All arithmetic is exact: `BigInt`/`BigRational` coefficients throughout, no
//! floating point anywhere.

pub mod bijections;
pub mod coxtype;
pub mod error;
pub mod exceptional;
pub mod formulas;
pub mod group;
pub mod inversion;
pub mod num;
pub mod oracle;
pub mod poly;
pub mod triangles;
pub mod verify;

pub use error::Error;

/// Convenience result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
