//! Exact computer algebra for cyclic symbol algebras of odd prime degree
//! over bivariate rational function fields, with machine-checkable
//! certificates for trace formulas, valuation-theoretic ramification data,
//! p-th power subspace intersections, and residues of reduced norms.
//!
//! Everything is exact: arbitrary-precision rationals, dense cyclotomic
//! arithmetic, canonical bivariate rational functions, and fraction-free
//! linear algebra. No floating point anywhere.

pub mod funcfield;
pub mod linalg;
pub mod ring;
pub mod scalars;
