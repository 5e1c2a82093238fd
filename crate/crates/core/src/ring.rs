//! Ring and field abstractions shared by every exact arithmetic type in the
//! crate.
//!
//! All coefficient types are immutable values; operations take references and
//! return fresh values, so everything here is safe to share across threads.

use std::fmt::Debug;

/// A commutative integral domain with exact division, which is all the
/// fraction-free elimination and determinant routines need.
///
/// `zero_like`/`one_like` produce the additive and multiplicative identities
/// of the *same* structure as `self` (same prime, same base field); scalar
/// types that carry runtime context have no context-free constants.
pub trait Domain: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact division. Callers only invoke this when divisibility is
    /// guaranteed (fraction-free elimination divides by earlier pivots);
    /// panics on inexact division or division by zero.
    fn exact_div(&self, other: &Self) -> Self;
    /// Pivot preference for elimination: smaller is better. Polynomial-like
    /// entries report their total degree to keep pivots small.
    fn pivot_weight(&self) -> usize {
        0
    }
}

/// A field: a domain where every nonzero element is invertible.
pub trait Field: Domain {
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    /// Scale a row in place so that fraction-free elimination can work on
    /// denominator-free entries. The default is a no-op; fraction fields
    /// override it.
    fn clear_denominators(_row: &mut [Self]) {}
}

/// Base scalar field of a symbol algebra. Carries the characteristic and an
/// integer embedding, plus a fixed primitive p-th root of unity when the
/// field has one.
pub trait Scalar: Field {
    /// 0 for characteristic zero, p for the prime field contexts.
    fn characteristic(&self) -> u32;
    /// Image of an integer, using `self` for field context.
    fn from_int(&self, n: i64) -> Self;
    /// A primitive p-th root of unity for this field's p, when one exists.
    fn pth_root_of_unity(&self) -> Option<Self>;
}
