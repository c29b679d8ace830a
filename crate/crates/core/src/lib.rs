//! Exact-arithmetic computations in the Lie algebra `W_n` of derivations of
//! the polynomial ring `Q[x_1, ..., x_n]`.
//!
//! All coefficients are exact rationals. The ambient field of the classical
//! theory is algebraically closed; every construction implemented here is
//! coefficient-rational, so the rational subfield suffices and no floating
//! point appears anywhere.
//!
//! `W_n` is both a Lie algebra (under the commutator of derivations) and a
//! free module of rank `n` over the polynomial ring. The modules below cover
//! polynomial arithmetic, exact linear algebra over monomial-derivation
//! coordinates, Groebner bases and invariant ideals, the standard grading
//! with its `M ⊕ N` decomposition, truncated subalgebra closures, the
//! `sl_{n+1}` isomorphism of the distinguished finite-dimensional maximal
//! subalgebra, and Darboux-polynomial search.

pub mod arith;
pub mod darboux;
pub mod deriv;
pub mod grading;
pub mod ideals;
pub mod linalg;
pub mod parse;
pub mod sliso;
pub mod subalg;

pub use arith::{Monomial, MonomialOrder, Poly, Rat};
pub use deriv::Deriv;

use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum WnError {
    #[error("variable count mismatch: expected {expected}, found {found}")]
    VarMismatch { expected: usize, found: usize },
    #[error("variable index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("point/vector length {found} does not match variable count {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("gcd of an all-zero list is undefined")]
    AllZero,
    #[error("derivation coefficient of degree {degree} exceeds frame cap {cap}")]
    FrameOverflow { degree: usize, cap: usize },
    #[error("subspaces live in different frames")]
    FrameMismatch,
    #[error("point lies on the variety: every generator vanishes")]
    PointOnVariety,
    #[error("bracket not in span: [a,b] != mu1*a + mu2*b")]
    BracketNotInSpan,
    #[error("inputs are linearly dependent over the polynomial ring")]
    ADependent,
    #[error("candidate derivation already lies inside the subalgebra")]
    AlreadyInside,
    #[error("zero derivation not allowed here")]
    ZeroDerivation,
    #[error("input not homogeneous of grading index {index}")]
    NotHomogeneous { index: i64 },
    #[error("derivation is not in L = W^[-1] + W^[0] + N_1: {reason}")]
    NotInL { reason: String },
    #[error("constant polynomial not allowed here")]
    ConstantPoly,
    #[error("k = {k} out of range 1..={max}")]
    KOutOfRange { k: usize, max: usize },
    #[error("ideal must be nonzero and proper")]
    ImproperIdeal,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, WnError>;

/// Serializes a polynomial as its grammar string, so JSON reports round-trip
/// through the CLI parser.
pub fn serialize_poly<S: serde::Serializer>(p: &Poly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

/// Serializes a derivation as its `[f1, ..., fn]` grammar string.
pub fn serialize_deriv<S: serde::Serializer>(
    d: &Deriv,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&d.to_string())
}
