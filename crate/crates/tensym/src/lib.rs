//! Spectral symmetry analysis of weakly irreducible nonnegative tensors and
//! connected uniform hypergraphs.
//!
//! The crate computes, with exact rational arithmetic wherever the underlying
//! quantity is rational:
//!
//! * generalized traces of a sparse tensor and the characteristic-polynomial
//!   coefficients they determine ([`trace`], [`charpoly`]),
//! * the spectral radius of a nonnegative weakly irreducible tensor by shifted
//!   power iteration, and an independent characteristic-polynomial oracle for
//!   dimension-2 tensors via Sylvester resultants ([`spectral`]),
//! * spectral symmetry verdicts, `(m, l)`-colorings, odd transversals and
//!   chromatic upper bounds ([`symmetry`]),
//! * the full group of normalized unimodular diagonal matrices that fix the
//!   tensor up to a phase, solved exactly over the rational circle group with
//!   Smith normal forms ([`group`], [`snf`]),
//! * uniform hypergraphs, their adjacency/Laplacian tensors and generalized
//!   power constructions ([`hypergraph`], [`tensor`]).
//!
//! Vertex and index labels are 1-based throughout, matching the text formats
//! described in the module docs.

pub mod charpoly;
pub mod group;
pub mod hypergraph;
pub mod poly;
pub mod snf;
pub mod spectral;
pub mod symmetry;
pub mod tensor;
pub mod trace;

pub use hypergraph::{GeneralizedPowerSpec, Hypergraph};
pub use tensor::{Polar, PolarTensor, SparseTensor, UnimodularDiagonal};


use num_bigint::BigInt;
use num_rational::BigRational;

/// Shorthand for an exact rational built from two machine integers.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Reduce a rational modulo 1 into the half-open interval `[0, 1)`.
pub fn frac_mod_one(r: &BigRational) -> BigRational {
    r - r.floor()
}
