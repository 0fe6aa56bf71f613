//! Number fields: maximal orders by Round 2, discriminants, signatures,
//! prime decomposition and composita.

mod compositum;
mod field;
pub mod fpalgebra;
pub mod linalg;
pub mod order;

pub use compositum::{
    compositum_degrees, compositum_degrees_of, compositum_resultant, is_isomorphic, squarefree_shift,
    CompositumDegrees, MAX_SHIFT,
};
pub use field::{basis_determinant, disc_valuation, field_from_poly, NumberField, PrimeDecomposition};
pub use fpalgebra::FpAlgebra;
pub use order::{dedekind_is_maximal, Order};

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumberFieldError {
    #[error("defining polynomial must have positive degree")]
    Constant,
    #[error("defining polynomial must be monic")]
    NotMonic,
    #[error("defining polynomial {0} is reducible")]
    Reducible(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} divides the index; use the maximal-order decomposition")]
    IndexDivisor(u64),
    #[error("prime {0} in the discriminant exceeds 64 bits")]
    PrimeTooLarge(String),
    #[error("no squarefree compositum resultant for shifts 1..={0}")]
    NoSquarefreeShift(i64),
    #[error("resultant values do not interpolate to an integer polynomial")]
    Interpolation,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
