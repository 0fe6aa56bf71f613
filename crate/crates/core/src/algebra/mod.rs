//! Exact arithmetic on integers and polynomials.

pub mod factor_fp;
pub mod factor_z;
pub mod factorization;
pub mod integer;
pub mod interpolate;
pub mod modpoly;
pub mod poly;
pub mod resultant;
pub mod sturm;

pub use factor_fp::{factor_mod_p, factor_mod_p_seeded, DEFAULT_SEED};
pub use factor_z::factor_over_z;
pub use factorization::{Factorization, IntFactorization, ModFactorization};
pub use modpoly::ModPolynomial;
pub use poly::IntPolynomial;
pub use resultant::{poly_discriminant, poly_resultant};
pub use sturm::count_real_roots;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("constant polynomial")]
    ConstantPolynomial,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
}
