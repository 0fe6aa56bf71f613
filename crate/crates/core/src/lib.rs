//! Exact tools for septic number fields: polynomial arithmetic, the
//! PSL(2,7) group engine, splitting-type combinatorics, maximal orders,
//! arithmetic-equivalence certificates and a search over field tables.

pub mod algebra;
pub mod equivalence;
pub mod numberfield;
pub mod permgroup;
pub mod search;
pub mod splitting;

pub use algebra::{AlgebraError, IntPolynomial, ModPolynomial};
pub use equivalence::{
    check_equivalence, compare_ramification_sums, gassmann_certificate_psl27, identify_galois7,
    EquivalenceCertificate, EquivalenceError, GaloisLabel, GaloisVerdict, RamSumComparison, Verdict,
};
pub use numberfield::{
    compositum_degrees, field_from_poly, is_isomorphic, NumberField, NumberFieldError, PrimeDecomposition,
};
pub use permgroup::{CycleType, GroupError, Perm, PermGroup, RamificationMode};
pub use search::{run_search, verify_reference_results, SearchConfig, SearchReport, VerificationReport};
pub use splitting::{ArithmeticType, FactorizationType, SplittingError};
