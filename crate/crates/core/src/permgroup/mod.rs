//! Permutation groups: closure, conjugacy classes, subgroup lattice up to
//! conjugacy, Gassmann equivalence and decomposition/inertia analysis.

mod decomposition;
mod group;
mod lattice;
mod perm;
mod psl27;

pub use decomposition::{
    decomposition_pairs, realizable_splittings, splitting_from_decomposition, RamificationMode, RealizedSplitting,
    SplittingPattern,
};
pub use group::{
    conjugacy_classes, group_closure, group_closure_with_cap, ConjClass, PermGroup,
    DEFAULT_ORDER_CAP,
};
pub use lattice::{
    are_conjugate, class_intersections, coset_action, induced_trivial_character,
    is_quasi_conjugate, subgroup_classes, ClassIntersection, CosetAction,
    QuasiConjugacyCertificate, SubgroupClass,
};
pub use perm::{CycleType, Perm};
pub use psl27::{psl27_on_7_points, psl27_on_projective_line};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group order exceeds cap {cap} (reached {partial} elements)")]
    OrderCapExceeded { cap: usize, partial: usize },
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("inertia group is not normal in the decomposition group")]
    NotNormal,
    #[error("decomposition group modulo inertia is not cyclic")]
    QuotientNotCyclic,
    #[error("inertia orbits inside one decomposition orbit have different sizes")]
    UnequalInertiaOrbits,
    #[error("action is not transitive")]
    NotTransitive,
    #[error("induced character value {0} is not an integer")]
    NonIntegralCharacter(String),
}
