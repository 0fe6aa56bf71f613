//! Splitting data from decomposition and inertia subgroups.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::group::PermGroup;
use super::lattice::ElementSet;
use super::GroupError;
use crate::algebra::integer::is_prime_u64;

/// Multiset of `(e, f)` pairs describing how a prime splits.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct SplittingPattern {
    pairs: Vec<(usize, usize)>,
}

impl SplittingPattern {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        SplittingPattern { pairs }
    }

    /// `(e, f)` pairs, sorted.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// `sum e*f`.
    pub fn degree(&self) -> usize {
        self.pairs.iter().map(|(e, f)| e * f).sum()
    }
}

impl fmt::Display for SplittingPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(e, ff)| format!("(e={e},f={ff})")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Reads off `(e, f)` for each orbit of `e_group` on the points of `action`:
/// `e` is the common size of the `i_group`-orbits inside the orbit and `f`
/// their number.
pub fn splitting_from_decomposition(
    action: &PermGroup,
    e_group: &PermGroup,
    i_group: &PermGroup,
) -> Result<SplittingPattern, GroupError> {
    if !e_group.is_subgroup_of(action) {
        return Err(GroupError::NotASubgroup("decomposition group is not in the action group".into()));
    }
    if !i_group.is_subgroup_of(e_group) {
        return Err(GroupError::NotASubgroup("inertia group is not in the decomposition group".into()));
    }
    for x in e_group.generators() {
        for y in i_group.generators() {
            if !i_group.contains(&y.conjugate_by(x)) {
                return Err(GroupError::NotNormal);
            }
        }
    }
    let quotient = e_group.order() / i_group.order();
    let cyclic = quotient == 1
        || e_group.elements().iter().any(|x| {
            let mut m = 1;
            let mut y = x.clone();
            while !i_group.contains(&y) {
                y = y.then(x);
                m += 1;
            }
            m == quotient
        });
    if !cyclic {
        return Err(GroupError::QuotientNotCyclic);
    }
    let i_orbits = i_group.orbits();
    let mut orbit_of = vec![0; action.degree()];
    for (k, o) in i_orbits.iter().enumerate() {
        for &x in o {
            orbit_of[x] = k;
        }
    }
    let mut pairs = Vec::new();
    for o in e_group.orbits() {
        let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
        for &x in &o {
            *sizes.entry(orbit_of[x]).or_default() += 1;
        }
        let mut vals = sizes.values();
        let e = *vals.next().expect("nonempty orbit");
        if vals.any(|&s| s != e) {
            return Err(GroupError::UnequalInertiaOrbits);
        }
        let f = sizes.len();
        debug_assert_eq!(e * f, o.len());
        pairs.push((e, f));
    }
    Ok(SplittingPattern::new(pairs))
}

/// Constraint placed on inertia groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RamificationMode {
    /// Inertia cyclic.
    Tame,
    /// Residue characteristic `p`: inertia has a normal Sylow-`p` subgroup
    /// with cyclic quotient.
    Wild(u64),
    /// Union of `Tame` and `Wild(p)` over the primes dividing the group order.
    Any,
}

/// A realizable pattern with the first `(E, I)` pair found for it.
#[derive(Clone, Debug)]
pub struct RealizedSplitting {
    pub pattern: SplittingPattern,
    pub decomposition: PermGroup,
    pub inertia: PermGroup,
}

struct Orders {
    of: Vec<u64>,
}

impl Orders {
    fn new(g: &PermGroup) -> Self {
        Orders { of: g.elements().iter().map(|p| p.order()).collect() }
    }
}

fn is_cyclic_set(orders: &Orders, set: &ElementSet) -> bool {
    let n = set.len() as u64;
    set.iter().any(|x| orders.of[x] == n)
}

fn is_p_power(mut k: u64, p: u64) -> bool {
    while k % p == 0 {
        k /= p;
    }
    k == 1
}

/// Normal Sylow-`p` subgroup of `i` with cyclic quotient.
fn wild_ok(g: &PermGroup, orders: &Orders, i: &ElementSet, p: u64) -> bool {
    let n = i.len() as u64;
    let mut sylow = 1u64;
    let mut m = n;
    while m % p == 0 {
        m /= p;
        sylow *= p;
    }
    let p_elems: Vec<usize> = i.iter().filter(|&x| is_p_power(orders.of[x], p)).collect();
    if p_elems.len() as u64 != sylow {
        // Sylow subgroup not unique
        return false;
    }
    let p_set = ElementSet::from_indices(g.order(), p_elems);
    // I/P cyclic of order m: some x has x^k in P first at k = m.
    i.iter().any(|x| {
        let mut y = x;
        let mut k = 1;
        while !p_set.contains(y) {
            y = g.mul(y, x);
            k += 1;
        }
        k == m
    })
}

fn inertia_ok(g: &PermGroup, orders: &Orders, i: &ElementSet, mode: RamificationMode) -> bool {
    match mode {
        RamificationMode::Tame => is_cyclic_set(orders, i),
        RamificationMode::Wild(p) => wild_ok(g, orders, i, p),
        RamificationMode::Any => {
            is_cyclic_set(orders, i)
                || (2..=g.order() as u64)
                    .filter(|&p| g.order() as u64 % p == 0 && is_prime_u64(p))
                    .any(|p| wild_ok(g, orders, i, p))
        }
    }
}

/// Pairs `(E, I)` with `I ⊴ E`, `E/I` cyclic and `I` allowed by `mode`;
/// `E` runs over subgroup class representatives, `I` over all subgroups.
fn admissible_pairs(action: &PermGroup, mode: RamificationMode) -> Vec<(ElementSet, ElementSet)> {
    let orders = Orders::new(action);
    let all = action.all_subgroup_sets();
    let mut out = Vec::new();
    for class in action.subgroup_classes() {
        let e_set = &class.conjugates[0];
        let e_gens = &class.rep_generators;
        let e_order = class.order;
        for (_, i_set) in &all {
            let i_order = i_set.len();
            if e_order % i_order != 0 || !i_set.is_subset_of(e_set) {
                continue;
            }
            let normal = e_gens
                .iter()
                .all(|&x| i_set.iter().all(|y| i_set.contains(action.conj(y, x))));
            if !normal {
                continue;
            }
            let q = e_order / i_order;
            let cyclic_quotient = q == 1
                || e_set.iter().any(|x| {
                    let mut y = x;
                    let mut k = 1;
                    while !i_set.contains(y) {
                        y = action.mul(y, x);
                        k += 1;
                    }
                    k == q
                });
            if cyclic_quotient && inertia_ok(action, &orders, i_set, mode) {
                out.push((e_set.clone(), (*i_set).clone()));
            }
        }
    }
    out
}

/// Decomposition/inertia pairs admissible under `mode`, with `E` up to
/// conjugacy (simultaneous conjugation of both does not change splittings).
pub fn decomposition_pairs(
    action: &PermGroup,
    mode: RamificationMode,
) -> Vec<(PermGroup, PermGroup)> {
    admissible_pairs(action, mode)
        .into_iter()
        .map(|(e, i)| {
            (action.subgroup_from_indices(&e.to_vec()), action.subgroup_from_indices(&i.to_vec()))
        })
        .collect()
}

/// All splitting patterns of `action` coming from pairs `I ⊴ E` with
/// `E/I` cyclic and `I` allowed by `mode`, each with a witnessing pair.
/// Sorted by pattern.
pub fn realizable_splittings(
    action: &PermGroup,
    mode: RamificationMode,
) -> Result<Vec<RealizedSplitting>, GroupError> {
    if !action.is_transitive() {
        return Err(GroupError::NotTransitive);
    }
    let mut found: BTreeMap<SplittingPattern, (ElementSet, ElementSet)> = BTreeMap::new();
    for (e_set, i_set) in admissible_pairs(action, mode) {
        let pattern = pattern_from_sets(action, &e_set, &i_set);
        found.entry(pattern).or_insert((e_set, i_set));
    }
    Ok(found
        .into_iter()
        .map(|(pattern, (e, i))| RealizedSplitting {
            pattern,
            decomposition: action.subgroup_from_indices(&e.to_vec()),
            inertia: action.subgroup_from_indices(&i.to_vec()),
        })
        .collect())
}

/// Orbit bookkeeping for subgroups given as element sets.
fn pattern_from_sets(g: &PermGroup, e: &ElementSet, i: &ElementSet) -> SplittingPattern {
    let n = g.degree();
    let orbit_ids = |set: &ElementSet| -> Vec<usize> {
        // union-find over points
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for x in set.iter() {
            let perm = g.element(x);
            for pt in 0..n {
                let a = find(&mut parent, pt);
                let b = find(&mut parent, perm.image(pt));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        (0..n).map(|x| find(&mut parent, x)).collect()
    };
    let e_orb = orbit_ids(e);
    let i_orb = orbit_ids(i);
    let mut per_e: BTreeMap<usize, BTreeMap<usize, usize>> = BTreeMap::new();
    for x in 0..n {
        *per_e.entry(e_orb[x]).or_default().entry(i_orb[x]).or_default() += 1;
    }
    let pairs = per_e
        .values()
        .map(|inner| {
            let e_size = *inner.values().next().expect("nonempty");
            debug_assert!(inner.values().all(|&s| s == e_size));
            (e_size, inner.len())
        })
        .collect();
    SplittingPattern::new(pairs)
}
