//! Subgroups up to conjugacy, Gassmann equivalence, induced trivial
//! characters and coset actions.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use super::group::{group_closure, PermGroup};
use super::perm::{CycleType, Perm};
use super::GroupError;

/// Set of element indices of a fixed group.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(super) struct ElementSet {
    words: Vec<u64>,
}

impl ElementSet {
    pub(super) fn empty(n: usize) -> Self {
        ElementSet { words: vec![0; n.div_ceil(64)] }
    }

    pub(super) fn from_indices(n: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(n);
        for i in idx {
            s.insert(i);
        }
        s
    }

    pub(super) fn insert(&mut self, i: usize) -> bool {
        let (w, b) = (i / 64, 1u64 << (i % 64));
        let fresh = self.words[w] & b == 0;
        self.words[w] |= b;
        fresh
    }

    pub(super) fn contains(&self, i: usize) -> bool {
        self.words[i / 64] & (1u64 << (i % 64)) != 0
    }

    pub(super) fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(super) fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            (0..64).filter(move |b| w & (1u64 << b) != 0).map(move |b| k * 64 + b)
        })
    }

    pub(super) fn is_subset_of(&self, other: &ElementSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub(super) fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// The conjugate whose sorted element-index list is lexicographically least.
    pub representative: PermGroup,
    pub order: usize,
    pub conjugate_count: usize,
    pub(super) conjugates: Vec<ElementSet>,
    pub(super) rep_generators: Vec<usize>,
}

impl SubgroupClass {
    /// `|N_G(H)| = |G| / conjugate_count`.
    pub fn normalizer_order(&self, group_order: usize) -> usize {
        group_order / self.conjugate_count
    }

    /// Every subgroup in the class, as a group.
    pub fn conjugates(&self, g: &PermGroup) -> Vec<PermGroup> {
        self.conjugates
            .iter()
            .map(|s| g.subgroup_from_indices(&s.to_vec()))
            .collect()
    }
}

#[derive(Clone)]
pub(super) struct Lattice {
    pub(super) classes: Vec<SubgroupClass>,
}

/// Subgroup generated by `gens` (indices), as an element set.
fn closure_indices(g: &PermGroup, gens: &[usize]) -> ElementSet {
    let mut set = ElementSet::empty(g.order());
    set.insert(0);
    let mut list = vec![0usize];
    let mut k = 0;
    while k < list.len() {
        let x = list[k];
        for &s in gens {
            let y = g.mul(x, s);
            if set.insert(y) {
                list.push(y);
            }
        }
        k += 1;
    }
    set
}

fn conjugate_set(g: &PermGroup, set: &ElementSet, by: usize) -> ElementSet {
    ElementSet::from_indices(g.order(), set.iter().map(|x| g.conj(x, by)))
}

fn all_conjugates(g: &PermGroup, set: &ElementSet) -> Vec<ElementSet> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for by in 0..g.order() {
        let c = conjugate_set(g, set, by);
        if seen.insert(c.clone()) {
            out.push(c);
        }
    }
    out.sort_by_cached_key(ElementSet::to_vec);
    out
}

fn build_lattice(g: &PermGroup) -> Lattice {
    let n = g.order();
    struct Raw {
        conjugates: Vec<ElementSet>,
        gens: Vec<usize>,
    }
    let mut known: HashMap<ElementSet, usize> = HashMap::new();
    let mut raw: Vec<Raw> = Vec::new();
    let trivial = ElementSet::from_indices(n, [0]);
    known.insert(trivial.clone(), 0);
    raw.push(Raw { conjugates: vec![trivial], gens: Vec::new() });
    let mut next = 0;
    while next < raw.len() {
        let rep = raw[next].conjugates[0].clone();
        let gens = raw[next].gens.clone();
        next += 1;
        for x in 0..n {
            if rep.contains(x) {
                continue;
            }
            let mut kg = gens.clone();
            kg.push(x);
            let k = closure_indices(g, &kg);
            if known.contains_key(&k) {
                continue;
            }
            let conjugates = all_conjugates(g, &k);
            let id = raw.len();
            for c in &conjugates {
                known.insert(c.clone(), id);
            }
            // Generators must belong to the stored representative (the least conjugate).
            let least = conjugates[0].clone();
            let kg = if least == k {
                kg
            } else {
                let by = (0..n).find(|&b| conjugate_set(g, &k, b) == least).expect("conjugate");
                kg.iter().map(|&s| g.conj(s, by)).collect()
            };
            raw.push(Raw { conjugates, gens: kg });
        }
    }
    let mut classes: Vec<SubgroupClass> = raw
        .into_iter()
        .map(|r| {
            let rep_idx = r.conjugates[0].to_vec();
            let representative = g.subgroup_from_indices(&rep_idx);
            SubgroupClass {
                order: rep_idx.len(),
                conjugate_count: r.conjugates.len(),
                representative,
                conjugates: r.conjugates,
                rep_generators: r.gens,
            }
        })
        .collect();
    classes.sort_by_cached_key(|c| (c.order, c.conjugate_count, c.conjugates[0].to_vec()));
    Lattice { classes }
}

impl PermGroup {
    /// All subgroups up to conjugacy, ordered by (order, number of
    /// conjugates, least element-index list).
    pub fn subgroup_classes(&self) -> &[SubgroupClass] {
        &self.lattice.get_or_init(|| build_lattice(self)).classes
    }

    /// Every subgroup (not up to conjugacy) as `(class index, element set)`.
    pub(super) fn all_subgroup_sets(&self) -> Vec<(usize, &ElementSet)> {
        self.subgroup_classes()
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.conjugates.iter().map(move |s| (i, s)))
            .collect()
    }

    /// Total number of subgroups.
    pub fn subgroup_count(&self) -> usize {
        self.subgroup_classes().iter().map(|c| c.conjugate_count).sum()
    }
}

/// Free function form of [`PermGroup::subgroup_classes`].
pub fn subgroup_classes(g: &PermGroup) -> &[SubgroupClass] {
    g.subgroup_classes()
}

/// `#(C ∩ H)` for each conjugacy class `C` of `g`, in class order.
pub fn class_intersections(g: &PermGroup, h: &PermGroup) -> Result<Vec<usize>, GroupError> {
    let idx = g.indices_of(h)?;
    let mut counts = vec![0; g.conjugacy_classes().len()];
    for i in idx {
        counts[g.class_of(i)] += 1;
    }
    Ok(counts)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassIntersection {
    pub class: usize,
    pub class_size: usize,
    pub cycle_type: CycleType,
    pub in_h: usize,
    pub in_h1: usize,
}

/// Per-class intersection table for two subgroups, with the verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasiConjugacyCertificate {
    pub order_h: usize,
    pub order_h1: usize,
    pub rows: Vec<ClassIntersection>,
    pub quasi_conjugate: bool,
    pub conjugate: bool,
}

pub fn is_quasi_conjugate(
    g: &PermGroup,
    h: &PermGroup,
    h1: &PermGroup,
) -> Result<QuasiConjugacyCertificate, GroupError> {
    let a = class_intersections(g, h)?;
    let b = class_intersections(g, h1)?;
    let rows: Vec<ClassIntersection> = g
        .conjugacy_classes()
        .iter()
        .enumerate()
        .map(|(i, c)| ClassIntersection {
            class: i,
            class_size: c.size,
            cycle_type: c.cycle_type.clone(),
            in_h: a[i],
            in_h1: b[i],
        })
        .collect();
    let quasi = h.order() == h1.order() && a == b;
    Ok(QuasiConjugacyCertificate {
        order_h: h.order(),
        order_h1: h1.order(),
        rows,
        quasi_conjugate: quasi,
        conjugate: quasi && are_conjugate(g, h, h1)?,
    })
}

pub fn are_conjugate(g: &PermGroup, h: &PermGroup, h1: &PermGroup) -> Result<bool, GroupError> {
    let a = ElementSet::from_indices(g.order(), g.indices_of(h)?);
    let b = ElementSet::from_indices(g.order(), g.indices_of(h1)?);
    if a.len() != b.len() {
        return Ok(false);
    }
    Ok((0..g.order()).any(|by| conjugate_set(g, &a, by) == b))
}

/// Values `#(C ∩ H)·|G| / (|C|·|H|)` of the permutation character of `G`
/// on `G/H`, one per conjugacy class.
pub fn induced_trivial_character(g: &PermGroup, h: &PermGroup) -> Result<Vec<u64>, GroupError> {
    let counts = class_intersections(g, h)?;
    g.conjugacy_classes()
        .iter()
        .zip(counts)
        .map(|(c, k)| {
            let num = (k * g.order()) as u64;
            let den = (c.size * h.order()) as u64;
            if num % den != 0 {
                return Err(GroupError::NonIntegralCharacter(format!("{num}/{den}")));
            }
            Ok(num / den)
        })
        .collect()
}

/// Action of `G` on the right cosets `Hx`, with `g` sending `Hx` to `Hxg`.
#[derive(Clone, Debug)]
pub struct CosetAction {
    /// Image of the action, a group of degree `[G:H]`.
    pub group: PermGroup,
    /// Image of each element of `G`, indexed like `G`'s element list.
    pub images: Vec<Perm>,
    pub kernel_size: usize,
    /// Least element (index in `G`) of each coset; coset 0 is `H`.
    pub coset_representatives: Vec<usize>,
}

pub fn coset_action(g: &PermGroup, h: &PermGroup) -> Result<CosetAction, GroupError> {
    let h_idx = g.indices_of(h)?;
    let n = g.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &k in &h_idx {
            coset_of[g.mul(k, x)] = id;
        }
    }
    let m = reps.len();
    let images: Vec<Perm> = (0..n)
        .map(|y| {
            let im = reps.iter().map(|&r| coset_of[g.mul(r, y)]).collect();
            Perm::new(im).expect("coset action is a permutation")
        })
        .collect();
    let kernel_size = images.iter().filter(|p| p.is_identity()).count();
    let gens: Vec<Perm> = g
        .generators()
        .iter()
        .map(|s| images[g.index_of(s).expect("generator in group")].clone())
        .collect();
    let group = group_closure(&gens, m)?;
    Ok(CosetAction { group, images, kernel_size, coset_representatives: reps })
}
