use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use super::lattice::Lattice;
use super::perm::{CycleType, Perm};
use super::GroupError;

/// Default bound on the order of groups built by closure.
pub const DEFAULT_ORDER_CAP: usize = 100_000;

/// Multiplication tables are kept for groups up to this order.
const TABLE_LIMIT: usize = 2048;

/// A finite permutation group with its full, lexicographically sorted
/// element list. Element indices refer to that list; index 0 is the
/// identity.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    table: OnceLock<Vec<u32>>,
    classes: OnceLock<ClassData>,
    pub(super) lattice: OnceLock<Lattice>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    pub representative: Perm,
    /// Indices into the group's element list, ascending.
    pub members: Vec<usize>,
    pub size: usize,
    pub cycle_type: CycleType,
}

#[derive(Clone)]
struct ClassData {
    classes: Vec<ConjClass>,
    class_of: Vec<usize>,
}

pub fn group_closure(generators: &[Perm], degree: usize) -> Result<PermGroup, GroupError> {
    group_closure_with_cap(generators, degree, DEFAULT_ORDER_CAP)
}

pub fn group_closure_with_cap(
    generators: &[Perm],
    degree: usize,
    cap: usize,
) -> Result<PermGroup, GroupError> {
    for g in generators {
        if g.degree() != degree {
            return Err(GroupError::DegreeMismatch { expected: degree, found: g.degree() });
        }
    }
    let id = Perm::identity(degree);
    let mut seen: HashMap<Perm, ()> = HashMap::new();
    seen.insert(id.clone(), ());
    let mut queue = VecDeque::from([id]);
    let mut elements = Vec::new();
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = x.then(g);
            if !seen.contains_key(&y) {
                if seen.len() >= cap {
                    return Err(GroupError::OrderCapExceeded { cap, partial: seen.len() + 1 });
                }
                seen.insert(y.clone(), ());
                queue.push_back(y);
            }
        }
        elements.push(x);
    }
    Ok(PermGroup::from_elements(degree, generators.to_vec(), elements))
}

impl PermGroup {
    /// `elements` must already be a group; it is sorted here.
    pub(super) fn from_elements(degree: usize, generators: Vec<Perm>, mut elements: Vec<Perm>) -> Self {
        elements.sort();
        let index = elements.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        PermGroup {
            degree,
            generators,
            elements,
            index,
            table: OnceLock::new(),
            classes: OnceLock::new(),
            lattice: OnceLock::new(),
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_elements(degree, Vec::new(), vec![Perm::identity(degree)])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    fn table(&self) -> Option<&Vec<u32>> {
        let n = self.order();
        if n > TABLE_LIMIT {
            return None;
        }
        Some(self.table.get_or_init(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &self.elements {
                for b in &self.elements {
                    t.push(self.index[&a.then(b)] as u32);
                }
            }
            t
        }))
    }

    /// Index of `element(i).then(element(j))`.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        match self.table() {
            Some(t) => t[i * self.order() + j] as usize,
            None => self.index[&self.elements[i].then(&self.elements[j])],
        }
    }

    pub fn inv(&self, i: usize) -> usize {
        self.index[&self.elements[i].inverse()]
    }

    /// Index of `element(g)^-1 * element(x) * element(g)`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// Orbits on points, each sorted, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.degree;
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut orbit = vec![s];
            let mut k = 0;
            while k < orbit.len() {
                let x = orbit[k];
                for g in &self.generators {
                    let y = g.image(x);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
                k += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbits().len() == 1
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| a.then(b) == b.then(a)))
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order() as u64;
        self.is_abelian() && self.elements.iter().any(|g| g.order() == n)
    }

    /// The subgroup generated by `generators`, which must lie in `self`.
    pub fn subgroup(&self, generators: &[Perm]) -> Result<PermGroup, GroupError> {
        if let Some(g) = generators.iter().find(|g| !self.contains(g)) {
            return Err(GroupError::NotASubgroup(format!("{g} is not in the group")));
        }
        group_closure(generators, self.degree)
    }

    /// The subgroup whose elements have the given indices (assumed closed).
    pub(super) fn subgroup_from_indices(&self, members: &[usize]) -> PermGroup {
        let elements: Vec<Perm> = members.iter().map(|&i| self.elements[i].clone()).collect();
        let generators = minimal_generators(&elements);
        PermGroup::from_elements(self.degree, generators, elements)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|g| other.contains(g))
    }

    /// Element indices (in `self`) of the members of a subgroup.
    pub(super) fn indices_of(&self, h: &PermGroup) -> Result<Vec<usize>, GroupError> {
        if h.degree != self.degree {
            return Err(GroupError::DegreeMismatch { expected: self.degree, found: h.degree });
        }
        let mut out = Vec::with_capacity(h.order());
        for g in &h.elements {
            match self.index_of(g) {
                Some(i) => out.push(i),
                None => return Err(GroupError::NotASubgroup(format!("{g} is not in the group"))),
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    fn class_data(&self) -> &ClassData {
        self.classes.get_or_init(|| {
            let n = self.order();
            let mut class_of = vec![usize::MAX; n];
            let mut raw: Vec<Vec<usize>> = Vec::new();
            let gens: Vec<usize> = self.generators.iter().map(|g| self.index[g]).collect();
            for start in 0..n {
                if class_of[start] != usize::MAX {
                    continue;
                }
                let id = raw.len();
                class_of[start] = id;
                let mut orbit = vec![start];
                let mut k = 0;
                while k < orbit.len() {
                    let x = orbit[k];
                    for &g in &gens {
                        let y = self.conj(x, g);
                        if class_of[y] == usize::MAX {
                            class_of[y] = id;
                            orbit.push(y);
                        }
                    }
                    k += 1;
                }
                orbit.sort_unstable();
                raw.push(orbit);
            }
            // Representatives are the least members; order by (size, representative).
            let mut order: Vec<usize> = (0..raw.len()).collect();
            order.sort_by_key(|&c| (raw[c].len(), raw[c][0]));
            let mut renumber = vec![0; raw.len()];
            for (new, &old) in order.iter().enumerate() {
                renumber[old] = new;
            }
            let classes = order
                .iter()
                .map(|&c| {
                    let rep = self.elements[raw[c][0]].clone();
                    ConjClass {
                        cycle_type: rep.cycle_type(),
                        representative: rep,
                        size: raw[c].len(),
                        members: raw[c].clone(),
                    }
                })
                .collect();
            let class_of = class_of.into_iter().map(|c| renumber[c]).collect();
            ClassData { classes, class_of }
        })
    }

    pub fn conjugacy_classes(&self) -> &[ConjClass] {
        &self.class_data().classes
    }

    /// Position in [`conjugacy_classes`](Self::conjugacy_classes) of the class of element `i`.
    pub fn class_of(&self, i: usize) -> usize {
        self.class_data().class_of[i]
    }

    /// Distinct cycle types of the elements.
    pub fn cycle_types(&self) -> Vec<CycleType> {
        let mut v: Vec<CycleType> = self.conjugacy_classes().iter().map(|c| c.cycle_type.clone()).collect();
        v.sort();
        v.dedup();
        v
    }
}

/// Free function form of [`PermGroup::conjugacy_classes`].
pub fn conjugacy_classes(g: &PermGroup) -> &[ConjClass] {
    g.conjugacy_classes()
}

/// A short generating list: greedily add elements (in order) not in the
/// span of those chosen so far.
fn minimal_generators(elements: &[Perm]) -> Vec<Perm> {
    if elements.is_empty() {
        return Vec::new();
    }
    let n = elements[0].degree();
    let mut gens: Vec<Perm> = Vec::new();
    let mut span: std::collections::HashSet<Perm> = [Perm::identity(n)].into_iter().collect();
    // Try high-order elements first for short lists.
    let mut cands: Vec<&Perm> = elements.iter().collect();
    cands.sort_by(|a, b| b.order().cmp(&a.order()).then(a.cmp(b)));
    for g in cands {
        if span.len() == elements.len() {
            break;
        }
        if span.contains(g) {
            continue;
        }
        gens.push(g.clone());
        let grp = group_closure(&gens, n).expect("subgroup of a capped group");
        span = grp.elements.into_iter().collect();
    }
    gens
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for PermGroup {
    /// Equality as sets of permutations.
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> PermGroup {
        let a = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        group_closure(&[a, b], 3).unwrap()
    }

    #[test]
    fn closure_basics() {
        let g = group_closure(&[Perm::from_cycles(2, &[&[0, 1]]).unwrap()], 2).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(group_closure(&[], 3).unwrap().order(), 1);
        assert_eq!(s3().order(), 6);
        assert!(s3().element(0).is_identity());
    }

    #[test]
    fn cap_is_enforced() {
        let a = Perm::from_cycles(5, &[&[0, 1]]).unwrap();
        let b = Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        match group_closure_with_cap(&[a, b], 5, 100) {
            Err(GroupError::OrderCapExceeded { cap: 100, partial }) => assert!(partial > 100),
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn s3_classes() {
        let g = s3();
        let sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(g.class_of(0), 0);
        for c in g.conjugacy_classes() {
            for &m in &c.members {
                assert_eq!(g.element(m).cycle_type(), c.cycle_type);
            }
        }
    }

    #[test]
    fn table_and_direct_products_agree() {
        let g = s3();
        for i in 0..6 {
            for j in 0..6 {
                let direct = g.index_of(&g.element(i).then(g.element(j))).unwrap();
                assert_eq!(g.mul(i, j), direct);
            }
            assert_eq!(g.mul(i, g.inv(i)), 0);
        }
    }

    #[test]
    fn subgroup_membership() {
        let g = s3();
        let h = g.subgroup(&[Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap()]).unwrap();
        assert_eq!(h.order(), 3);
        assert!(h.is_cyclic());
        assert!(h.is_subgroup_of(&g));
        assert!(g.subgroup(&[Perm::identity(3).then(&Perm::identity(3))]).is_ok());
        let bad = Perm::from_cycles(4, &[&[0, 3]]).unwrap();
        assert!(g.subgroup(&[bad]).is_err());
    }
}
