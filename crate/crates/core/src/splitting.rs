//! Arithmetic and factorization types, the partition case analysis for
//! ramification sums, Frobenius characteristic polynomials and
//! discriminant valuation windows.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::IntPolynomial;
use crate::permgroup::{psl27_on_7_points, realizable_splittings, GroupError, RamificationMode, SplittingPattern};

/// Largest degree accepted by [`enumerate_factorization_types`].
pub const MAX_ENUMERATION_DEGREE: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SplittingError {
    #[error("degree {0} is outside 1..={MAX_ENUMERATION_DEGREE}")]
    DegreeOutOfRange(usize),
    #[error("pairs sum to {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("residue degrees and ramification indices must be positive and aligned")]
    Malformed,
    #[error("cannot parse type: {0}")]
    Parse(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Residue degrees `f_1 <= ... <= f_g` of the primes above `l`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct ArithmeticType(Vec<usize>);

impl ArithmeticType {
    pub fn new(mut residue_degrees: Vec<usize>) -> Self {
        residue_degrees.sort_unstable();
        ArithmeticType(residue_degrees)
    }

    pub fn residue_degrees(&self) -> &[usize] {
        &self.0
    }

    pub fn g(&self) -> usize {
        self.0.len()
    }

    pub fn inertia_sum(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for ArithmeticType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", tuple(&self.0))
    }
}

impl FromStr for ArithmeticType {
    type Err = SplittingError;

    /// Accepts `(1,1,2)` or `1,1,2`.
    fn from_str(s: &str) -> Result<Self, SplittingError> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let v: Result<Vec<usize>, _> = t.split(',').map(|x| x.trim().parse::<usize>()).collect();
        match v {
            Ok(v) if !v.is_empty() && v.iter().all(|&x| x > 0) => Ok(ArithmeticType::new(v)),
            _ => Err(SplittingError::Parse(s.to_string())),
        }
    }
}

fn tuple(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

/// Multiset of `(f, e)` pairs, kept sorted by `(f, e)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct FactorizationType {
    pairs: Vec<(usize, usize)>,
}

impl FactorizationType {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Result<Self, SplittingError> {
        if pairs.is_empty() || pairs.iter().any(|&(f, e)| f == 0 || e == 0) {
            return Err(SplittingError::Malformed);
        }
        pairs.sort_unstable();
        Ok(FactorizationType { pairs })
    }

    /// Checks `sum f*e = n`.
    pub fn with_degree(pairs: Vec<(usize, usize)>, n: usize) -> Result<Self, SplittingError> {
        let t = Self::new(pairs)?;
        if t.degree() != n {
            return Err(SplittingError::DegreeMismatch { expected: n, found: t.degree() });
        }
        Ok(t)
    }

    /// From aligned residue-degree and ramification tuples.
    pub fn from_tuples(f: &[usize], e: &[usize]) -> Result<Self, SplittingError> {
        if f.len() != e.len() {
            return Err(SplittingError::Malformed);
        }
        Self::new(f.iter().copied().zip(e.iter().copied()).collect())
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn degree(&self) -> usize {
        self.pairs.iter().map(|(f, e)| f * e).sum()
    }

    pub fn g(&self) -> usize {
        self.pairs.len()
    }

    pub fn arithmetic_type(&self) -> ArithmeticType {
        ArithmeticType::new(self.pairs.iter().map(|p| p.0).collect())
    }

    pub fn residue_degrees(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn ramification_indices(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.1).collect()
    }

    /// `e_1 + ... + e_g`.
    pub fn ramification_sum(&self) -> usize {
        self.pairs.iter().map(|p| p.1).sum()
    }

    pub fn is_ramified(&self) -> bool {
        self.pairs.iter().any(|p| p.1 > 1)
    }

    /// True when `l` divides some ramification index.
    pub fn is_wild_at(&self, l: u64) -> bool {
        self.pairs.iter().any(|&(_, e)| e as u64 % l == 0)
    }

    /// The products `f_i e_i`, ascending: the partition of `n` this type refines.
    pub fn product_partition(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.pairs.iter().map(|(f, e)| f * e).collect();
        v.sort_unstable();
        v
    }
}

impl From<&SplittingPattern> for FactorizationType {
    fn from(p: &SplittingPattern) -> Self {
        FactorizationType::new(p.pairs().iter().map(|&(e, f)| (f, e)).collect())
            .expect("patterns have positive entries")
    }
}

impl fmt::Display for FactorizationType {
    /// `{(f_1,..,f_g), (e_1,..,e_g)}` with pairs in `(f, e)` order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", tuple(&self.residue_degrees()), tuple(&self.ramification_indices()))
    }
}

impl FromStr for FactorizationType {
    type Err = SplittingError;

    /// Parses `{(1,3),(4,1)}` (residue degrees first, aligned with the
    /// ramification indices).
    fn from_str(s: &str) -> Result<Self, SplittingError> {
        let err = || SplittingError::Parse(s.to_string());
        let body = s.trim().strip_prefix('{').and_then(|t| t.strip_suffix('}')).ok_or_else(err)?;
        let mid = body.find(')').ok_or_else(err)?;
        let (a, b) = body.split_at(mid + 1);
        let tuple = |t: &str| -> Result<Vec<usize>, SplittingError> {
            let t = t.trim().strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(err)?;
            t.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| err())).collect()
        };
        let f = tuple(a)?;
        let e = tuple(b.trim().strip_prefix(',').ok_or_else(err)?)?;
        FactorizationType::from_tuples(&f, &e).map_err(|_| err())
    }
}

/// Every factorization type of degree `n`, in canonical order.
pub fn enumerate_factorization_types(n: usize) -> Result<Vec<FactorizationType>, SplittingError> {
    if n == 0 || n > MAX_ENUMERATION_DEGREE {
        return Err(SplittingError::DegreeOutOfRange(n));
    }
    let mut cands = Vec::new();
    for f in 1..=n {
        for e in 1..=n / f {
            cands.push((f, e));
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        cands: &[(usize, usize)],
        start: usize,
        left: usize,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<FactorizationType>,
    ) {
        if left == 0 {
            out.push(FactorizationType { pairs: cur.clone() });
            return;
        }
        for i in start..cands.len() {
            let (f, e) = cands[i];
            if f * e <= left {
                cur.push((f, e));
                rec(cands, i, left - f * e, cur, out);
                cur.pop();
            }
        }
    }
    rec(&cands, 0, n, &mut cur, &mut out);
    out.sort();
    Ok(out)
}

/// Factorization types realizable in PSL(2,7) fields under `mode`.
pub fn psl27_realizable_types(mode: RamificationMode) -> Result<BTreeSet<FactorizationType>, SplittingError> {
    let g = psl27_on_7_points();
    Ok(realizable_splittings(g, mode)?
        .iter()
        .map(|r| FactorizationType::from(&r.pattern))
        .collect())
}

/// An arithmetic type compatible with several ramification sums.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AmbiguousType {
    pub arithmetic_type: ArithmeticType,
    pub ramification_sums: BTreeSet<usize>,
    pub factorization_types: Vec<FactorizationType>,
}

/// Arithmetic types of degree `n` for which two admissible factorization
/// types have different ramification sums. `realizable`, when given,
/// restricts the admissible types.
pub fn ambiguous_arithmetic_types(
    n: usize,
    realizable: Option<&BTreeSet<FactorizationType>>,
) -> Result<Vec<AmbiguousType>, SplittingError> {
    let mut by_type: BTreeMap<ArithmeticType, Vec<FactorizationType>> = BTreeMap::new();
    for t in enumerate_factorization_types(n)? {
        if realizable.is_some_and(|r| !r.contains(&t)) {
            continue;
        }
        by_type.entry(t.arithmetic_type()).or_default().push(t);
    }
    Ok(by_type
        .into_iter()
        .filter_map(|(a, ts)| {
            let sums: BTreeSet<usize> = ts.iter().map(FactorizationType::ramification_sum).collect();
            (sums.len() > 1).then_some(AmbiguousType {
                arithmetic_type: a,
                ramification_sums: sums,
                factorization_types: ts,
            })
        })
        .collect())
}

/// `#{i : f_i = 1}`.
pub fn a_ell_count(t: &ArithmeticType) -> usize {
    t.0.iter().filter(|&&f| f == 1).count()
}

/// `prod (X^{f_i} - 1)`.
pub fn frobenius_charpoly(t: &ArithmeticType) -> IntPolynomial {
    t.0.iter().fold(IntPolynomial::one(), |acc, &f| {
        let mut c = vec![BigInt::from(0); f + 1];
        c[0] = BigInt::from(-1);
        c[f] = BigInt::from(1);
        &acc * &IntPolynomial::new(c)
    })
}

/// `sum (e_i - 1) f_i`: the discriminant valuation when `l` is tame.
pub fn tame_disc_valuation(t: &FactorizationType) -> usize {
    t.pairs.iter().map(|(f, e)| (e - 1) * f).sum()
}

/// Window for `v_l(disc)` at a tame prime with differing ramification
/// sums: the values `n - sum f_i` over the given ambiguous types, keeping
/// the even ones when `square_discriminant` (PSL(2,7) fields have square
/// discriminant).
pub fn tame_valuation_window(n: usize, ambiguous: &[AmbiguousType], square_discriminant: bool) -> BTreeSet<usize> {
    ambiguous
        .iter()
        .map(|a| n - a.arithmetic_type.inertia_sum())
        .filter(|v| !square_discriminant || v % 2 == 0)
        .collect()
}

/// Possible values of `v_l` of the different-discriminant contribution of
/// a type at `l`: `d_i = e_i - 1` when `l` does not divide `e_i`, otherwise
/// `e_i <= d_i <= e_i - 1 + e_i v_l(e_i)`; the valuation is `sum f_i d_i`.
pub fn disc_valuation_range(t: &FactorizationType, l: u64) -> BTreeSet<usize> {
    let mut acc: BTreeSet<usize> = [0].into_iter().collect();
    for &(f, e) in &t.pairs {
        let (lo, hi) = if e as u64 % l == 0 {
            let mut v = 0;
            let mut m = e as u64;
            while m % l == 0 {
                m /= l;
                v += 1;
            }
            (e, e - 1 + e * v)
        } else {
            (e - 1, e - 1)
        };
        acc = acc
            .iter()
            .flat_map(|&a| (lo..=hi).map(move |d| a + f * d))
            .collect();
    }
    acc
}

/// A pair of types with one arithmetic type, different ramification sums,
/// and the discriminant valuations they could share.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WildWindowWitness {
    pub first: FactorizationType,
    pub second: FactorizationType,
    pub common_valuations: BTreeSet<usize>,
}

/// Window for `v_l(disc)` when `l` is wild in both fields and the sums
/// differ. Pairs are drawn from `candidates` (types sharing an arithmetic
/// type with different ramification sums, both wild at `l`); each pair
/// contributes the valuations allowed for both members, kept even when
/// `square_discriminant`.
pub fn wild_valuation_window(
    candidates: &[(FactorizationType, FactorizationType)],
    l: u64,
    square_discriminant: bool,
) -> (BTreeSet<usize>, Vec<WildWindowWitness>) {
    let mut window = BTreeSet::new();
    let mut witnesses = Vec::new();
    for (a, b) in candidates {
        if a.arithmetic_type() != b.arithmetic_type()
            || a.ramification_sum() == b.ramification_sum()
            || !a.is_wild_at(l)
            || !b.is_wild_at(l)
        {
            continue;
        }
        let common: BTreeSet<usize> = disc_valuation_range(a, l)
            .intersection(&disc_valuation_range(b, l))
            .copied()
            .filter(|v| !square_discriminant || v % 2 == 0)
            .collect();
        window.extend(common.iter().copied());
        witnesses.push(WildWindowWitness { first: a.clone(), second: b.clone(), common_valuations: common });
    }
    (window, witnesses)
}

/// Pairs of factorization types that the two degree-7 PSL(2,7) actions
/// (on the cosets of the two classes of S4) assign to one decomposition /
/// inertia pair, restricted to those whose ramification sums differ.
/// These are exactly the splittings an arithmetically equivalent pair of
/// PSL(2,7) septic fields can show at one prime.
pub fn psl27_joint_differing_types(
    mode: RamificationMode,
) -> Result<Vec<(FactorizationType, FactorizationType)>, SplittingError> {
    use crate::permgroup::{
        coset_action, decomposition_pairs, group_closure, psl27_on_projective_line,
        splitting_from_decomposition, CosetAction, PermGroup,
    };
    let g8 = psl27_on_projective_line();
    let s4: Vec<_> = g8.subgroup_classes().iter().filter(|c| c.order == 24).collect();
    assert_eq!(s4.len(), 2, "two classes of S4");
    let actions = [
        coset_action(&g8, &s4[0].representative)?,
        coset_action(&g8, &s4[1].representative)?,
    ];
    let image = |act: &CosetAction, h: &PermGroup| -> PermGroup {
        let gens: Vec<_> = h
            .generators()
            .iter()
            .map(|x| act.images[g8.index_of(x).expect("element of g8")].clone())
            .collect();
        group_closure(&gens, act.group.degree()).expect("image of a subgroup")
    };
    let mut out = BTreeSet::new();
    for (e, i) in decomposition_pairs(&g8, mode) {
        let mut ts = Vec::with_capacity(2);
        for act in &actions {
            let p = splitting_from_decomposition(&act.group, &image(act, &e), &image(act, &i))?;
            ts.push(FactorizationType::from(&p));
        }
        if ts[0].ramification_sum() != ts[1].ramification_sum() {
            ts.sort();
            out.insert((ts[0].clone(), ts[1].clone()));
        }
    }
    Ok(out.into_iter().collect())
}

/// One row of the grouped enumeration: a partition of `n` into products
/// `f_i e_i` and the ramified types refining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionRow {
    pub partition: Vec<usize>,
    pub types: Vec<FactorizationType>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeGroup {
    pub g: usize,
    pub rows: Vec<PartitionRow>,
}

/// Ramified factorization types grouped by `g` (descending) and by the
/// product partition, with the ambiguous summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeReport {
    pub degree: usize,
    pub groups: Vec<TypeGroup>,
    pub ambiguous: Vec<AmbiguousType>,
}

pub fn type_report(
    n: usize,
    realizable: Option<&BTreeSet<FactorizationType>>,
) -> Result<TypeReport, SplittingError> {
    let mut by_g: BTreeMap<usize, BTreeMap<Vec<usize>, Vec<FactorizationType>>> = BTreeMap::new();
    for t in enumerate_factorization_types(n)? {
        let row = by_g.entry(t.g()).or_default().entry(t.product_partition()).or_default();
        if t.is_ramified() && realizable.is_none_or(|r| r.contains(&t)) {
            row.push(t);
        }
    }
    let groups = by_g
        .into_iter()
        .rev()
        .map(|(g, rows)| TypeGroup {
            g,
            rows: rows
                .into_iter()
                .map(|(partition, mut types)| {
                    types.sort_by_key(|t| (t.residue_degrees(), t.ramification_indices()));
                    PartitionRow { partition, types }
                })
                .collect(),
        })
        .collect();
    Ok(TypeReport { degree: n, groups, ambiguous: ambiguous_arithmetic_types(n, realizable)? })
}

impl fmt::Display for TypeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "factorization types of degree {} (ramified only)", self.degree)?;
        for group in &self.groups {
            writeln!(f, "g = {}", group.g)?;
            for row in &group.rows {
                let part: Vec<String> = row.partition.iter().map(usize::to_string).collect();
                let types: Vec<String> = row.types.iter().map(|t| t.to_string()).collect();
                let body = if types.is_empty() { "-".to_string() } else { types.join(", ") };
                writeln!(f, "  {}: {}", part.join("+"), body)?;
            }
        }
        writeln!(f, "ambiguous arithmetic types")?;
        for a in &self.ambiguous {
            let sums: Vec<String> = a.ramification_sums.iter().map(usize::to_string).collect();
            writeln!(f, "  {}: ramification sums {{{}}}", a.arithmetic_type, sums.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ft(s: &str) -> FactorizationType {
        s.parse().unwrap()
    }

    #[test]
    fn small_degrees() {
        assert_eq!(enumerate_factorization_types(1).unwrap(), vec![ft("{(1),(1)}")]);
        let two = enumerate_factorization_types(2).unwrap();
        assert_eq!(two.len(), 3);
        assert!(enumerate_factorization_types(0).is_err());
        assert!(enumerate_factorization_types(13).is_err());
    }

    #[test]
    fn parse_keeps_alignment() {
        let t = ft("{(1,1,1,2),(2,1,2,1)}");
        assert_eq!(t.pairs(), &[(1, 1), (1, 2), (1, 2), (2, 1)]);
        assert_eq!(t.to_string(), "{(1,1,1,2), (1,2,2,1)}");
        assert_eq!(t.ramification_sum(), 6);
        assert!(FactorizationType::with_degree(vec![(1, 2)], 3).is_err());
    }

    #[test]
    fn counts_and_charpolys() {
        assert_eq!(a_ell_count(&ArithmeticType::new(vec![1; 7])), 7);
        assert_eq!(a_ell_count(&ArithmeticType::new(vec![7])), 0);
        assert_eq!(a_ell_count(&ArithmeticType::new(vec![2, 1, 1, 1])), 3);
        assert_eq!(
            frobenius_charpoly(&ArithmeticType::new(vec![1, 3])),
            IntPolynomial::from_i64s(&[1, -1, 0, -1, 1])
        );
        assert_eq!(frobenius_charpoly(&ArithmeticType::new(vec![1, 1])), IntPolynomial::from_i64s(&[1, -2, 1]));
    }

    #[test]
    fn tame_valuations() {
        assert_eq!(tame_disc_valuation(&ft("{(1,1,1,2),(1,1,1,2)}")), 2);
        assert_eq!(tame_disc_valuation(&ft("{(1,3),(1,2)}")), 3);
        assert_eq!(tame_disc_valuation(&ft("{(1,1),(1,1)}")), 0);
    }

    #[test]
    fn different_ranges() {
        // Q_2(i): e = 2, d in {2, 3}
        assert_eq!(disc_valuation_range(&ft("{(1),(2)}"), 2), [2, 3].into_iter().collect());
        assert_eq!(disc_valuation_range(&ft("{(1),(2)}"), 3), [1].into_iter().collect());
    }
}
