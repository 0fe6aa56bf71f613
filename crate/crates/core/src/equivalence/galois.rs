use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::algebra::integer::primes_up_to;
use crate::numberfield::NumberField;
use crate::permgroup::{group_closure, psl27_on_7_points, CycleType, Perm};

use super::EquivalenceError;

/// The seven transitive groups of degree 7, in increasing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GaloisLabel {
    C7,
    D7,
    F21,
    F42,
    #[serde(rename = "PSL2(7)")]
    Psl27,
    A7,
    S7,
}

impl GaloisLabel {
    pub const ALL: [GaloisLabel; 7] = [
        GaloisLabel::C7,
        GaloisLabel::D7,
        GaloisLabel::F21,
        GaloisLabel::F42,
        GaloisLabel::Psl27,
        GaloisLabel::A7,
        GaloisLabel::S7,
    ];

    pub fn order(self) -> usize {
        match self {
            GaloisLabel::C7 => 7,
            GaloisLabel::D7 => 14,
            GaloisLabel::F21 => 21,
            GaloisLabel::F42 => 42,
            GaloisLabel::Psl27 => 168,
            GaloisLabel::A7 => 2520,
            GaloisLabel::S7 => 5040,
        }
    }

    /// Contained in `A7`, i.e. square discriminant.
    pub fn is_even(self) -> bool {
        matches!(self, GaloisLabel::C7 | GaloisLabel::F21 | GaloisLabel::Psl27 | GaloisLabel::A7)
    }
}

impl fmt::Display for GaloisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GaloisLabel::C7 => "C7",
            GaloisLabel::D7 => "D7",
            GaloisLabel::F21 => "F21",
            GaloisLabel::F42 => "F42",
            GaloisLabel::Psl27 => "PSL2(7)",
            GaloisLabel::A7 => "A7",
            GaloisLabel::S7 => "S7",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GaloisStatus {
    Certified,
    Probable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisVerdict {
    pub label: GaloisLabel,
    pub status: GaloisStatus,
    /// Groups consistent with all evidence.
    pub candidates: Vec<GaloisLabel>,
    /// Frobenius cycle types seen, with the number of primes showing each.
    pub observed: BTreeMap<String, usize>,
    pub square_discriminant: bool,
    pub prime_bound: u64,
}

fn affine_group(multiplier: Option<usize>, reflect: bool) -> BTreeSet<CycleType> {
    let shift = Perm::new((0..7).map(|x| (x + 1) % 7).collect()).unwrap();
    let mut gens = vec![shift];
    if let Some(a) = multiplier {
        gens.push(Perm::new((0..7).map(|x| (a * x) % 7).collect()).unwrap());
    }
    if reflect {
        gens.push(Perm::new((0..7).map(|x| (7 - x) % 7).collect()).unwrap());
    }
    group_closure(&gens, 7).expect("small group").cycle_types().into_iter().collect()
}

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for k in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - k, k) {
            rest.push(k);
            out.push(rest);
        }
    }
    out
}

/// Cycle types of elements of each transitive group of degree 7.
pub fn septic_cycle_types(label: GaloisLabel) -> &'static BTreeSet<CycleType> {
    static TABLE: OnceLock<Vec<BTreeSet<CycleType>>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let all: BTreeSet<CycleType> = partitions(7, 7).into_iter().map(CycleType::new).collect();
        vec![
            affine_group(None, false),
            affine_group(None, true),
            affine_group(Some(2), false),
            affine_group(Some(3), false),
            psl27_on_7_points().cycle_types().into_iter().collect(),
            all.iter().filter(|c| c.is_even()).cloned().collect(),
            all,
        ]
    });
    let i = GaloisLabel::ALL.iter().position(|&l| l == label).unwrap();
    &table[i]
}

/// Sieves the seven candidates by discriminant parity and the Frobenius
/// cycle types at unramified primes up to `bound`. Certified when one
/// candidate is left; otherwise the smallest survivor, as probable.
pub fn identify_galois7(k: &NumberField, bound: u64) -> Result<GaloisVerdict, EquivalenceError> {
    if k.degree() != 7 {
        return Err(EquivalenceError::NotSeptic(k.degree()));
    }
    let square = k.has_square_discriminant();
    let mut seen: BTreeMap<CycleType, usize> = BTreeMap::new();
    for l in primes_up_to(bound) {
        if k.disc_valuation(l) > 0 {
            continue;
        }
        let d = k.prime_decomposition(l)?;
        *seen.entry(CycleType::new(d.factorization_type.residue_degrees())).or_default() += 1;
    }
    let candidates: Vec<GaloisLabel> = GaloisLabel::ALL
        .into_iter()
        .filter(|&g| g.is_even() == square)
        .filter(|&g| {
            let types = septic_cycle_types(g);
            seen.keys().all(|c| types.contains(c))
        })
        .collect();
    let label = candidates[0];
    Ok(GaloisVerdict {
        label,
        status: if candidates.len() == 1 { GaloisStatus::Certified } else { GaloisStatus::Probable },
        candidates,
        observed: seen.into_iter().map(|(c, n)| (c.to_string(), n)).collect(),
        square_discriminant: square,
        prime_bound: bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_type_tables() {
        let count = |g| septic_cycle_types(g).len();
        assert_eq!(count(GaloisLabel::C7), 2);
        assert_eq!(count(GaloisLabel::D7), 3);
        assert_eq!(count(GaloisLabel::F21), 3);
        assert_eq!(count(GaloisLabel::F42), 5);
        assert_eq!(count(GaloisLabel::Psl27), 5);
        assert_eq!(count(GaloisLabel::A7), 8);
        assert_eq!(count(GaloisLabel::S7), 15);
        for g in GaloisLabel::ALL {
            let even = septic_cycle_types(g).iter().all(CycleType::is_even);
            assert_eq!(even, g.is_even(), "{g}");
        }
    }
}
