//! Search for arithmetically equivalent septic pairs whose ramification
//! sums differ, over a table of defining polynomials.

mod ingest;
pub mod reference;
mod report;
mod verify;

pub use ingest::{ingest, ingest_str, FieldRecord, IngestResult, IngestWarning, EXPECTED_DEGREE};
pub use verify::{verify_reference_results, verify_with_inputs, CheckItem, ReferenceInputs, VerificationReport};

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;
use std::time::Duration;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::integer::factor_integer;
use crate::algebra::DEFAULT_SEED;
use crate::equivalence::{
    check_equivalence_with_timeout, compare_ramification_sums, identify_galois7, EquivalenceCertificate, GaloisLabel,
    GaloisVerdict, RamSumComparison, Verdict,
};
use crate::numberfield::{field_from_poly, NumberField};
use crate::permgroup::RamificationMode;
use crate::splitting::{
    ambiguous_arithmetic_types, psl27_joint_differing_types, psl27_realizable_types, tame_valuation_window,
    wild_valuation_window, ArithmeticType,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("I/O error: {0}")]
    Io(String),
}

/// Odd primes dividing `|PSL(2,7)|`; they can be wildly ramified, so
/// their discriminant exponent is not bounded by the tame window.
pub const WILD_ODD_PRIMES: [u64; 2] = [3, 7];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    /// Allowed `a` in `disc = 2^(2a) p^(2b)`.
    pub a_values: Vec<u32>,
    /// Allowed `b`.
    pub b_values: Vec<u32>,
    /// Accept any `b` when `p` is 3 or 7.
    pub exempt_wild_b: bool,
    /// `a_l` comparison bound for the equivalence check.
    pub a_ell_bound: u64,
    /// Prime bound for the Galois sieve.
    pub galois_bound: u64,
    pub timeout_secs: u64,
    /// Upper bound on `|disc|`; `None` processes everything.
    pub max_abs_disc: Option<String>,
    /// Seed of the randomised modular factorisation (fixed).
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            a_values: vec![3, 4],
            b_values: vec![1, 2],
            exempt_wild_b: true,
            a_ell_bound: 1000,
            galois_bound: 1000,
            timeout_secs: 120,
            max_abs_disc: None,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StageSummary {
    pub stage: String,
    pub description: String,
    pub survivors: usize,
}

/// Discriminant valuation at a differing prime against the predicted window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WindowCheck {
    pub prime: u64,
    pub valuation: u32,
    pub wild: bool,
    pub window: BTreeSet<usize>,
    pub inside: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportedPair {
    pub label_a: String,
    pub label_b: String,
    pub poly_a: String,
    pub poly_b: String,
    pub field_disc: String,
    pub signature: (usize, usize),
    pub galois_a: GaloisVerdict,
    pub galois_b: GaloisVerdict,
    pub certificate: EquivalenceCertificate,
    pub comparisons: Vec<RamSumComparison>,
    pub window_checks: Vec<WindowCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkippedPair {
    pub label_a: String,
    pub label_b: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub config: SearchConfig,
    pub records: usize,
    pub stages: Vec<StageSummary>,
    pub pairs: Vec<ReportedPair>,
    /// Pairs whose equivalence check timed out or failed.
    pub inconclusive: Vec<SkippedPair>,
    pub warnings: Vec<String>,
}

/// `Some((a, p, b))` when `d = 2^(2a) p^(2b)` with `p` an odd prime.
pub fn disc_shape(d: &BigInt) -> Option<(u32, u64, u32)> {
    if !d.is_positive() {
        return None;
    }
    let fac = factor_integer(d);
    if fac.len() != 2 || fac[0].0 != BigInt::from(2) {
        return None;
    }
    let (v2, (p, vp)) = (fac[0].1, (&fac[1].0, fac[1].1));
    if v2 % 2 != 0 || vp % 2 != 0 {
        return None;
    }
    Some((v2 / 2, p.to_u64()?, vp / 2))
}

fn passes_stage_one(k: &NumberField, config: &SearchConfig, max: Option<&BigInt>) -> bool {
    if max.is_some_and(|m| k.field_disc().abs() > *m) {
        return false;
    }
    match disc_shape(k.field_disc()) {
        Some((a, p, b)) => {
            config.a_values.contains(&a)
                && (config.b_values.contains(&b) || (config.exempt_wild_b && WILD_ODD_PRIMES.contains(&p)))
        }
        None => false,
    }
}

/// Arithmetic types at which PSL(2,7) fields can show different
/// ramification sums.
pub fn ambiguous_psl27_types() -> &'static BTreeSet<ArithmeticType> {
    static SET: OnceLock<BTreeSet<ArithmeticType>> = OnceLock::new();
    SET.get_or_init(|| {
        let real = psl27_realizable_types(RamificationMode::Any).expect("degree 7");
        ambiguous_arithmetic_types(7, Some(&real))
            .expect("degree 7")
            .into_iter()
            .map(|a| a.arithmetic_type)
            .collect()
    })
}

/// Predicted `v_l(disc)` at a prime where the sums differ: the tame window,
/// or the wild window at `l` from the joint PSL(2,7) splittings.
pub fn valuation_window(l: u64, wild: bool) -> BTreeSet<usize> {
    static TAME: OnceLock<BTreeSet<usize>> = OnceLock::new();
    static WILD: OnceLock<Vec<(crate::splitting::FactorizationType, crate::splitting::FactorizationType)>> =
        OnceLock::new();
    if !wild {
        return TAME
            .get_or_init(|| {
                let amb = ambiguous_arithmetic_types(7, None).expect("degree 7");
                tame_valuation_window(7, &amb, true)
            })
            .clone();
    }
    let joint = WILD.get_or_init(|| psl27_joint_differing_types(RamificationMode::Any).expect("PSL(2,7)"));
    wild_valuation_window(joint, l, true).0
}

struct Built {
    record: FieldRecord,
    field: NumberField,
}

fn ambiguous_at(a: &NumberField, b: &NumberField, l: u64) -> bool {
    let amb = ambiguous_psl27_types();
    let t = |k: &NumberField| k.prime_decomposition(l).map(|d| d.factorization_type.arithmetic_type());
    matches!((t(a), t(b)), (Ok(x), Ok(y)) if amb.contains(&x) && amb.contains(&y))
}

/// Runs stages (i)-(v) over ingested records. Output is independent of
/// record order and of scheduling.
pub fn run_search(records: &[FieldRecord], config: &SearchConfig) -> SearchReport {
    let max = config.max_abs_disc.as_ref().and_then(|s| s.parse::<BigInt>().ok());
    let mut records: Vec<FieldRecord> = records.to_vec();
    records.sort_by(|a, b| a.coeffs.cmp_canonical(&b.coeffs).then_with(|| a.label.cmp(&b.label)));
    records.dedup_by(|a, b| a.coeffs == b.coeffs);
    records.sort_by(|a, b| a.label.cmp(&b.label).then_with(|| a.coeffs.cmp_canonical(&b.coeffs)));
    let mut warnings = Vec::new();

    // (i) discriminant shape
    let built: Vec<Result<Built, String>> = records
        .par_iter()
        .map(|r| match field_from_poly(&r.coeffs) {
            Ok(field) => Ok(Built { record: r.clone(), field }),
            Err(e) => Err(format!("{}: {e}", r.label)),
        })
        .collect();
    let mut stage1 = Vec::new();
    for b in built {
        match b {
            Ok(b) if passes_stage_one(&b.field, config, max.as_ref()) => stage1.push(b),
            Ok(_) => {}
            Err(w) => warnings.push(w),
        }
    }

    // (ii) same discriminant and signature, ambiguous type at 2 or p
    let mut groups: BTreeMap<(BigInt, (usize, usize)), Vec<usize>> = BTreeMap::new();
    for (i, b) in stage1.iter().enumerate() {
        groups.entry((b.field.field_disc().clone(), b.field.signature())).or_default().push(i);
    }
    let mut candidates = Vec::new();
    for idx in groups.values() {
        for (x, &i) in idx.iter().enumerate() {
            for &j in &idx[x + 1..] {
                candidates.push((i, j));
            }
        }
    }
    let stage2: Vec<(usize, usize)> = candidates
        .into_par_iter()
        .filter(|&(i, j)| {
            let (a, b) = (&stage1[i].field, &stage1[j].field);
            let (_, p, _) = disc_shape(a.field_disc()).expect("passed stage (i)");
            ambiguous_at(a, b, 2) || ambiguous_at(a, b, p)
        })
        .collect();

    // (iii) both PSL(2,7)
    let involved: BTreeSet<usize> = stage2.iter().flat_map(|&(i, j)| [i, j]).collect();
    let galois: BTreeMap<usize, GaloisVerdict> = involved
        .into_par_iter()
        .filter_map(|i| identify_galois7(&stage1[i].field, config.galois_bound).ok().map(|v| (i, v)))
        .collect();
    let is_psl = |i: usize| galois.get(&i).is_some_and(|v| v.label == GaloisLabel::Psl27);
    let stage3: Vec<(usize, usize)> = stage2.iter().copied().filter(|&(i, j)| is_psl(i) && is_psl(j)).collect();

    // (iv) certified equivalence
    let timeout = Duration::from_secs(config.timeout_secs);
    let certs: Vec<((usize, usize), Result<EquivalenceCertificate, String>)> = stage3
        .par_iter()
        .map(|&(i, j)| {
            let r = check_equivalence_with_timeout(&stage1[i].field, &stage1[j].field, config.a_ell_bound, timeout)
                .map_err(|e| e.to_string());
            ((i, j), r)
        })
        .collect();
    let mut inconclusive = Vec::new();
    let mut stage4 = Vec::new();
    for ((i, j), r) in certs {
        let skipped = |reason: String| SkippedPair {
            label_a: stage1[i].record.label.clone(),
            label_b: stage1[j].record.label.clone(),
            reason,
        };
        match r {
            Ok(c) if c.verdict == Verdict::Equivalent => stage4.push(((i, j), c)),
            Ok(c) if c.verdict == Verdict::Inconclusive => inconclusive.push(skipped(c.notes.join("; "))),
            Ok(_) => {}
            Err(e) => inconclusive.push(skipped(e)),
        }
    }

    // (v) differing ramification sums
    let mut pairs = Vec::new();
    for ((i, j), cert) in stage4.iter() {
        let (a, b) = (&stage1[*i], &stage1[*j]);
        let comparisons = match compare_ramification_sums(&a.field, &b.field, cert) {
            Ok(c) => c,
            Err(e) => {
                warnings.push(format!("{} / {}: {e}", a.record.label, b.record.label));
                continue;
            }
        };
        if !comparisons.iter().any(|c| c.differs) {
            continue;
        }
        let window_checks = comparisons
            .iter()
            .filter(|c| c.differs)
            .map(|c| {
                let window = valuation_window(c.prime, c.wild);
                WindowCheck {
                    prime: c.prime,
                    valuation: c.disc_valuation,
                    wild: c.wild,
                    inside: window.contains(&(c.disc_valuation as usize)),
                    window,
                }
            })
            .collect();
        pairs.push(ReportedPair {
            label_a: a.record.label.clone(),
            label_b: b.record.label.clone(),
            poly_a: a.record.coeffs.to_list_string(),
            poly_b: b.record.coeffs.to_list_string(),
            field_disc: a.field.field_disc().to_string(),
            signature: a.field.signature(),
            galois_a: galois[i].clone(),
            galois_b: galois[j].clone(),
            certificate: cert.clone(),
            comparisons,
            window_checks,
        });
    }
    pairs.sort_by(|x, y| (&x.label_a, &x.label_b).cmp(&(&y.label_a, &y.label_b)));
    inconclusive.sort_by(|x, y| (&x.label_a, &x.label_b).cmp(&(&y.label_a, &y.label_b)));

    let stage = |id: &str, description: &str, survivors: usize| StageSummary {
        stage: id.into(),
        description: description.into(),
        survivors,
    };
    SearchReport {
        config: config.clone(),
        records: records.len(),
        stages: vec![
            stage("i", "fields with discriminant 2^(2a) p^(2b) in the configured windows", stage1.len()),
            stage("ii", "pairs with equal discriminant and signature, ambiguous type at 2 or p", stage2.len()),
            stage("iii", "pairs with both Galois groups PSL(2,7)", stage3.len()),
            stage("iv", "pairs certified arithmetically equivalent", stage4.len()),
            stage("v", "pairs with a prime of differing ramification sums", pairs.len()),
        ],
        pairs,
        inconclusive,
        warnings,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discriminant_shapes() {
        let d = BigInt::from(64) * BigInt::from(691 * 691);
        assert_eq!(disc_shape(&d), Some((3, 691, 1)));
        assert_eq!(disc_shape(&-d.clone()), None);
        assert_eq!(disc_shape(&(d * 3)), None);
        assert_eq!(disc_shape(&BigInt::from(49)), None);
    }

    #[test]
    fn windows() {
        assert_eq!(valuation_window(691, false), [2, 4].into_iter().collect());
        assert!(valuation_window(2, true).is_superset(&[6, 8].into_iter().collect()));
    }
}
