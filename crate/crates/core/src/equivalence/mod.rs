//! Arithmetic equivalence certificates, Galois group identification for
//! septic fields and ramification-sum comparison.

mod galois;

pub use galois::{identify_galois7, septic_cycle_types, GaloisLabel, GaloisStatus, GaloisVerdict};

use std::sync::mpsc;
use std::thread;
use std::time::Duration;

use serde::Serialize;

use crate::algebra::integer::{is_prime_u64, primes_up_to};
use crate::numberfield::{compositum_degrees, NumberField, NumberFieldError};
use crate::permgroup::{is_quasi_conjugate, psl27_on_7_points, QuasiConjugacyCertificate};
use crate::splitting::FactorizationType;

/// Per-pair budget used by the search.
pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(120);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EquivalenceError {
    #[error("field has degree {0}, expected 7")]
    NotSeptic(usize),
    #[error("fields are not certified arithmetically equivalent")]
    NotEquivalent,
    #[error(transparent)]
    NumberField(#[from] NumberFieldError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Equivalent,
    NotEquivalent,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EquivalenceMethod {
    /// Degree, discriminant or signature differ (and no `a_l` witness was
    /// found below the bound).
    InvariantMismatch,
    AEllMismatch,
    PrimeDegreeCompositum,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Equivalent => "equivalent",
            Verdict::NotEquivalent => "not_equivalent",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

impl std::fmt::Display for EquivalenceMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            EquivalenceMethod::InvariantMismatch => "invariant_mismatch",
            EquivalenceMethod::AEllMismatch => "a_ell_mismatch",
            EquivalenceMethod::PrimeDegreeCompositum => "prime_degree_compositum",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceCertificate {
    pub verdict: Verdict,
    pub method: Option<EquivalenceMethod>,
    pub compositum_degrees: Option<Vec<usize>>,
    pub compositum_shift: Option<i64>,
    pub a_ell_checked_bound: u64,
    /// Unramified primes at which `a_l` was compared.
    pub a_ell_primes_checked: usize,
    pub first_mismatch_prime: Option<u64>,
    pub invariant_mismatch: Option<String>,
    /// Some compositum has degree `n`: the fields are isomorphic.
    pub isomorphic: bool,
    pub notes: Vec<String>,
}

impl EquivalenceCertificate {
    fn new(bound: u64) -> Self {
        EquivalenceCertificate {
            verdict: Verdict::Inconclusive,
            method: None,
            compositum_degrees: None,
            compositum_shift: None,
            a_ell_checked_bound: bound,
            a_ell_primes_checked: 0,
            first_mismatch_prime: None,
            invariant_mismatch: None,
            isomorphic: false,
            notes: Vec::new(),
        }
    }

    fn inconclusive(bound: u64, note: String) -> Self {
        let mut c = Self::new(bound);
        c.notes.push(note);
        c
    }
}

/// Number of primes of residue degree 1 above `l`.
pub fn a_ell(k: &NumberField, l: u64) -> Result<usize, NumberFieldError> {
    let d = k.prime_decomposition(l)?;
    Ok(d.factorization_type.pairs().iter().filter(|p| p.0 == 1).count())
}

/// Exact arithmetic-equivalence test for fields of prime degree; other
/// degrees end inconclusive once all necessary conditions pass.
pub fn check_equivalence(k: &NumberField, k1: &NumberField, bound: u64) -> Result<EquivalenceCertificate, EquivalenceError> {
    let mut cert = EquivalenceCertificate::new(bound);
    if k.degree() != k1.degree() {
        cert.verdict = Verdict::NotEquivalent;
        cert.method = Some(EquivalenceMethod::InvariantMismatch);
        cert.invariant_mismatch = Some(format!("degree {} vs {}", k.degree(), k1.degree()));
        return Ok(cert);
    }
    cert.invariant_mismatch = if k.field_disc() != k1.field_disc() {
        Some(format!("field discriminant {} vs {}", k.field_disc(), k1.field_disc()))
    } else if k.signature() != k1.signature() {
        Some(format!("signature {:?} vs {:?}", k.signature(), k1.signature()))
    } else {
        None
    };
    // a_l is scanned even after an invariant mismatch, to record a witness prime
    for l in primes_up_to(bound) {
        if k.disc_valuation(l) > 0 || k1.disc_valuation(l) > 0 {
            continue;
        }
        cert.a_ell_primes_checked += 1;
        if a_ell(k, l)? != a_ell(k1, l)? {
            cert.verdict = Verdict::NotEquivalent;
            cert.method = Some(EquivalenceMethod::AEllMismatch);
            cert.first_mismatch_prime = Some(l);
            return Ok(cert);
        }
    }
    if cert.invariant_mismatch.is_some() {
        cert.verdict = Verdict::NotEquivalent;
        cert.method = Some(EquivalenceMethod::InvariantMismatch);
        return Ok(cert);
    }
    let n = k.degree();
    if !is_prime_u64(n as u64) {
        cert.notes.push(format!(
            "degree {n} is not prime; matching invariants and a_l up to {bound} do not certify equivalence"
        ));
        return Ok(cert);
    }
    let comp = compositum_degrees(k, k1)?;
    cert.method = Some(EquivalenceMethod::PrimeDegreeCompositum);
    cert.compositum_shift = Some(comp.shift);
    cert.isomorphic = comp.degrees.contains(&n);
    let linearly_disjoint = comp.degrees.len() == 1;
    cert.verdict = if cert.isomorphic || linearly_disjoint { Verdict::NotEquivalent } else { Verdict::Equivalent };
    if cert.isomorphic {
        cert.notes.push(format!("a compositum of degree {n} exists: the fields are isomorphic"));
    } else if linearly_disjoint {
        cert.notes.push("compositum resultant is irreducible: the fields are linearly disjoint".into());
    } else {
        cert.notes.push(
            "equivalence is read off a reducible compositum resultant with no factor of degree n, i.e. from the \
             fields NOT being linearly disjoint; the converse formulation (equivalent iff linearly disjoint) \
             contradicts this and is not used"
                .into(),
        );
    }
    cert.compositum_degrees = Some(comp.degrees);
    Ok(cert)
}

/// [`check_equivalence`] on a worker thread; past `timeout` the result is
/// an inconclusive certificate (the worker is left to finish on its own).
pub fn check_equivalence_with_timeout(
    k: &NumberField,
    k1: &NumberField,
    bound: u64,
    timeout: Duration,
) -> Result<EquivalenceCertificate, EquivalenceError> {
    let (tx, rx) = mpsc::channel();
    let (a, b) = (k.clone(), k1.clone());
    thread::spawn(move || {
        let _ = tx.send(check_equivalence(&a, &b, bound));
    });
    match rx.recv_timeout(timeout) {
        Ok(r) => r,
        Err(_) => Ok(EquivalenceCertificate::inconclusive(
            bound,
            format!("timed out after {} s", timeout.as_secs_f64()),
        )),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamSumComparison {
    pub prime: u64,
    pub type_k: FactorizationType,
    pub type_k1: FactorizationType,
    pub sum_k: usize,
    pub sum_k1: usize,
    pub differs: bool,
    /// Residue-degree multisets agree; a mismatch is a finding, not an error.
    pub arithmetic_types_agree: bool,
    /// `v_l` of the common field discriminant.
    pub disc_valuation: u32,
    pub wild: bool,
}

/// Compares `e_1 + ... + e_g` on both sides at every ramified prime of a
/// certified equivalent pair.
pub fn compare_ramification_sums(
    k: &NumberField,
    k1: &NumberField,
    cert: &EquivalenceCertificate,
) -> Result<Vec<RamSumComparison>, EquivalenceError> {
    if cert.verdict != Verdict::Equivalent {
        return Err(EquivalenceError::NotEquivalent);
    }
    let mut primes: Vec<u64> = Vec::new();
    for p in k.ramified_primes().into_iter().chain(k1.ramified_primes()) {
        let p: u64 = p.try_into().map_err(|_| NumberFieldError::PrimeTooLarge("ramified prime".into()))?;
        if !primes.contains(&p) {
            primes.push(p);
        }
    }
    primes.sort_unstable();
    primes
        .into_iter()
        .map(|l| {
            let a = k.prime_decomposition(l)?;
            let b = k1.prime_decomposition(l)?;
            let (sum_k, sum_k1) = (a.factorization_type.ramification_sum(), b.factorization_type.ramification_sum());
            Ok(RamSumComparison {
                prime: l,
                arithmetic_types_agree: a.factorization_type.arithmetic_type() == b.factorization_type.arithmetic_type(),
                type_k: a.factorization_type,
                type_k1: b.factorization_type,
                sum_k,
                sum_k1,
                differs: sum_k != sum_k1,
                disc_valuation: k.disc_valuation(l),
                wild: a.wild || b.wild,
            })
        })
        .collect()
}

/// Class-by-class intersection table of the two non-conjugate `S4`
/// subgroup classes of `PSL(2,7)` acting on 7 points.
pub fn gassmann_certificate_psl27() -> QuasiConjugacyCertificate {
    let g = psl27_on_7_points();
    let s4: Vec<_> = g.subgroup_classes().iter().filter(|c| c.order == 24).collect();
    assert_eq!(s4.len(), 2, "PSL(2,7) has two classes of subgroups of order 24");
    is_quasi_conjugate(g, &s4[0].representative, &s4[1].representative).expect("subgroups of g")
}
