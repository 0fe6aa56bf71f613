//! Regression checklist over the reference pairs and the group-theoretic
//! facts they rest on.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::IntPolynomial;
use crate::equivalence::{
    check_equivalence, compare_ramification_sums, gassmann_certificate_psl27, identify_galois7, GaloisLabel, Verdict,
};
use crate::numberfield::{field_from_poly, NumberField};
use crate::permgroup::{psl27_on_7_points, RamificationMode};
use crate::splitting::{
    ambiguous_arithmetic_types, psl27_realizable_types, type_report, ArithmeticType, FactorizationType,
};

use super::reference::{reference_poly, REFERENCE_POLYNOMIALS, REFERENCE_TYPE_LISTS};
use super::{run_search, valuation_window, FieldRecord, SearchConfig};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub id: String,
    pub description: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub items: Vec<CheckItem>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.pass)
    }

    pub fn get(&self, id: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.id == id)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.items {
            writeln!(
                f,
                "{} {:<22} {}: expected {}, observed {}",
                if i.pass { "PASS" } else { "FAIL" },
                i.id,
                i.description,
                i.expected,
                i.observed
            )?;
        }
        let passed = self.items.iter().filter(|i| i.pass).count();
        writeln!(f, "{passed}/{} checks passed", self.items.len())
    }
}

/// The four polynomials `f1, g1, f2, g2` under test.
#[derive(Clone, Debug)]
pub struct ReferenceInputs {
    pub polys: [(String, IntPolynomial); 4],
}

impl Default for ReferenceInputs {
    fn default() -> Self {
        let p = |i: usize| (REFERENCE_POLYNOMIALS[i].0.to_string(), reference_poly(&REFERENCE_POLYNOMIALS[i].1));
        ReferenceInputs { polys: [p(0), p(1), p(2), p(3)] }
    }
}

struct Items(Vec<CheckItem>);

impl Items {
    fn push(&mut self, id: &str, description: &str, expected: impl ToString, observed: impl ToString, pass: bool) {
        self.0.push(CheckItem {
            id: id.into(),
            description: description.into(),
            expected: expected.to_string(),
            observed: observed.to_string(),
            pass,
        });
    }

    fn eq<T: PartialEq + fmt::Display>(&mut self, id: &str, description: &str, expected: T, observed: Result<T, String>) {
        match observed {
            Ok(o) => {
                let pass = o == expected;
                self.push(id, description, expected, o, pass)
            }
            Err(e) => self.push(id, description, expected, format!("error: {e}"), false),
        }
    }
}

fn set_string<T: fmt::Display>(s: impl IntoIterator<Item = T>) -> String {
    format!("{{{}}}", s.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
}

fn ft(s: &str) -> FactorizationType {
    s.parse().expect("reference type")
}

/// Runs the checklist on the reference polynomials.
pub fn verify_reference_results() -> VerificationReport {
    verify_with_inputs(&ReferenceInputs::default())
}

/// Runs the checklist on the given polynomials (same expectations), so
/// corrupted inputs show which items depend on them.
pub fn verify_with_inputs(inputs: &ReferenceInputs) -> VerificationReport {
    let mut items = Items(Vec::new());
    let fields: Vec<Result<NumberField, String>> =
        inputs.polys.iter().map(|(_, f)| field_from_poly(f).map_err(|e| e.to_string())).collect();
    let name = |i: usize| inputs.polys[i].0.as_str();

    // discriminants
    let d1 = BigInt::from(2).pow(6) * BigInt::from(691).pow(2);
    let d2 = BigInt::from(2).pow(8) * BigInt::from(7).pow(8);
    for (i, d) in [&d1, &d1, &d2, &d2].into_iter().enumerate() {
        let obs = fields[i].as_ref().map(|k| k.field_disc().clone()).map_err(Clone::clone);
        let expected = if i < 2 { "2^6 * 691^2" } else { "2^8 * 7^8" };
        items.eq(
            &format!("disc.{}", name(i)),
            &format!("field discriminant of {} ({expected})", name(i)),
            d.clone(),
            obs,
        );
    }

    // factorization types
    let types = [
        (0, 2, "{(1,3),(4,1)}"),
        (1, 2, "{(1,3),(1,2)}"),
        (0, 691, "{(1,1,1,2),(1,1,1,2)}"),
        (1, 691, "{(1,1,1,2),(2,1,2,1)}"),
        (2, 2, "{(1,1,2),(1,4,1)}"),
        (3, 2, "{(1,1,2),(1,2,2)}"),
    ];
    for (i, l, t) in types {
        let obs = fields[i]
            .as_ref()
            .map_err(Clone::clone)
            .and_then(|k| k.prime_decomposition(l).map_err(|e| e.to_string()))
            .map(|d| d.factorization_type);
        items.eq(&format!("type.{}.{l}", name(i)), &format!("splitting of {l} in {}", name(i)), ft(t), obs);
    }

    // equivalence and ramification sums
    let expected_sums: [&[(u64, usize, usize)]; 2] = [&[(2, 5, 3), (691, 5, 6)], &[(2, 6, 5)]];
    for (p, (a, b)) in [(0usize, 1usize), (2, 3)].into_iter().enumerate() {
        let id = format!("equiv.pair{}", p + 1);
        let desc = format!("{} and {} equivalent via composita of degree <= 28, none of degree 7", name(a), name(b));
        let (ka, kb) = match (&fields[a], &fields[b]) {
            (Ok(x), Ok(y)) => (x, y),
            _ => {
                items.push(&id, &desc, "equivalent", "error: field construction failed", false);
                items.push(&format!("ramsum.pair{}", p + 1), "differing ramification sums", "-", "skipped", false);
                continue;
            }
        };
        let cert = check_equivalence(ka, kb, 1000);
        match &cert {
            Ok(c) => {
                let degs = c.compositum_degrees.clone().unwrap_or_default();
                let pass = c.verdict == Verdict::Equivalent
                    && !degs.is_empty()
                    && degs.iter().all(|&d| d <= 28 && d != 7);
                items.push(
                    &id,
                    &desc,
                    "equivalent, degrees <= 28 without 7",
                    format!("{}, degrees {}", c.verdict, set_string(&degs)),
                    pass,
                );
            }
            Err(e) => items.push(&id, &desc, "equivalent", format!("error: {e}"), false),
        }
        let sums = cert.map_err(|e| e.to_string()).and_then(|c| {
            compare_ramification_sums(ka, kb, &c).map_err(|e| e.to_string())
        });
        let expected = set_string(expected_sums[p].iter().map(|(l, x, y)| format!("l={l}: {x} vs {y}")));
        let observed = sums.map(|cs| {
            set_string(cs.iter().filter(|c| c.differs).map(|c| format!("l={}: {} vs {}", c.prime, c.sum_k, c.sum_k1)))
        });
        items.eq(
            &format!("ramsum.pair{}", p + 1),
            &format!("primes where {} and {} have different ramification sums", name(a), name(b)),
            expected,
            observed,
        );
    }

    // Galois groups
    let labels: Result<Vec<String>, String> = fields
        .iter()
        .map(|k| {
            let k = k.as_ref().map_err(Clone::clone)?;
            identify_galois7(k, 1000).map(|v| v.label.to_string()).map_err(|e| e.to_string())
        })
        .collect();
    items.eq(
        "galois.reference",
        "Galois group label of all four fields",
        set_string(vec![GaloisLabel::Psl27; 4]),
        labels.map(set_string),
    );

    // group engine
    let g = psl27_on_7_points();
    items.eq("group.order", "order of PSL(2,7) on 7 points", 168, Ok(g.order()));
    let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.size).collect();
    sizes.sort_unstable();
    items.eq("group.classes", "conjugacy class sizes", "[1, 21, 24, 24, 42, 56]".to_string(), Ok(format!("{sizes:?}")));
    let orders: Vec<usize> = g.subgroup_classes().iter().map(|c| c.order).collect();
    items.eq(
        "group.subgroups",
        "orders of the subgroup classes",
        "[1, 2, 3, 4, 4, 4, 6, 7, 8, 12, 12, 21, 24, 24, 168]".to_string(),
        Ok(format!("{orders:?}")),
    );
    let cert = gassmann_certificate_psl27();
    items.eq(
        "group.s4",
        "the two S4 classes: quasi-conjugate, conjugate",
        "(true, false)".to_string(),
        Ok(format!("({}, {})", cert.quasi_conjugate, cert.conjugate)),
    );

    // realizability
    let modes = [
        ("tame", RamificationMode::Tame),
        ("wild(2)", RamificationMode::Wild(2)),
        ("wild(3)", RamificationMode::Wild(3)),
        ("wild(7)", RamificationMode::Wild(7)),
    ];
    let realizable: Vec<(&str, BTreeSet<FactorizationType>)> = modes
        .iter()
        .map(|(n, m)| (*n, psl27_realizable_types(*m).expect("degree 7")))
        .collect();
    let realized_in = |t: &FactorizationType| -> Vec<&str> {
        realizable.iter().filter(|(_, s)| s.contains(t)).map(|(n, _)| *n).collect()
    };
    for (id, t) in [
        ("real.122_311", "{(1,2,2),(3,1,1)}"),
        ("real.12_32", "{(1,2),(3,2)}"),
        ("real.12_51", "{(1,2),(5,1)}"),
    ] {
        let modes = realized_in(&ft(t));
        let pass = modes.is_empty();
        items.push(id, &format!("{t} realizable in a PSL(2,7) septic field"), "in no mode", set_string(modes), pass);
    }
    let remark = ft("{(1,2),(1,3)}");
    let modes_found = realized_in(&remark);
    items.push(
        "real.12_13",
        "{(1,2),(1,3)} realizable with tame inertia",
        "no",
        format!("realizable in {}", set_string(&modes_found)),
        !modes_found.contains(&"tame"),
    );

    // ambiguous types and enumeration
    let any = psl27_realizable_types(RamificationMode::Any).expect("degree 7");
    let amb: BTreeSet<ArithmeticType> =
        ambiguous_arithmetic_types(7, Some(&any)).expect("degree 7").into_iter().map(|a| a.arithmetic_type).collect();
    let expected_amb: BTreeSet<ArithmeticType> =
        ["(1,3)", "(1,1,2)", "(1,1,1,2)"].iter().map(|s| s.parse().expect("type")).collect();
    items.eq(
        "cases.ambiguous",
        "ambiguous arithmetic types under PSL(2,7) realizability (tame or wild inertia)",
        set_string(&expected_amb),
        Ok(set_string(&amb)),
    );
    let report = type_report(7, None).expect("degree 7");
    for g in [4usize, 3, 2] {
        let expected: Vec<(String, BTreeSet<FactorizationType>)> = REFERENCE_TYPE_LISTS
            .iter()
            .filter(|r| r.0 == g)
            .map(|r| (r.1.to_string(), r.2.iter().map(|s| ft(s)).collect()))
            .collect();
        let observed: Vec<(String, BTreeSet<FactorizationType>)> = report
            .groups
            .iter()
            .filter(|grp| grp.g == g)
            .flat_map(|grp| grp.rows.iter())
            .filter(|r| !r.types.is_empty())
            .map(|r| {
                let part: Vec<String> = r.partition.iter().map(usize::to_string).collect();
                (part.join("+"), r.types.iter().cloned().collect())
            })
            .collect();
        let render = |rows: &[(String, BTreeSet<FactorizationType>)]| {
            rows.iter().map(|(p, ts)| format!("{p}: {} types", ts.len())).collect::<Vec<_>>().join("; ")
        };
        let pass = observed == expected;
        items.push(
            &format!("cases.g{g}"),
            &format!("ramified types with g = {g} by partition"),
            render(&expected),
            render(&observed),
            pass,
        );
    }

    // valuation windows
    let tame: BTreeSet<usize> = [2, 4].into_iter().collect();
    items.eq("window.tame", "tame window for v_l(disc)", set_string(&tame), Ok(set_string(valuation_window(3, false))));
    let wild: BTreeSet<usize> = [6, 8].into_iter().collect();
    items.eq("window.wild2", "wild window for v_2(disc)", set_string(&wild), Ok(set_string(valuation_window(2, true))));
    let v691: Result<String, String> = fields[..2]
        .iter()
        .map(|k| k.as_ref().map(|k| k.disc_valuation(691)).map_err(Clone::clone))
        .collect::<Result<Vec<_>, _>>()
        .map(|v| format!("{v:?}"));
    items.eq("window.v691", "v_691(disc) for the first pair", "[2, 2]".to_string(), v691);
    let v2: Result<String, String> = [0, 2]
        .iter()
        .map(|&i| fields[i].as_ref().map(|k| k.disc_valuation(2)).map_err(Clone::clone))
        .collect::<Result<Vec<_>, _>>()
        .map(|v| format!("{v:?}"));
    items.eq("window.v2", "v_2(disc) of the two pairs, inside {6, 8}", "[6, 8]".to_string(), v2);

    // end to end
    let records: Vec<FieldRecord> =
        inputs.polys.iter().map(|(l, f)| FieldRecord { label: l.clone(), coeffs: f.clone() }).collect();
    let rep = run_search(&records, &SearchConfig::default());
    let found = set_string(rep.pairs.iter().map(|p| {
        let sums = p
            .comparisons
            .iter()
            .filter(|c| c.differs)
            .map(|c| format!("l={}: {} vs {}", c.prime, c.sum_k, c.sum_k1))
            .collect::<Vec<_>>()
            .join(", ");
        format!("{}/{} [{sums}]", p.label_a, p.label_b)
    }));
    let expected = format!(
        "{{{}/{} [l=2: 5 vs 3, l=691: 5 vs 6], {}/{} [l=2: 6 vs 5]}}",
        name(0),
        name(1),
        name(2),
        name(3)
    );
    let pass = found == expected;
    items.push("search.reference", "search over the four polynomials", expected, found, pass);

    VerificationReport { items: items.0 }
}
