//! Acceptance run: one PASS/FAIL line per criterion, with the time limits
//! pinned below. Exits non-zero when any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;

use gassmann::permgroup::psl27_on_7_points;
use gassmann::search::reference::{reference_poly, reference_tsv, REFERENCE_POLYNOMIALS, REFERENCE_TYPE_LISTS};
use gassmann::search::{ingest, valuation_window};
use gassmann::splitting::{ambiguous_arithmetic_types, psl27_realizable_types, type_report};
use gassmann::{
    check_equivalence, field_from_poly, gassmann_certificate_psl27, run_search,
    ArithmeticType, FactorizationType, NumberField, RamificationMode, SearchConfig, Verdict,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn ft(s: &str) -> FactorizationType {
    s.parse().expect("factorization type literal")
}

fn fields() -> Vec<NumberField> {
    REFERENCE_POLYNOMIALS.iter().map(|(_, c)| field_from_poly(&reference_poly(c)).expect("reference field")).collect()
}

fn set<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    format!("{{{}}}", xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
}

fn discriminants() -> Outcome {
    let d1 = BigInt::from(2).pow(6) * BigInt::from(691).pow(2);
    let d2 = BigInt::from(2).pow(8) * BigInt::from(7).pow(8);
    let mut pass = true;
    let mut parts = Vec::new();
    for ((name, c), d) in REFERENCE_POLYNOMIALS.iter().zip([&d1, &d1, &d2, &d2]) {
        let t = Instant::now();
        let k = field_from_poly(&reference_poly(c));
        let secs = t.elapsed().as_secs_f64();
        let ok = k.as_ref().is_ok_and(|k| k.field_disc() == d) && secs < 10.0;
        pass &= ok;
        let got = k.map(|k| k.field_disc().to_string()).unwrap_or_else(|e| e.to_string());
        parts.push(format!("{name} {got} ({secs:.2} s)"));
    }
    outcome(pass, format!("{}; limit 10 s per field", parts.join(", ")))
}

fn factorization_types() -> Outcome {
    let t = Instant::now();
    let k = fields();
    let expected = [
        (0, 2, "{(1,3),(4,1)}"),
        (1, 2, "{(1,3),(1,2)}"),
        (0, 691, "{(1,1,1,2),(1,1,1,2)}"),
        (1, 691, "{(1,1,1,2),(2,1,2,1)}"),
        (2, 2, "{(1,1,2),(1,4,1)}"),
        (3, 2, "{(1,1,2),(1,2,2)}"),
    ];
    let mut bad = Vec::new();
    for (i, l, s) in expected {
        match k[i].prime_decomposition(l) {
            Ok(d) if d.factorization_type == ft(s) => {}
            Ok(d) => bad.push(format!("{} at {l}: {}", REFERENCE_POLYNOMIALS[i].0, d.factorization_type)),
            Err(e) => bad.push(format!("{} at {l}: {e}", REFERENCE_POLYNOMIALS[i].0)),
        }
    }
    let index_divisor = k[2].index() % 2u32 == BigInt::from(0);
    let secs = t.elapsed().as_secs_f64();
    let pass = bad.is_empty() && secs < 10.0;
    let detail = if bad.is_empty() {
        format!("6/6 types exact, 2 divides the index of f2: {index_divisor} ({secs:.2} s, limit 10 s)")
    } else {
        format!("mismatches: {} ({secs:.2} s)", bad.join("; "))
    };
    outcome(pass, detail)
}

fn equivalence() -> Outcome {
    let k = fields();
    let mut pass = true;
    let mut parts = Vec::new();
    for (a, b) in [(0, 1), (2, 3)] {
        let t = Instant::now();
        let c = check_equivalence(&k[a], &k[b], 1000);
        let secs = t.elapsed().as_secs_f64();
        let names = format!("{}/{}", REFERENCE_POLYNOMIALS[a].0, REFERENCE_POLYNOMIALS[b].0);
        match c {
            Ok(c) => {
                let degs = c.compositum_degrees.clone().unwrap_or_default();
                let ok = c.verdict == Verdict::Equivalent
                    && !degs.is_empty()
                    && degs.iter().all(|&d| d <= 28 && d != 7)
                    && c.a_ell_checked_bound == 1000
                    && c.first_mismatch_prime.is_none()
                    && secs < 120.0;
                pass &= ok;
                parts.push(format!(
                    "{names} {} degrees {degs:?}, a_l equal at {} primes <= 1000 ({secs:.2} s)",
                    c.verdict, c.a_ell_primes_checked
                ));
            }
            Err(e) => {
                pass = false;
                parts.push(format!("{names}: {e}"));
            }
        }
    }
    outcome(pass, format!("{}; limit 120 s per pair", parts.join("; ")))
}

fn group_engine() -> Outcome {
    let t = Instant::now();
    let g = psl27_on_7_points();
    let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.size).collect();
    sizes.sort_unstable();
    let mut orders: Vec<usize> = g.subgroup_classes().iter().map(|c| c.order).collect();
    orders.sort_unstable();
    let cert = gassmann_certificate_psl27();
    let secs = t.elapsed().as_secs_f64();
    let pass = g.order() == 168
        && sizes == [1, 21, 24, 24, 42, 56]
        && orders == [1, 2, 3, 4, 4, 4, 6, 7, 8, 12, 12, 21, 24, 24, 168]
        && cert.quasi_conjugate
        && !cert.conjugate
        && secs < 60.0;
    outcome(
        pass,
        format!(
            "order {}, class sizes {sizes:?}, {} subgroup classes {orders:?}, S4 classes quasi-conjugate {} conjugate {} ({secs:.2} s, limit 60 s)",
            g.order(),
            orders.len(),
            cert.quasi_conjugate,
            cert.conjugate
        ),
    )
}

fn realizability() -> Outcome {
    let t = Instant::now();
    let any = psl27_realizable_types(RamificationMode::Any).expect("degree 7");
    let tame = psl27_realizable_types(RamificationMode::Tame).expect("degree 7");
    let never = ["{(1,2,2),(3,1,1)}", "{(1,2),(3,2)}", "{(1,2),(5,1)}"];
    let realized: Vec<&str> = never.iter().copied().filter(|s| any.contains(&ft(s))).collect();
    let remark = tame.contains(&ft("{(1,2),(1,3)}"));
    let secs = t.elapsed().as_secs_f64();
    let pass = realized.is_empty() && !remark && secs < 60.0;
    outcome(
        pass,
        format!(
            "realizable among {}: {}; {{(1,2),(1,3)}} tame-realizable: {remark} ({secs:.2} s, limit 60 s)",
            set(never),
            set(&realized)
        ),
    )
}

fn case_analysis() -> Outcome {
    let types = |mode| -> BTreeSet<ArithmeticType> {
        let r = psl27_realizable_types(mode).expect("degree 7");
        ambiguous_arithmetic_types(7, Some(&r)).expect("degree 7").into_iter().map(|a| a.arithmetic_type).collect()
    };
    let expected: BTreeSet<ArithmeticType> =
        ["(1,3)", "(1,1,2)", "(1,1,1,2)"].iter().map(|s| s.parse().expect("type")).collect();
    let tame = types(RamificationMode::Tame);
    let any = types(RamificationMode::Any);

    let report = type_report(7, None).expect("degree 7");
    let mut lists_ok = true;
    for g in [2usize, 3, 4] {
        let want: Vec<(String, BTreeSet<FactorizationType>)> = REFERENCE_TYPE_LISTS
            .iter()
            .filter(|r| r.0 == g)
            .map(|r| (r.1.to_string(), r.2.iter().map(|s| ft(s)).collect()))
            .collect();
        let got: Vec<(String, BTreeSet<FactorizationType>)> = report
            .groups
            .iter()
            .filter(|grp| grp.g == g)
            .flat_map(|grp| grp.rows.iter())
            .filter(|r| !r.types.is_empty())
            .map(|r| {
                let p: Vec<String> = r.partition.iter().map(usize::to_string).collect();
                (p.join("+"), r.types.iter().cloned().collect())
            })
            .collect();
        lists_ok &= want == got;
    }
    outcome(
        tame == expected && lists_ok,
        format!(
            "tame filter {}, expected {}; tame-or-wild filter {}; g = 2,3,4 lists match: {lists_ok} (2+2+3 entry read as {{(1,1,1),(2,2,3)}})",
            set(&tame),
            set(&expected),
            set(&any)
        ),
    )
}

fn windows() -> Outcome {
    let tame = valuation_window(691, false);
    let wild = valuation_window(2, true);
    let k = fields();
    let v691: Vec<u32> = k[..2].iter().map(|k| k.disc_valuation(691)).collect();
    let pass = tame == BTreeSet::from([2, 4]) && wild == BTreeSet::from([6, 8]) && v691 == [2, 2];
    outcome(
        pass,
        format!(
            "tame {} (expected {{2, 4}}), wild at 2 {} (expected {{6, 8}}), v_691 of pair 1 {v691:?}",
            set(&tame),
            set(&wild)
        ),
    )
}

fn end_to_end() -> Outcome {
    let t = Instant::now();
    let dir = std::env::temp_dir().join(format!("acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join("fields.tsv");
    std::fs::write(&path, reference_tsv()).expect("write input");
    let records = ingest(&path).expect("read input").records;
    let _ = std::fs::remove_dir_all(&dir);
    let report = run_search(&records, &SearchConfig::default());
    let got: Vec<String> = report
        .pairs
        .iter()
        .map(|p| {
            let d: Vec<String> = p
                .comparisons
                .iter()
                .filter(|c| c.differs)
                .map(|c| format!("l={} {} vs {}", c.prime, c.sum_k, c.sum_k1))
                .collect();
            format!("{}/{} [{}]", p.label_a, p.label_b, d.join(", "))
        })
        .collect();
    let expected = ["f1/g1 [l=2 5 vs 3, l=691 5 vs 6]", "f2/g2 [l=2 6 vs 5]"];
    let secs = t.elapsed().as_secs_f64();
    outcome(got == expected && secs < 300.0, format!("{} ({secs:.2} s, limit 300 s)", set(&got)))
}

fn property_suites() -> Outcome {
    let t = Instant::now();
    let results = [
        ("multiply-back", common::multiply_back(1000, 11)),
        ("subgroup lattices", common::subgroup_lattices()),
        ("decomposition paths", common::decomposition_paths(100, 13)),
        ("sturm vs bisection", common::sturm_vs_bisection(200, 17)),
    ];
    let pass = results.iter().all(|(_, r)| r.is_ok());
    let parts: Vec<String> = results
        .iter()
        .map(|(n, r)| match r {
            Ok(c) => format!("{n} {c} ok"),
            Err(e) => format!("{n} FAILED {e}"),
        })
        .collect();
    outcome(pass, format!("{} ({:.2} s)", parts.join(", "), t.elapsed().as_secs_f64()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("field discriminants", discriminants),
        ("factorization types", factorization_types),
        ("equivalence certificates", equivalence),
        ("group engine", group_engine),
        ("realizability", realizability),
        ("ambiguous types and enumeration", case_analysis),
        ("valuation windows", windows),
        ("end-to-end search", end_to_end),
        ("property suites", property_suites),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        failed += usize::from(!o.pass);
        println!("criterion {} {} {name}: {}", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("{}/{} criteria met in {:.1?}", criteria.len() - failed, criteria.len(), start.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
