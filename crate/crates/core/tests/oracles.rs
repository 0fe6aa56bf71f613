//! Library results against independent, deliberately naive implementations.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use gassmann::algebra::resultant::{resultant_modular, resultant_subresultant};
use gassmann::algebra::{factor_mod_p, factor_over_z, poly_resultant};
use gassmann::numberfield::{compositum_resultant, field_from_poly};
use gassmann::permgroup::psl27_on_7_points;
use gassmann::search::reference::{reference_poly, REFERENCE_POLYNOMIALS};
use gassmann::splitting::enumerate_factorization_types;
use gassmann::{gassmann_certificate_psl27, IntPolynomial, ModPolynomial};

use common::{random_poly, rng, table};

// ---------------------------------------------------------------------------
// Resultants

fn bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(s) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, s);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Sylvester matrix of `f` (degree m) and `g` (degree n): n shifted rows
/// of `f`, then m shifted rows of `g`, highest coefficient first.
fn sylvester(f: &IntPolynomial, g: &IntPolynomial) -> Vec<Vec<BigInt>> {
    let (m, n) = (f.deg(), g.deg());
    let size = m + n;
    let mut rows = Vec::new();
    for (p, shifts) in [(f, n), (g, m)] {
        let d = p.deg();
        for s in 0..shifts {
            let mut row = vec![BigInt::zero(); size];
            for i in 0..=d {
                row[s + i] = p.coeff(d - i);
            }
            rows.push(row);
        }
    }
    rows
}

#[test]
fn resultant_matches_sylvester_determinant() {
    let mut r = rng(1);
    for _ in 0..300 {
        let (m, n) = (r.gen_range(1..=7), r.gen_range(1..=7));
        let f = random_poly(&mut r, m..=m, 9, false);
        let g = random_poly(&mut r, n..=n, 9, false);
        let det = bareiss(sylvester(&f, &g));
        let expected = if (m * n) % 2 == 1 { -det } else { det };
        assert_eq!(poly_resultant(&f, &g).unwrap(), expected, "f = {f}, g = {g}");
    }
}

#[test]
fn modular_and_subresultant_resultants_agree() {
    let mut r = rng(2);
    for _ in 0..40 {
        let (m, n) = (r.gen_range(5..=20), r.gen_range(5..=20));
        let f = random_poly(&mut r, m..=m, 50, false);
        let g = random_poly(&mut r, n..=n, 50, false);
        assert_eq!(resultant_modular(&f, &g).unwrap(), resultant_subresultant(&f, &g).unwrap());
    }
}

// ---------------------------------------------------------------------------
// F2 factorisation by trial division on bit masks

fn f2_mul(a: u32, b: u32) -> u32 {
    let mut out = 0;
    for i in 0..32 {
        if b >> i & 1 == 1 {
            out ^= a << i;
        }
    }
    out
}

fn f2_divmod(mut a: u32, b: u32) -> (u32, u32) {
    let db = 31 - b.leading_zeros();
    let mut q = 0;
    while a != 0 && 31 - a.leading_zeros() >= db {
        let s = 31 - a.leading_zeros() - db;
        q |= 1 << s;
        a ^= b << s;
    }
    (q, a)
}

fn f2_trial_division(mut a: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while a > 1 && d <= a {
        let (q, rem) = f2_divmod(a, d);
        if rem == 0 {
            out.push(d);
            a = q;
        } else {
            d += 1;
        }
    }
    out
}

fn to_mask(p: &ModPolynomial) -> u32 {
    p.coeffs().iter().enumerate().map(|(i, &c)| (c as u32) << i).fold(0, |a, b| a | b)
}

#[test]
fn f2_factorisation_matches_trial_division() {
    let mut r = rng(4);
    for _ in 0..500 {
        let deg = r.gen_range(1..=14);
        let mask: u32 = (1 << deg) | r.gen_range(0..(1u32 << deg));
        let coeffs: Vec<u64> = (0..=deg).map(|i| u64::from(mask >> i & 1)).collect();
        let f = ModPolynomial::new(coeffs, 2).unwrap();
        let fac = factor_mod_p(&f).unwrap();
        let mut got: Vec<u32> = fac
            .factors
            .iter()
            .flat_map(|(g, m)| std::iter::repeat(to_mask(g)).take(*m as usize))
            .collect();
        got.sort();
        assert_eq!(got, f2_trial_division(mask), "mask {mask:b}");
        assert_eq!(got.iter().fold(1, |a, &b| f2_mul(a, b)), mask);
    }
}

#[test]
fn sturm_counts_match_bisection() {
    assert_eq!(common::sturm_vs_bisection(200, 3), Ok(200));
}

#[test]
fn factorisation_multiplies_back() {
    assert_eq!(common::multiply_back(1000, 5), Ok(1000));
}

#[test]
fn subgroup_lattices_match_brute_force() {
    assert!(common::subgroup_lattices().is_ok_and(|n| n >= 20), "{:?}", common::subgroup_lattices());
}

#[test]
fn decomposition_paths_agree() {
    assert_eq!(common::decomposition_paths(100, 7), Ok(100));
}

#[test]
fn gassmann_table_matches_brute_force_counts() {
    let g = psl27_on_7_points();
    let t = table(g);
    // conjugacy classes of G by orbits under conjugation
    let mut class_of = vec![usize::MAX; t.n];
    let mut sizes = Vec::new();
    for x in 0..t.n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let orbit: BTreeSet<usize> = (0..t.n).map(|y| t.mul[t.mul[t.inv[y]][x]][y]).collect();
        for &o in &orbit {
            class_of[o] = sizes.len();
        }
        sizes.push(orbit.len());
    }
    let cert = gassmann_certificate_psl27();
    let s4: Vec<_> = g.subgroup_classes().iter().filter(|c| c.order == 24).collect();
    for (k, s) in s4.iter().enumerate() {
        let mut counts: BTreeMap<(usize, String), usize> = BTreeMap::new();
        for p in s.representative.elements() {
            let i = g.elements().iter().position(|q| q == p).unwrap();
            let key = (sizes[class_of[i]], p.cycle_type().to_string());
            *counts.entry(key).or_insert(0) += 1;
        }
        let mut from_cert: BTreeMap<(usize, String), usize> = BTreeMap::new();
        for r in &cert.rows {
            let v = if k == 0 { r.in_h } else { r.in_h1 };
            *from_cert.entry((r.class_size, r.cycle_type.to_string())).or_insert(0) += v;
        }
        from_cert.retain(|_, v| *v > 0);
        assert_eq!(counts, from_cert);
    }
    let mut sorted = sizes.clone();
    sorted.sort();
    assert_eq!(sorted, vec![1, 21, 24, 24, 42, 56]);
}

// ---------------------------------------------------------------------------
// Factorization types: generating function prod_m (1 - x^m)^(-d(m))

#[test]
fn type_counts_match_generating_function() {
    let max = 12;
    let mut coeff = vec![0u64; max + 1];
    coeff[0] = 1;
    for m in 1..=max {
        let divisors = (1..=m).filter(|d| m % d == 0).count();
        for _ in 0..divisors {
            for k in m..=max {
                coeff[k] += coeff[k - m];
            }
        }
    }
    for n in 1..=max {
        let types = enumerate_factorization_types(n).unwrap();
        assert_eq!(types.len() as u64, coeff[n], "n = {n}");
        for t in &types {
            assert_eq!(t.pairs().iter().map(|(f, e)| f * e).sum::<usize>(), n);
        }
    }
}

// ---------------------------------------------------------------------------
// Number fields

/// `det(Tr(w_i w_j))` from the integral basis, with multiplication in
/// Q[x]/(f) and traces from Newton's identities.
fn trace_form_discriminant(f: &IntPolynomial, basis: &[Vec<BigRational>]) -> BigRational {
    let n = f.deg();
    let a: Vec<BigRational> = f.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect();
    // power sums p_k of the roots, k < 2n
    let mut p = vec![BigRational::from_integer(BigInt::from(n))];
    for k in 1..2 * n {
        let mut s = BigRational::zero();
        let top = if k <= n { k - 1 } else { n };
        for i in 1..=top {
            s -= &a[n - i] * &p[k - i];
        }
        if k <= n {
            s -= BigRational::from_integer(BigInt::from(k)) * &a[n - k];
        }
        p.push(s);
    }
    let mul_trace = |u: &[BigRational], v: &[BigRational]| -> BigRational {
        let mut acc = BigRational::zero();
        for (i, x) in u.iter().enumerate() {
            for (j, y) in v.iter().enumerate() {
                acc += x * y * &p[i + j];
            }
        }
        acc
    };
    let mut m: Vec<Vec<BigRational>> =
        basis.iter().map(|u| basis.iter().map(|v| mul_trace(u, v)).collect()).collect();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigRational::zero();
        };
        if piv != k {
            m.swap(piv, k);
            det = -det;
        }
        det *= &m[k][k];
        for i in k + 1..n {
            let r = &m[i][k] / &m[k][k];
            for j in k..n {
                let t = &r * &m[k][j];
                m[i][j] -= t;
            }
        }
    }
    det
}

#[test]
fn field_discriminants_equal_trace_form_determinants() {
    let mut polys: Vec<IntPolynomial> = REFERENCE_POLYNOMIALS.iter().map(|(_, c)| reference_poly(c)).collect();
    polys.push(IntPolynomial::from_i64s(&[-10, 0, 0, 1]));
    polys.push(IntPolynomial::from_i64s(&[-8, -2, -1, 1]));
    polys.push(IntPolynomial::from_i64s(&[-2, 0, 0, 0, 0, 0, 0, 1]));
    let mut r = rng(6);
    while polys.len() < 30 {
        let f = random_poly(&mut r, 2..=6, 12, true);
        if factor_over_z(&f).unwrap().factor_count() == 1 {
            polys.push(f);
        }
    }
    for f in polys {
        let k = field_from_poly(&f).unwrap();
        let d = trace_form_discriminant(&f, &k.integral_basis());
        assert_eq!(d, BigRational::from_integer(k.field_disc().clone()), "f = {f}");
        assert_eq!(k.poly_disc(), &(k.field_disc() * k.index() * k.index()));
    }
}

#[test]
fn index_divisor_decompositions_are_consistent() {
    // 2 splits completely in Dedekind's cubic although it divides every index
    let k = field_from_poly(&IntPolynomial::from_i64s(&[-8, -2, -1, 1])).unwrap();
    let d = k.prime_decomposition(2).unwrap();
    assert_eq!(d.factorization_type.pairs(), &[(1, 1), (1, 1), (1, 1)]);
    for (_, c) in REFERENCE_POLYNOMIALS.iter() {
        let k = field_from_poly(&reference_poly(c)).unwrap();
        for l in [2u64, 3, 5, 7, 691] {
            let t = k.decomposition_via_order(l).unwrap().factorization_type;
            assert_eq!(t.degree(), 7);
            let v = k.disc_valuation(l) as usize;
            // tame primes: v = sum f (e - 1); wild primes exceed it
            let tame_v: usize = t.pairs().iter().map(|(f, e)| f * (e - 1)).sum();
            if t.is_wild_at(l) {
                assert!(v > tame_v);
            } else {
                assert_eq!(v, tame_v, "l = {l}");
            }
        }
    }
}

#[test]
fn compositum_degrees_do_not_depend_on_the_shift() {
    let p: Vec<IntPolynomial> = REFERENCE_POLYNOMIALS.iter().map(|(_, c)| reference_poly(c)).collect();
    for (a, b) in [(0, 1), (2, 3), (0, 0)] {
        let mut seen = Vec::new();
        for k in 1..=4 {
            let res = compositum_resultant(&p[a], &p[b], k).unwrap();
            if !res.is_squarefree() {
                continue;
            }
            let degs = factor_over_z(&res).unwrap().degrees();
            assert_eq!(degs.iter().sum::<usize>(), 49);
            seen.push(degs);
        }
        assert!(seen.len() >= 2);
        assert!(seen.windows(2).all(|w| w[0] == w[1]), "{seen:?}");
    }
}
