//! Naive reference implementations shared by the oracle tests and the
//! acceptance run.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gassmann::algebra::{count_real_roots, factor_over_z};
use gassmann::numberfield::field_from_poly;
use gassmann::permgroup::{group_closure, PermGroup};
use gassmann::{IntPolynomial, Perm};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_poly(r: &mut ChaCha8Rng, degs: std::ops::RangeInclusive<usize>, c: i64, monic: bool) -> IntPolynomial {
    let deg = r.gen_range(degs);
    let mut v: Vec<i64> = (0..=deg).map(|_| r.gen_range(-c..=c)).collect();
    if monic {
        v[deg] = 1;
    } else {
        while v[deg] == 0 {
            v[deg] = r.gen_range(-c..=c);
        }
    }
    IntPolynomial::from_i64s(&v)
}

// ---------------------------------------------------------------------------
// Real roots: Descartes' rule with interval bisection

type Coeffs = Vec<BigInt>;

fn sign_variations(p: &[BigInt]) -> usize {
    let signs: Vec<bool> = p.iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Coefficients of `p(x + 1)`.
fn taylor_shift(p: &[BigInt]) -> Coeffs {
    let mut a = p.to_vec();
    let n = a.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = a[j + 1].clone();
            a[j] += t;
        }
    }
    a
}

fn reversed(p: &[BigInt]) -> Coeffs {
    p.iter().rev().cloned().collect()
}

/// `2^n p(x / 2)`.
fn halve(p: &[BigInt]) -> Coeffs {
    let n = p.len() - 1;
    p.iter().enumerate().map(|(i, c)| c << (n - i)).collect()
}

fn eval(p: &[BigInt], x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Roots in the open interval (0, 1) of a squarefree polynomial.
fn roots_in_unit_interval(p: &[BigInt]) -> usize {
    let v = sign_variations(&taylor_shift(&reversed(p)));
    if v <= 1 {
        return v;
    }
    let left = halve(p);
    let right = taylor_shift(&left);
    // p(1/2) = 0 iff the halved polynomial vanishes at 1
    let mid = usize::from(eval(&left, &BigInt::one()).is_zero());
    roots_in_unit_interval(&left) + mid + roots_in_unit_interval(&right)
}

/// Positive real roots: (0,1), the point 1, and (1, inf) via `x^n p(1/x)`.
fn positive_roots(p: &[BigInt]) -> usize {
    roots_in_unit_interval(p)
        + usize::from(eval(p, &BigInt::one()).is_zero())
        + roots_in_unit_interval(&reversed(p))
}

pub fn real_roots_by_bisection(f: &IntPolynomial) -> usize {
    let mut p: Coeffs = f.coeffs().to_vec();
    let mut zero = 0;
    while p[0].is_zero() {
        p.remove(0);
        zero += 1;
    }
    let neg: Coeffs = p.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect();
    zero + positive_roots(&p) + positive_roots(&neg)
}

// ---------------------------------------------------------------------------
// Subgroup lattices of small groups, brute force

pub struct Table {
    pub n: usize,
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
}

pub fn table(g: &PermGroup) -> Table {
    let els = g.elements();
    let index: HashMap<&Perm, usize> = els.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let n = els.len();
    let mul: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| index[&els[i].then(&els[j])]).collect()).collect();
    let id = (0..n).find(|&i| els[i].is_identity()).unwrap();
    let inv = (0..n).map(|i| (0..n).find(|&j| mul[i][j] == id).unwrap()).collect();
    Table { n, mul, inv }
}

pub type Mask = u64;

pub fn close(t: &Table, mut s: Mask) -> Mask {
    loop {
        let mut next = s;
        for i in 0..t.n {
            if s >> i & 1 == 0 {
                continue;
            }
            for j in 0..t.n {
                if s >> j & 1 == 1 {
                    next |= 1 << t.mul[i][j];
                }
            }
        }
        if next == s {
            return s;
        }
        s = next;
    }
}

pub fn conjugate(t: &Table, s: Mask, g: usize) -> Mask {
    (0..t.n).filter(|&i| s >> i & 1 == 1).fold(0, |m, i| m | 1 << t.mul[t.mul[t.inv[g]][i]][g])
}

/// Every subgroup is generated by its cyclic subgroups, so closing the set
/// of cyclic subgroups under joins reaches all of them.
pub fn all_subgroups(t: &Table) -> BTreeSet<Mask> {
    let mut subs: BTreeSet<Mask> = (0..t.n).map(|i| close(t, 1 << i)).collect();
    loop {
        let list: Vec<Mask> = subs.iter().copied().collect();
        let mut grew = false;
        for (a, &x) in list.iter().enumerate() {
            for &y in &list[a + 1..] {
                if subs.insert(close(t, x | y)) {
                    grew = true;
                }
            }
        }
        if !grew {
            return subs;
        }
    }
}

/// Multiset of (order, class size) over conjugacy classes of subgroups.
pub fn brute_force_classes(g: &PermGroup) -> BTreeMap<(usize, usize), usize> {
    let t = table(g);
    assert!(t.n <= 64);
    let mut left = all_subgroups(&t);
    let mut out = BTreeMap::new();
    while let Some(&s) = left.iter().next() {
        let class: BTreeSet<Mask> = (0..t.n).map(|x| conjugate(&t, s, x)).collect();
        for c in &class {
            left.remove(c);
        }
        *out.entry((s.count_ones() as usize, class.len())).or_insert(0) += 1;
    }
    out
}

pub fn perm(n: usize, cycles: &[&[usize]]) -> Perm {
    Perm::from_cycles(n, cycles).unwrap()
}

/// Action of 2x2 matrices over F3 on the 8 nonzero vectors.
pub fn f3_matrix(m: [[u8; 2]; 2]) -> Perm {
    let vecs: Vec<(u8, u8)> = (0..9).map(|i| (i / 3, i % 3)).filter(|&v| v != (0, 0)).collect();
    let images = vecs
        .iter()
        .map(|&(a, b)| {
            let w = ((m[0][0] * a + m[0][1] * b) % 3, (m[1][0] * a + m[1][1] * b) % 3);
            vecs.iter().position(|&v| v == w).unwrap()
        })
        .collect();
    Perm::new(images).unwrap()
}

pub fn small_groups() -> Vec<(&'static str, usize, PermGroup)> {
    let g = |gens: Vec<Perm>, n: usize| group_closure(&gens, n).unwrap();
    vec![
        ("C1", 1, g(vec![Perm::identity(3)], 3)),
        ("C6", 6, g(vec![perm(6, &[&[0, 1, 2, 3, 4, 5]])], 6)),
        ("S3", 6, g(vec![perm(3, &[&[0, 1, 2]]), perm(3, &[&[0, 1]])], 3)),
        ("D4", 8, g(vec![perm(4, &[&[0, 1, 2, 3]]), perm(4, &[&[0, 2]])], 4)),
        ("Q8", 8, g(vec![f3_matrix([[0, 1], [2, 0]]), f3_matrix([[1, 1], [1, 2]])], 8)),
        ("C2^3", 8, g(vec![perm(6, &[&[0, 1]]), perm(6, &[&[2, 3]]), perm(6, &[&[4, 5]])], 6)),
        ("D6", 12, g(vec![perm(6, &[&[0, 1, 2, 3, 4, 5]]), perm(6, &[&[1, 5], &[2, 4]])], 6)),
        ("A4", 12, g(vec![perm(4, &[&[0, 1, 2]]), perm(4, &[&[0, 1], &[2, 3]])], 4)),
        ("D7", 14, g(vec![perm(7, &[&[0, 1, 2, 3, 4, 5, 6]]), perm(7, &[&[1, 6], &[2, 5], &[3, 4]])], 7)),
        ("C2^4", 16, g(vec![perm(8, &[&[0, 1]]), perm(8, &[&[2, 3]]), perm(8, &[&[4, 5]]), perm(8, &[&[6, 7]])], 8)),
        ("D8", 16, g(vec![perm(8, &[&[0, 1, 2, 3, 4, 5, 6, 7]]), perm(8, &[&[1, 7], &[2, 6], &[3, 5]])], 8)),
        ("C4xC4", 16, g(vec![perm(8, &[&[0, 1, 2, 3]]), perm(8, &[&[4, 5, 6, 7]])], 8)),
        ("C3xS3", 18, g(vec![perm(6, &[&[0, 1, 2]]), perm(6, &[&[3, 4, 5]]), perm(6, &[&[3, 4]])], 6)),
        ("F20", 20, g(vec![perm(5, &[&[0, 1, 2, 3, 4]]), perm(5, &[&[1, 2, 4, 3]])], 5)),
        ("F21", 21, g(vec![perm(7, &[&[0, 1, 2, 3, 4, 5, 6]]), perm(7, &[&[1, 2, 4], &[3, 6, 5]])], 7)),
        ("S4", 24, g(vec![perm(4, &[&[0, 1, 2, 3]]), perm(4, &[&[0, 1]])], 4)),
        ("SL(2,3)", 24, g(vec![f3_matrix([[1, 1], [0, 1]]), f3_matrix([[1, 0], [1, 1]])], 8)),
        ("C2xA4", 24, g(vec![perm(6, &[&[0, 1, 2]]), perm(6, &[&[0, 1], &[2, 3]]), perm(6, &[&[4, 5]])], 6)),
        ("C2xS4", 48, g(vec![perm(6, &[&[0, 1, 2, 3]]), perm(6, &[&[0, 1]]), perm(6, &[&[4, 5]])], 6)),
        (
            "GL(2,3)",
            48,
            g(vec![f3_matrix([[1, 1], [0, 1]]), f3_matrix([[2, 0], [0, 1]]), f3_matrix([[0, 1], [1, 0]])], 8),
        ),
    ]
}

// ---------------------------------------------------------------------------
// Suites: each returns the number of cases checked or the first mismatch.

/// Sturm counts against bisection on `cases` random squarefree polynomials.
pub fn sturm_vs_bisection(cases: usize, seed: u64) -> Result<usize, String> {
    let mut r = rng(seed);
    let mut done = 0;
    while done < cases {
        let d = r.gen_range(1..=10);
        let f = if r.gen_bool(0.3) {
            // products of linear factors have many real roots
            let mut acc = IntPolynomial::one();
            for _ in 0..d.min(6) {
                acc = &acc * &IntPolynomial::from_i64s(&[r.gen_range(-20..=20), r.gen_range(1..=3)]);
            }
            acc
        } else {
            random_poly(&mut r, d..=d, 30, false)
        };
        if !f.is_squarefree() {
            continue;
        }
        let (a, b) = (count_real_roots(&f).map_err(|e| e.to_string())?, real_roots_by_bisection(&f));
        if a != b {
            return Err(format!("{f}: sturm {a}, bisection {b}"));
        }
        done += 1;
    }
    Ok(done)
}

/// Factorisations over Z multiply back to the input, factors primitive
/// with positive leading coefficient.
pub fn multiply_back(cases: usize, seed: u64) -> Result<usize, String> {
    let mut r = rng(seed);
    for i in 0..cases {
        let f = if i % 2 == 0 {
            random_poly(&mut r, 1..=10, 20, false)
        } else {
            let mut acc = random_poly(&mut r, 1..=4, 9, false);
            for _ in 0..r.gen_range(1..=3) {
                acc = &acc * &random_poly(&mut r, 1..=4, 9, false);
            }
            acc
        };
        let fac = factor_over_z(&f).map_err(|e| e.to_string())?;
        if fac.expand() != f {
            return Err(format!("{f}: product of factors differs"));
        }
        for (g, m) in &fac.factors {
            if *m == 0 || g.deg() == 0 || !g.leading_coeff().is_positive() || !g.content().is_one() {
                return Err(format!("{f}: bad factor {g}^{m}"));
            }
        }
    }
    Ok(cases)
}

/// Subgroup classes of every group in [`small_groups`] against joins of
/// cyclic subgroups.
pub fn subgroup_lattices() -> Result<usize, String> {
    let groups = small_groups();
    for (name, order, g) in &groups {
        if g.order() != *order {
            return Err(format!("{name}: order {} not {order}", g.order()));
        }
        let mut lib: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for c in g.subgroup_classes() {
            *lib.entry((c.order, c.conjugate_count)).or_insert(0) += 1;
        }
        let brute = brute_force_classes(g);
        if lib != brute {
            return Err(format!("{name}: engine {lib:?}, brute force {brute:?}"));
        }
    }
    Ok(groups.len())
}

/// Dedekind factoring against the maximal-order splitting on random
/// (field, prime) pairs with the prime not dividing the index.
pub fn decomposition_paths(cases: usize, seed: u64) -> Result<usize, String> {
    let mut r = rng(seed);
    let small_primes = [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];
    let mut done = 0;
    while done < cases {
        let f = random_poly(&mut r, 2..=7, 10, true);
        if factor_over_z(&f).map_err(|e| e.to_string())?.factor_count() != 1 {
            continue;
        }
        let k = field_from_poly(&f).map_err(|e| e.to_string())?;
        let ramified: Vec<u64> = k.ramified_primes().iter().filter_map(|p| u64::try_from(p).ok()).collect();
        let l = if !ramified.is_empty() && r.gen_bool(0.5) {
            ramified[r.gen_range(0..ramified.len())]
        } else {
            small_primes[r.gen_range(0..small_primes.len())]
        };
        if (k.index() % BigInt::from(l)).is_zero() {
            continue;
        }
        let a = k.decomposition_via_polynomial(l).map_err(|e| e.to_string())?;
        let b = k.decomposition_via_order(l).map_err(|e| e.to_string())?;
        if a != b {
            return Err(format!("{f} at {l}: {} vs {}", a.factorization_type, b.factorization_type));
        }
        done += 1;
    }
    Ok(done)
}
