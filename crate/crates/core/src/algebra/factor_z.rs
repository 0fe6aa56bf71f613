//! Factorisation in `Z[x]`: squarefree decomposition, Hensel lifting of a
//! modular factorisation and Zassenhaus recombination.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::factor_fp::{factor_degrees, factor_mod_p};
use super::factorization::IntFactorization;
use super::integer::{primes_from, reduce_big, symmetric_mod};
use super::{AlgebraError, IntPolynomial, ModPolynomial};

/// How many good primes are tried before committing to one for lifting.
const PRIMES_TRIED: usize = 6;

/// Complete factorisation over `Z`. The unit carries the content and sign;
/// factors are primitive with positive leading coefficient.
pub fn factor_over_z(f: &IntPolynomial) -> Result<IntFactorization, AlgebraError> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let mut unit = f.content();
    if f.leading_coeff().is_negative() {
        unit = -unit;
    }
    let mut out = IntFactorization { unit, factors: Vec::new() };
    if f.deg() == 0 {
        return Ok(out);
    }
    for (g, m) in squarefree_decomposition_z(&f.primitive_part()) {
        for h in factor_squarefree(&g) {
            out.factors.push((h, m));
        }
    }
    out.sort_canonical();
    Ok(out)
}

/// True when `f` is irreducible over `Q` (primitive or not) and nonconstant.
pub fn is_irreducible_over_q(f: &IntPolynomial) -> bool {
    if f.is_zero() || f.deg() == 0 {
        return false;
    }
    match factor_over_z(f) {
        Ok(fac) => fac.factors.len() == 1 && fac.factors[0].1 == 1,
        Err(_) => false,
    }
}

/// Squarefree decomposition of a primitive polynomial with positive leading
/// coefficient: `f = prod g_i^i`.
pub fn squarefree_decomposition_z(f: &IntPolynomial) -> Vec<(IntPolynomial, u32)> {
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let exact = |a: &IntPolynomial, b: &IntPolynomial| {
        a.div_exact(b).expect("exact division in squarefree decomposition")
    };
    let mut c = f.gcd(&f.derivative());
    let mut w = exact(f, &c);
    let mut i = 1;
    while w.deg() > 0 {
        let y = w.gcd(&c);
        let z = exact(&w, &y);
        if z.deg() > 0 {
            out.push((z.primitive_part(), i));
        }
        c = exact(&c, &y);
        w = y;
        i += 1;
    }
    out
}

/// Irreducible factors of a primitive squarefree polynomial.
fn factor_squarefree(f: &IntPolynomial) -> Vec<IntPolynomial> {
    let n = f.deg();
    if n <= 1 {
        return vec![f.primitive_part()];
    }
    let lc = f.leading_coeff();
    let mut best: Option<(u64, usize)> = None;
    let mut allowed: BTreeSet<usize> = (0..=n).collect();
    let mut tried = 0;
    for p in primes_from(3) {
        if tried == PRIMES_TRIED {
            break;
        }
        if reduce_big(&lc, p) == 0 {
            continue;
        }
        let fp = ModPolynomial::reduce(f, p);
        if !fp.is_squarefree() {
            continue;
        }
        tried += 1;
        let degs = factor_degrees(&fp.monic());
        allowed = &allowed & &subset_sums(&degs);
        if allowed.len() == 2 {
            return vec![f.primitive_part()];
        }
        if best.map_or(true, |(_, r)| degs.len() < r) {
            best = Some((p, degs.len()));
        }
    }
    let (p, _) = best.expect("some prime keeps f squarefree");
    let fp = ModPolynomial::reduce(f, p);
    let modular: Vec<ModPolynomial> = factor_mod_p(&fp)
        .expect("nonzero")
        .factors
        .into_iter()
        .map(|(g, _)| g)
        .collect();

    let bound = coefficient_bound(f);
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    while modulus <= &bound * 2 {
        modulus = &modulus * &modulus;
    }
    let lifted = hensel_lift(f, &modular, &modulus);
    recombine(f, lifted, &modulus, &allowed)
}

/// Degrees reachable as sums of sub-multisets of `degs`.
fn subset_sums(degs: &[usize]) -> BTreeSet<usize> {
    let total: usize = degs.iter().sum();
    let mut reach = vec![false; total + 1];
    reach[0] = true;
    for &d in degs {
        for s in (d..=total).rev() {
            if reach[s - d] {
                reach[s] = true;
            }
        }
    }
    (0..=total).filter(|&s| reach[s]).collect()
}

/// `|lc| * 2^n * ceil(|f|_2)`: bounds every coefficient of `lc(f)/lc(g) * g`
/// for any factor `g` of `f`.
fn coefficient_bound(f: &IntPolynomial) -> BigInt {
    let norm2: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let root = norm2.sqrt() + 1;
    f.leading_coeff().abs() * (BigInt::one() << f.deg()) * root
}

fn reduce_poly(a: &IntPolynomial, m: &BigInt) -> IntPolynomial {
    IntPolynomial::new(a.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

/// Division by a monic polynomial; the quotient is integral.
fn divrem_monic(a: &IntPolynomial, b: &IntPolynomial) -> (IntPolynomial, IntPolynomial) {
    debug_assert!(b.is_monic());
    let db = b.deg();
    if a.is_zero() || a.deg() < db {
        return (IntPolynomial::zero(), a.clone());
    }
    let mut r: Vec<BigInt> = a.coeffs().to_vec();
    let mut q = vec![BigInt::zero(); a.deg() - db + 1];
    for k in (0..q.len()).rev() {
        let c = r[k + db].clone();
        if c.is_zero() {
            continue;
        }
        for (i, bc) in b.coeffs().iter().enumerate() {
            r[k + i] -= &c * bc;
        }
        q[k] = c;
    }
    r.truncate(db);
    (IntPolynomial::new(q), IntPolynomial::new(r))
}

fn divrem_monic_mod(
    a: &IntPolynomial,
    b: &IntPolynomial,
    m: &BigInt,
) -> (IntPolynomial, IntPolynomial) {
    let (q, r) = divrem_monic(a, b);
    (reduce_poly(&q, m), reduce_poly(&r, m))
}

/// One quadratic Hensel step: from `f = g*h`, `s*g + t*h = 1` mod `m` to
/// the same identities mod `m^2`. `h` is monic.
fn hensel_step(
    f: &IntPolynomial,
    g: &IntPolynomial,
    h: &IntPolynomial,
    s: &IntPolynomial,
    t: &IntPolynomial,
    m: &BigInt,
) -> (IntPolynomial, IntPolynomial, IntPolynomial, IntPolynomial) {
    let m2 = m * m;
    let e = reduce_poly(&(f - &(g * h)), &m2);
    let (q, r) = divrem_monic_mod(&(s * &e), h, &m2);
    let g2 = reduce_poly(&(&(g + &(t * &e)) + &(&q * g)), &m2);
    let h2 = reduce_poly(&(h + &r), &m2);
    let b = reduce_poly(&(&(&(s * &g2) + &(t * &h2)) - &IntPolynomial::one()), &m2);
    let (c, d) = divrem_monic_mod(&(s * &b), &h2, &m2);
    let s2 = reduce_poly(&(s - &d), &m2);
    let t2 = reduce_poly(&(&(t - &(t * &b)) - &(&c * &g2)), &m2);
    (g2, h2, s2, t2)
}

/// Lifts the monic modular factors of `f` to monic factors modulo
/// `modulus`, which must be a power `p^(2^j)`.
fn hensel_lift(f: &IntPolynomial, factors: &[ModPolynomial], modulus: &BigInt) -> Vec<IntPolynomial> {
    let p = factors[0].modulus();
    let pb = BigInt::from(p);
    let mut out = Vec::with_capacity(factors.len());
    // `rest` is congruent to lc(f) times the product of the factors not yet
    // split off, modulo `modulus`.
    let mut rest = reduce_poly(f, modulus);
    for (i, u) in factors.iter().enumerate() {
        if i + 1 == factors.len() {
            let lc_inv = rest
                .leading_coeff()
                .modinv(modulus)
                .expect("leading coefficient is a unit");
            out.push(reduce_poly(&rest.scale(&lc_inv), modulus));
            break;
        }
        let rest_p = ModPolynomial::reduce(&rest, p);
        let g_p = rest_p.div_rem(u).0;
        let (one, s_p, t_p) = g_p.xgcd(u);
        debug_assert!(one.is_one());
        let (mut g, mut h) = (g_p.to_int_poly(), u.to_int_poly());
        let (mut s, mut t) = (s_p.to_int_poly(), t_p.to_int_poly());
        let mut m = pb.clone();
        while &m < modulus {
            (g, h, s, t) = hensel_step(&rest, &g, &h, &s, &t, &m);
            m = &m * &m;
        }
        out.push(h);
        rest = g;
    }
    out
}

fn symmetric_poly(a: &IntPolynomial, m: &BigInt) -> IntPolynomial {
    IntPolynomial::new(a.coeffs().iter().map(|c| symmetric_mod(c, m)).collect())
}

/// Zassenhaus recombination of lifted monic factors.
fn recombine(
    f: &IntPolynomial,
    mut lifted: Vec<IntPolynomial>,
    modulus: &BigInt,
    allowed: &BTreeSet<usize>,
) -> Vec<IntPolynomial> {
    let mut found = Vec::new();
    let mut f = f.clone();
    let mut s = 1;
    'outer: while 2 * s <= lifted.len() {
        let lc = f.leading_coeff();
        let f0 = f.coeff(0);
        for subset in Combinations::new(lifted.len(), s) {
            let d: usize = subset.iter().map(|&i| lifted[i].deg()).sum();
            if !allowed.contains(&d) {
                continue;
            }
            // Constant-term test before building the full product.
            if !f0.is_zero() {
                let mut c0 = lc.clone();
                for &i in &subset {
                    c0 = (c0 * lifted[i].coeff(0)).mod_floor(modulus);
                }
                let c0 = symmetric_mod(&c0, modulus);
                if c0.is_zero() || !(&lc * &f0).is_multiple_of(&c0) {
                    continue;
                }
            }
            let mut g = IntPolynomial::constant(lc.clone());
            for &i in &subset {
                g = reduce_poly(&(&g * &lifted[i]), modulus);
            }
            let g = symmetric_poly(&g, modulus).primitive_part();
            if let Some(q) = f.div_exact(&g) {
                found.push(g);
                f = q;
                let keep: Vec<IntPolynomial> = lifted
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, u)| u.clone())
                    .collect();
                lifted = keep;
                continue 'outer;
            }
        }
        s += 1;
    }
    found.push(f.primitive_part());
    found
}

/// Lexicographic `k`-subsets of `0..n`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}
