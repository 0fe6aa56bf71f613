//! Factorisation over `F_p`: squarefree decomposition, distinct-degree
//! splitting and Cantor–Zassenhaus equal-degree splitting.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::factorization::ModFactorization;
use super::{AlgebraError, ModPolynomial};

/// Seed used by [`factor_mod_p`]. Results do not depend on it (factors are
/// returned in canonical order); only the running time does.
pub const DEFAULT_SEED: u64 = 0x5eed_0007;

pub fn factor_mod_p(f: &ModPolynomial) -> Result<ModFactorization, AlgebraError> {
    factor_mod_p_seeded(f, DEFAULT_SEED)
}

pub fn factor_mod_p_seeded(f: &ModPolynomial, seed: u64) -> Result<ModFactorization, AlgebraError> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let p = f.modulus();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let unit = f.leading_coeff();
    let mut out = ModFactorization { unit, factors: Vec::new() };
    for (g, m) in squarefree_decomposition(&f.monic()) {
        for (h, d) in distinct_degree_factorization(&g) {
            for irr in equal_degree_split(&h, d, &mut rng) {
                out.factors.push((irr, m));
            }
        }
    }
    debug_assert!(out.factors.iter().all(|(g, _)| g.modulus() == p));
    out.sort_canonical();
    Ok(out)
}

/// Squarefree decomposition of a monic polynomial: pairs `(g_i, i)` with
/// `f = prod g_i^i`, each `g_i` monic squarefree and non-constant.
pub fn squarefree_decomposition(f: &ModPolynomial) -> Vec<(ModPolynomial, u32)> {
    let p = f.modulus();
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let push = |g: ModPolynomial, m: u32, out: &mut Vec<(ModPolynomial, u32)>| {
        if g.deg() > 0 {
            out.push((g, m));
        }
    };
    let df = f.derivative();
    if df.is_zero() {
        // f = h(x^p) = h^(1/p)(x)^p
        for (g, m) in squarefree_decomposition(&f.pth_root()) {
            push(g, m * p as u32, &mut out);
        }
        return out;
    }
    let mut c = f.gcd(&df);
    let mut w = f.div_rem(&c).0;
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.div_rem(&y).0;
        push(z.monic(), i, &mut out);
        i += 1;
        w = y;
        c = c.div_rem(&w).0;
    }
    if c.deg() > 0 {
        for (g, m) in squarefree_decomposition(&c.pth_root().monic()) {
            push(g, m * p as u32, &mut out);
        }
    }
    out.sort_by(|a, b| a.1.cmp(&b.1));
    out
}

/// For monic squarefree `f`, returns `(h_d, d)` where `h_d` is the product of
/// the irreducible factors of degree `d`.
pub fn distinct_degree_factorization(f: &ModPolynomial) -> Vec<(ModPolynomial, usize)> {
    let p = f.modulus();
    let mut out = Vec::new();
    let mut rest = f.monic();
    let x = ModPolynomial::x(p);
    let mut h = x.clone();
    let mut d = 0;
    while rest.deg() >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod_poly(p, &rest);
        let g = h.sub(&x).gcd(&rest);
        if g.deg() > 0 {
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    if rest.deg() > 0 {
        let d = rest.deg();
        out.push((rest, d));
    }
    out
}

/// Degrees of the irreducible factors of a squarefree polynomial, ascending.
pub fn factor_degrees(f: &ModPolynomial) -> Vec<usize> {
    let mut out = Vec::new();
    for (h, d) in distinct_degree_factorization(f) {
        out.extend(std::iter::repeat(d).take(h.deg() / d));
    }
    out.sort_unstable();
    out
}

/// Splits a monic squarefree product of irreducibles of degree `d`.
pub fn equal_degree_split<R: Rng>(f: &ModPolynomial, d: usize, rng: &mut R) -> Vec<ModPolynomial> {
    let n = f.deg();
    if n == d {
        return vec![f.monic()];
    }
    if n == 0 {
        return Vec::new();
    }
    let p = f.modulus();
    loop {
        let a = random_poly(n, p, rng);
        if a.deg() == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace a + a^2 + ... + a^(2^(d-1)) of degree-d extension
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..(d) {
                t = t.mul_mod_poly(&t, f);
                acc = acc.add(&t);
            }
            acc
        } else {
            // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2)
            let mut t = a.rem(f);
            let mut norm = t.clone();
            for _ in 1..d {
                t = t.pow_mod_poly(p, f);
                norm = norm.mul_mod_poly(&t, f);
            }
            norm.pow_mod_big(&BigUint::from((p - 1) / 2), f)
                .sub(&ModPolynomial::one(p))
        };
        let g = b.gcd(f);
        if g.deg() > 0 && g.deg() < n {
            let h = f.div_rem(&g).0.monic();
            let mut out = equal_degree_split(&g, d, rng);
            out.extend(equal_degree_split(&h, d, rng));
            return out;
        }
    }
}

fn random_poly<R: Rng>(n: usize, p: u64, rng: &mut R) -> ModPolynomial {
    ModPolynomial::from_reduced((0..n).map(|_| rng.gen_range(0..p)).collect(), p)
}
