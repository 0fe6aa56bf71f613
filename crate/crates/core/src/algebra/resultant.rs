//! Resultants and discriminants.
//!
//! Sign convention: `Res(f, g) = lc(g)^deg(f) * prod f(beta)` over the roots
//! `beta` of `g`. This is `(-1)^(deg f * deg g)` times the determinant of the
//! Sylvester matrix of `(f, g)`; the two agree whenever `deg f * deg g` is
//! even, in particular for `Res(f, f')`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::integer::{crt_primes, inv_mod, mul_mod, pow_mod, reduce_big, symmetric_mod};
use super::{AlgebraError, IntPolynomial, ModPolynomial};

/// Combined degree above which the modular route is used by default.
const MODULAR_THRESHOLD: usize = 24;

/// Exact resultant under the crate's sign convention.
pub fn poly_resultant(f: &IntPolynomial, g: &IntPolynomial) -> Result<BigInt, AlgebraError> {
    if f.is_zero() || g.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    if f.deg() + g.deg() > MODULAR_THRESHOLD {
        resultant_modular(f, g)
    } else {
        resultant_subresultant(f, g)
    }
}

/// Resultant through the subresultant pseudo-remainder sequence.
pub fn resultant_subresultant(f: &IntPolynomial, g: &IntPolynomial) -> Result<BigInt, AlgebraError> {
    if f.is_zero() || g.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let r = sylvester_resultant_prs(f, g);
    Ok(flip_sign(r, f.deg(), g.deg()))
}

/// Resultant reconstructed by CRT from residues modulo word-size primes,
/// stopping once the product of moduli exceeds twice the Hadamard bound.
pub fn resultant_modular(f: &IntPolynomial, g: &IntPolynomial) -> Result<BigInt, AlgebraError> {
    if f.is_zero() || g.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let (m, n) = (f.deg(), g.deg());
    let norm2 = |h: &IntPolynomial| h.coeffs().iter().map(|c| c * c).sum::<BigInt>();
    // |Res|^2 <= |f|_2^(2n) * |g|_2^(2m)
    let bound_sq = num_traits::pow(norm2(f), n) * num_traits::pow(norm2(g), m);
    let lcs = f.leading_coeff() * g.leading_coeff();

    let mut modulus = BigInt::one();
    let mut value = BigInt::zero();
    for p in crt_primes() {
        if reduce_big(&lcs, p) == 0 {
            continue;
        }
        let r = resultant_mod_p(&ModPolynomial::reduce(f, p), &ModPolynomial::reduce(g, p));
        let pb = BigInt::from(p);
        // value' = value + modulus * ((r - value) / modulus mod p)
        let diff = (BigInt::from(r) - &value).mod_floor(&pb);
        let inv = inv_mod(reduce_big(&modulus, p), p);
        let t = mul_mod(reduce_big(&diff, p), inv, p);
        value += &modulus * BigInt::from(t);
        modulus *= pb;
        if &modulus * &modulus > bound_sq.clone() * 4 {
            break;
        }
    }
    let std = symmetric_mod(&value, &modulus);
    Ok(flip_sign(std, m, n))
}

/// Resultant over `F_p` in the Sylvester-determinant convention. Both
/// leading coefficients must be nonzero mod `p`.
pub(crate) fn resultant_mod_p(a: &ModPolynomial, b: &ModPolynomial) -> u64 {
    let p = a.modulus();
    if a.is_zero() || b.is_zero() {
        return 0;
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut acc = 1u64;
    loop {
        let (m, n) = (a.deg(), b.deg());
        if m == 0 {
            return mul_mod(acc, pow_mod(a.leading_coeff(), n as u64, p), p);
        }
        if n == 0 {
            return mul_mod(acc, pow_mod(b.leading_coeff(), m as u64, p), p);
        }
        let r = a.rem(&b);
        if r.is_zero() {
            return 0;
        }
        // Res(a, b) = (-1)^(mn) lc(b)^(m - deg r) Res(b, r)
        if (m * n) % 2 == 1 {
            acc = (p - acc) % p;
        }
        acc = mul_mod(acc, pow_mod(b.leading_coeff(), (m - r.deg()) as u64, p), p);
        a = b;
        b = r;
    }
}

fn flip_sign(r: BigInt, m: usize, n: usize) -> BigInt {
    if (m * n) % 2 == 1 {
        -r
    } else {
        r
    }
}

/// Sylvester-determinant resultant by the subresultant algorithm.
pub(crate) fn sylvester_resultant_prs(f: &IntPolynomial, g: &IntPolynomial) -> BigInt {
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut s = BigInt::one();
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
        if (a.deg() * b.deg()) % 2 == 1 {
            s = -s;
        }
    }
    if b.deg() == 0 {
        return s * num_traits::pow(b.leading_coeff(), a.deg());
    }
    let ca = a.content();
    let cb = b.content();
    let t = num_traits::pow(ca.clone(), b.deg()) * num_traits::pow(cb.clone(), a.deg());
    a = a.div_scalar_exact(&ca);
    b = b.div_scalar_exact(&cb);
    let mut g_ = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = a.deg() - b.deg();
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            s = -s;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        if r.is_zero() {
            return BigInt::zero();
        }
        let div = &g_ * num_traits::pow(h.clone(), delta);
        b = r.div_scalar_exact(&div);
        g_ = a.leading_coeff();
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g_.clone(), delta) / num_traits::pow(h.clone(), delta - 1)
        };
        if b.deg() == 0 {
            break;
        }
    }
    let da = a.deg();
    let lb = b.leading_coeff();
    let hh = if da == 0 {
        h
    } else {
        num_traits::pow(lb, da) / num_traits::pow(h, da - 1)
    };
    s * t * hh
}

/// `disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f)`.
pub fn poly_discriminant(f: &IntPolynomial) -> Result<BigInt, AlgebraError> {
    let n = f.degree().ok_or(AlgebraError::ZeroPolynomial)?;
    if n == 0 {
        return Err(AlgebraError::ConstantPolynomial);
    }
    if n == 1 {
        return Ok(BigInt::one());
    }
    let r = poly_resultant(f, &f.derivative())?;
    let (q, rem) = r.div_rem(&f.leading_coeff());
    debug_assert!(rem.is_zero());
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -q } else { q })
}

/// True when `|d|` is a perfect square and `d > 0`.
pub fn is_square_discriminant(d: &BigInt) -> bool {
    d.is_positive() && super::integer::is_perfect_square(d)
}
