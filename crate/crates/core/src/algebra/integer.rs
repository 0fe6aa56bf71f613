//! Integer helpers: word-size modular arithmetic, primality, factorisation.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse modulo a prime; `a` must be nonzero mod `p`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    let a = a % p;
    assert!(a != 0, "inverse of zero mod {p}");
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if t < 0 {
        t += p as i128;
    }
    t as u64
}

/// Reduces a big integer into `[0, p)`.
pub fn reduce_big(a: &BigInt, p: u64) -> u64 {
    let m = a.mod_floor(&BigInt::from(p));
    m.to_u64().expect("residue fits in u64")
}

/// Deterministic for every `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    num_prime::nt_funcs::is_prime64(n)
}

/// Primality of an arbitrary integer. Deterministic below 2^64; above that a
/// strong probable-prime test with a fixed witness set.
pub fn is_prime(n: &BigInt) -> bool {
    if n.sign() != Sign::Plus {
        return false;
    }
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    let un = n.magnitude().clone();
    num_prime::nt_funcs::is_prime(&un, None).probably()
}

/// Prime factorisation of `|n|` as sorted `(prime, exponent)` pairs.
/// `n` must be nonzero.
pub fn factor_integer(n: &BigInt) -> Vec<(BigInt, u32)> {
    assert!(!n.is_zero(), "factorisation of zero");
    let un: BigUint = n.magnitude().clone();
    if un.is_one() {
        return Vec::new();
    }
    let (found, rest) = num_prime::nt_funcs::factors(un, None);
    assert!(rest.is_none(), "integer factorisation did not complete for {n}");
    found
        .into_iter()
        .map(|(p, e)| (BigInt::from(p), e as u32))
        .collect()
}

/// Exponent of the prime `p` in `n` (n nonzero).
pub fn valuation(n: &BigInt, p: &BigInt) -> u32 {
    assert!(!n.is_zero());
    let mut v = 0;
    let mut m = n.abs();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        m = q;
        v += 1;
    }
}

/// Primes in increasing order starting at `start`.
pub fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start.max(2)..).filter(|&n| is_prime_u64(n))
}

pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i as u64))
        .collect()
}

/// Large word-size primes, descending from 2^62, for CRT reconstructions.
pub fn crt_primes() -> impl Iterator<Item = u64> {
    let mut n = (1u64 << 62) - 1;
    std::iter::from_fn(move || loop {
        n -= 2;
        if is_prime_u64(n) {
            return Some(n);
        }
    })
}

/// Symmetric representative of `a` modulo `m` in `(-m/2, m/2]`.
pub fn symmetric_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_inverse() {
        for p in [2u64, 3, 7, 691, (1 << 61) - 1] {
            for a in 1..20u64.min(p) {
                assert_eq!(mul_mod(a, inv_mod(a, p), p), 1);
            }
        }
    }

    #[test]
    fn factors_square_discriminant() {
        let n = BigInt::from(64u64 * 691 * 691);
        assert_eq!(
            factor_integer(&n),
            vec![(BigInt::from(2), 6), (BigInt::from(691), 2)]
        );
        assert_eq!(valuation(&n, &BigInt::from(691)), 2);
        assert!(factor_integer(&BigInt::from(-1)).is_empty());
    }

    #[test]
    fn prime_helpers() {
        assert_eq!(primes_up_to(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(primes_from(690).next(), Some(691));
        assert!(is_prime(&BigInt::from(691)));
        assert!(!is_prime(&BigInt::from(-7)));
        let big: BigInt = "170141183460469231731687303715884105727".parse().unwrap();
        assert!(is_prime(&big));
        assert!(is_perfect_square(&BigInt::from(64u64 * 691 * 691)));
        assert!(!is_perfect_square(&BigInt::from(-4)));
        assert_eq!(binomial(6, 3), BigInt::from(20));
    }
}
