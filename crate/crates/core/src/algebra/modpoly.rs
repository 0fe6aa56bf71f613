//! Polynomials over a prime field `F_p` with `p < 2^64`.

use std::fmt;

use num_bigint::{BigInt, BigUint};

use super::integer::{add_mod, inv_mod, is_prime_u64, mul_mod, reduce_big, sub_mod};
use super::{AlgebraError, IntPolynomial};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModPolynomial {
    coeffs: Vec<u64>,
    p: u64,
}

impl ModPolynomial {
    /// Checked constructor: `p` must be prime, coefficients are reduced.
    pub fn new(coeffs: Vec<u64>, p: u64) -> Result<Self, AlgebraError> {
        if !is_prime_u64(p) {
            return Err(AlgebraError::NotPrime(p.to_string()));
        }
        Ok(Self::from_reduced(coeffs.into_iter().map(|c| c % p).collect(), p))
    }

    /// Reduction of an integer polynomial; `p` must be prime.
    pub fn from_int_poly(f: &IntPolynomial, p: u64) -> Result<Self, AlgebraError> {
        if !is_prime_u64(p) {
            return Err(AlgebraError::NotPrime(p.to_string()));
        }
        Ok(Self::reduce(f, p))
    }

    /// Unchecked reduction for callers that already know `p` is prime.
    pub(crate) fn reduce(f: &IntPolynomial, p: u64) -> Self {
        Self::from_reduced(f.coeffs().iter().map(|c| reduce_big(c, p)).collect(), p)
    }

    pub(crate) fn from_reduced(mut coeffs: Vec<u64>, p: u64) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPolynomial { coeffs, p }
    }

    pub fn zero(p: u64) -> Self {
        ModPolynomial { coeffs: Vec::new(), p }
    }

    pub fn one(p: u64) -> Self {
        Self::from_reduced(vec![1 % p], p)
    }

    pub fn x(p: u64) -> Self {
        Self::from_reduced(vec![0, 1], p)
    }

    pub fn constant(c: u64, p: u64) -> Self {
        Self::from_reduced(vec![c % p], p)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Lift to the integers with coefficients in `[0, p)`.
    pub fn to_int_poly(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.leading_coeff(), self.p);
        self.scale(inv)
    }

    pub fn scale(&self, c: u64) -> Self {
        let p = self.p;
        Self::from_reduced(self.coeffs.iter().map(|&a| mul_mod(a, c, p)).collect(), p)
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n)
            .map(|i| add_mod(self.coeff(i), other.coeff(i), p))
            .collect();
        Self::from_reduced(v, p)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n)
            .map(|i| sub_mod(self.coeff(i), other.coeff(i), p))
            .collect();
        Self::from_reduced(v, p)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p;
        let mut acc = vec![0u128; self.coeffs.len() + other.coeffs.len() - 1];
        let pp = p as u128;
        // Each reduced product is below 2^64, so u128 accumulators cannot
        // overflow at any degree used here.
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] += (a as u128 * b as u128) % pp;
            }
        }
        Self::from_reduced(acc.into_iter().map(|c| (c % pp) as u64).collect(), p)
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, (i as u64) % p, p))
            .collect();
        Self::from_reduced(v, p)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0;
        for &c in self.coeffs.iter().rev() {
            acc = add_mod(mul_mod(acc, x, self.p), c, self.p);
        }
        acc
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let p = self.p;
        if self.deg() < d.deg() || self.is_zero() {
            return (Self::zero(p), self.clone());
        }
        let dd = d.deg();
        let inv = inv_mod(d.leading_coeff(), p);
        let mut r = self.coeffs.clone();
        let mut q = vec![0u64; self.deg() - dd + 1];
        for k in (0..q.len()).rev() {
            let c = mul_mod(r[k + dd], inv, p);
            if c == 0 {
                continue;
            }
            q[k] = c;
            for (i, &dc) in d.coeffs.iter().enumerate() {
                r[k + i] = sub_mod(r[k + i], mul_mod(c, dc, p), p);
            }
        }
        r.truncate(dd);
        (Self::from_reduced(q, p), Self::from_reduced(r, p))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = inv_mod(r0.leading_coeff(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn mul_mod_poly(&self, other: &Self, m: &Self) -> Self {
        self.mul(other).rem(m)
    }

    /// `self^e mod m`.
    pub fn pow_mod_poly(&self, e: u64, m: &Self) -> Self {
        self.pow_mod_big(&BigUint::from(e), m)
    }

    pub fn pow_mod_big(&self, e: &BigUint, m: &Self) -> Self {
        let mut acc = Self::one(self.p).rem(m);
        let base = self.rem(m);
        let bits = e.bits();
        for i in (0..bits).rev() {
            acc = acc.mul_mod_poly(&acc, m);
            if e.bit(i) {
                acc = acc.mul_mod_poly(&base, m);
            }
        }
        acc
    }

    /// `self^(1/p)` for a polynomial in `x^p` (coefficients are fixed by
    /// Frobenius on `F_p`).
    pub(crate) fn pth_root(&self) -> Self {
        let p = self.p as usize;
        let v = self.coeffs.iter().step_by(p).copied().collect();
        Self::from_reduced(v, self.p)
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).deg() == 0
    }

    /// Number of distinct roots in `F_p`.
    pub fn count_roots(&self) -> usize {
        if self.is_zero() {
            return self.p as usize;
        }
        if self.deg() == 0 {
            return 0;
        }
        let f = self.monic();
        let xp = Self::x(self.p).pow_mod_poly(self.p, &f);
        let g = xp.sub(&Self::x(self.p)).gcd(&f);
        g.deg()
    }

    pub(crate) fn cmp_canonical(&self, other: &Self) -> std::cmp::Ordering {
        self.deg()
            .cmp(&other.deg())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl fmt::Display for ModPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.to_int_poly(), self.p)
    }
}

impl fmt::Debug for ModPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModPolynomial({:?} mod {})", self.coeffs, self.p)
    }
}
