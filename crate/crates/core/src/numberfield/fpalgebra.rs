//! Finite-dimensional commutative algebras over `F_p` given by structure
//! constants, with radical computation and splitting into local factors.

use crate::algebra::integer::{add_mod, mul_mod, sub_mod};
use crate::algebra::{factor_mod_p, ModPolynomial};

use super::linalg::{left_kernel_mod, reduce_mod_span, rref_mod, solve_in_basis_mod, ModMatrix};

#[derive(Clone, Debug)]
pub struct FpAlgebra {
    p: u64,
    dim: usize,
    /// `mult[i][j]` = coordinates of `e_i * e_j`.
    mult: Vec<Vec<Vec<u64>>>,
    one: Vec<u64>,
}

impl FpAlgebra {
    pub fn new(p: u64, mult: Vec<Vec<Vec<u64>>>, one: Vec<u64>) -> Self {
        let dim = one.len();
        FpAlgebra { p, dim, mult, one }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn one(&self) -> &[u64] {
        &self.one
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut out = vec![0u64; self.dim];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let c = mul_mod(ai, bj, p);
                for (o, &m) in out.iter_mut().zip(&self.mult[i][j]) {
                    if m != 0 {
                        *o = add_mod(*o, mul_mod(c, m, p), p);
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[u64], mut e: u64) -> Vec<u64> {
        let mut base = a.to_vec();
        let mut acc = self.one.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn basis_vector(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0u64; self.dim];
        v[i] = 1;
        v
    }

    /// Basis of the nilradical: the kernel of `x -> x^(p^j)` with `p^j >= dim`.
    pub fn radical(&self) -> ModMatrix {
        let mut j = 1u32;
        let mut pj = self.p as u128;
        while pj < self.dim as u128 {
            pj *= self.p as u128;
            j += 1;
        }
        let images: ModMatrix = (0..self.dim)
            .map(|i| {
                let mut v = self.basis_vector(i);
                for _ in 0..j {
                    v = self.pow(&v, self.p);
                }
                v
            })
            .collect();
        left_kernel_mod(&images, self.p)
    }

    fn eval_poly(&self, f: &ModPolynomial, b: &[u64]) -> Vec<u64> {
        let mut acc = vec![0u64; self.dim];
        for &c in f.coeffs().iter().rev() {
            acc = self.mul(&acc, b);
            for (x, &u) in acc.iter_mut().zip(&self.one) {
                *x = add_mod(*x, mul_mod(c, u, self.p), self.p);
            }
        }
        acc
    }

    fn minimal_polynomial(&self, b: &[u64]) -> ModPolynomial {
        let p = self.p;
        let mut powers = vec![self.one.clone()];
        loop {
            let next = self.mul(powers.last().unwrap(), b);
            if let Some(x) = solve_in_basis_mod(&powers, &next, p) {
                let mut coeffs: Vec<u64> = x.iter().map(|&c| (p - c) % p).collect();
                coeffs.push(1);
                return ModPolynomial::new(coeffs, p).expect("valid modulus");
            }
            powers.push(next);
        }
    }

    /// The subalgebra `eps * A` for an idempotent `eps`, with `eps` as unit.
    fn component(&self, eps: &[u64]) -> FpAlgebra {
        let p = self.p;
        let images: ModMatrix = (0..self.dim).map(|i| self.mul(eps, &self.basis_vector(i))).collect();
        let (basis, _) = rref_mod(images, p);
        let mult = basis
            .iter()
            .map(|u| {
                basis
                    .iter()
                    .map(|v| solve_in_basis_mod(&basis, &self.mul(u, v), p).expect("closed under product"))
                    .collect()
            })
            .collect();
        let one = solve_in_basis_mod(&basis, eps, p).expect("unit lies in component");
        FpAlgebra::new(p, mult, one)
    }

    /// Decomposes into local algebras (a product of algebras with a
    /// unique maximal ideal).
    pub fn local_components(&self) -> Vec<FpAlgebra> {
        let p = self.p;
        let radical = self.radical();
        let (rad_rref, rad_piv) = rref_mod(radical.clone(), p);
        // Berlekamp subalgebra: x^p - x in the radical
        let images: ModMatrix = (0..self.dim)
            .map(|i| {
                let e = self.basis_vector(i);
                let fx = self.pow(&e, p);
                let d: Vec<u64> = fx.iter().zip(&e).map(|(&a, &b)| sub_mod(a, b, p)).collect();
                reduce_mod_span(&d, &rad_rref, &rad_piv, p)
            })
            .collect();
        let berlekamp = left_kernel_mod(&images, p);
        if berlekamp.len() <= radical.len() + 1 {
            return vec![self.clone()];
        }
        let mut trivial = radical;
        trivial.push(self.one.clone());
        let (tr, tp) = rref_mod(trivial, p);
        let b = berlekamp
            .iter()
            .find(|v| reduce_mod_span(v, &tr, &tp, p).iter().any(|&c| c != 0))
            .expect("non-scalar Berlekamp element");
        let m = self.minimal_polynomial(b);
        let fac = factor_mod_p(&m).expect("nonzero minimal polynomial");
        let (lin, k) = fac.factors[0].clone();
        let mut nu = ModPolynomial::one(p);
        for _ in 0..k {
            nu = nu.mul(&lin);
        }
        let (mu, rem) = m.div_rem(&nu);
        debug_assert!(rem.is_zero());
        let (_, _, t) = nu.xgcd(&mu);
        let eps = self.eval_poly(&t.mul(&mu), b);
        let co: Vec<u64> = self.one.iter().zip(&eps).map(|(&a, &b)| sub_mod(a, b, p)).collect();
        let mut out = self.component(&eps).local_components();
        out.extend(self.component(&co).local_components());
        out
    }

    /// `(f, e)` for a local algebra `O_P / P^e`: `f` = codimension of the
    /// radical, `e = dim / f`.
    pub fn local_pair(&self) -> (usize, usize) {
        let r = self.radical().len();
        let f = self.dim - r;
        (f, self.dim / f)
    }

    /// `(f, e)` pairs of all local components.
    pub fn splitting_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<(usize, usize)> = self.local_components().iter().map(FpAlgebra::local_pair).collect();
        pairs.sort_unstable();
        pairs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `F_p[x]/(m(x))` in the monomial basis.
    fn quotient_algebra(m: &[u64], p: u64) -> FpAlgebra {
        let m = ModPolynomial::new(m.to_vec(), p).unwrap();
        let n = m.deg();
        let mono = |k: usize| {
            let mut c = vec![0u64; k + 1];
            c[k] = 1;
            ModPolynomial::new(c, p).unwrap()
        };
        let mult = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let r = mono(i + j).rem(&m);
                        (0..n).map(|k| r.coeff(k)).collect()
                    })
                    .collect()
            })
            .collect();
        let mut one = vec![0u64; n];
        one[0] = 1;
        FpAlgebra::new(p, mult, one)
    }

    #[test]
    fn splits_like_the_polynomial() {
        // (x+1)^2 (x^2+x+1) over F_2 = x^4 + x^3 + x + 1
        let a = quotient_algebra(&[1, 1, 0, 1, 1], 2);
        assert_eq!(a.radical().len(), 1);
        assert_eq!(a.splitting_pairs(), vec![(1, 2), (2, 1)]);
        // x^3 - x over F_3 splits completely
        let b = quotient_algebra(&[0, 2, 0, 1], 3);
        assert_eq!(b.splitting_pairs(), vec![(1, 1), (1, 1), (1, 1)]);
        // x^3 over F_5 is local with e = 3
        let c = quotient_algebra(&[0, 0, 0, 1], 5);
        assert_eq!(c.splitting_pairs(), vec![(1, 3)]);
    }
}
