//! Orders of `Q[x]/(f)` given by a basis in power-basis coordinates, and the
//! Round 2 enlargement at a prime.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::integer::reduce_big;
use crate::algebra::{factor_mod_p, IntPolynomial, ModPolynomial};

use super::fpalgebra::FpAlgebra;
use super::linalg::{
    det_bareiss, hnf, inverse_rational, left_kernel_mod, to_mod, vec_mul_int, vec_mul_rat, IntMatrix, ModMatrix,
    RatMatrix,
};

/// A full-rank order: element `i` of the basis is `(sum_j basis[i][j] x^j) / den`.
#[derive(Clone, Debug)]
pub struct Order {
    poly: IntPolynomial,
    basis: IntMatrix,
    den: BigInt,
    /// `mult[i][j]` = basis coordinates of `w_i * w_j`.
    mult: Vec<Vec<Vec<BigInt>>>,
    one: Vec<BigInt>,
}

/// Reduces an integer polynomial (coefficient list) modulo the monic `f`.
fn reduce_mod_monic(mut c: Vec<BigInt>, f: &IntPolynomial) -> Vec<BigInt> {
    let n = f.deg();
    let fc = f.coeffs();
    while c.len() > n {
        let top = c.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = c.len() - n;
        for (k, a) in fc[..n].iter().enumerate() {
            c[shift + k] -= &top * a;
        }
    }
    c.resize(n, BigInt::zero());
    c
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

impl Order {
    /// `Z[theta]` for monic `f`.
    pub fn equation_order(f: &IntPolynomial) -> Order {
        let n = f.deg();
        let basis = (0..n)
            .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect();
        Order::from_basis(f, basis, BigInt::one())
    }

    /// Builds the order with basis rows `basis / den`, normalising to HNF
    /// with the smallest common denominator.
    pub fn from_basis(f: &IntPolynomial, basis: IntMatrix, den: BigInt) -> Order {
        let n = f.deg();
        let mut basis = hnf(basis, n);
        let mut g = den.clone();
        for row in &basis {
            for x in row {
                g = g.gcd(x);
            }
        }
        let mut den = den;
        if !g.is_one() {
            for row in basis.iter_mut() {
                for x in row.iter_mut() {
                    *x /= &g;
                }
            }
            den /= &g;
        }
        let inv = inverse_rational(&basis);
        let den_q = BigRational::from(den.clone());
        let to_coords = |c: Vec<BigInt>| -> Vec<BigInt> {
            let v: Vec<BigRational> = c.into_iter().map(|x| BigRational::from(x) / &den_q).collect();
            vec_mul_rat(&v, &inv)
                .into_iter()
                .map(|q| {
                    assert!(q.is_integer(), "basis does not span a ring");
                    q.to_integer()
                })
                .collect()
        };
        let mut mult = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in i..n {
                let prod = reduce_mod_monic(poly_mul(&basis[i], &basis[j]), f);
                let c = to_coords(prod);
                mult[j][i] = c.clone();
                mult[i][j] = c;
            }
        }
        let mut e0 = vec![BigInt::zero(); n];
        e0[0] = &den * &den;
        let one = to_coords(e0);
        Order { poly: f.clone(), basis, den, mult, one }
    }

    pub fn degree(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// The basis as rational rows in power-basis coordinates.
    pub fn basis_rational(&self) -> RatMatrix {
        self.basis
            .iter()
            .map(|r| r.iter().map(|x| BigRational::new(x.clone(), self.den.clone())).collect())
            .collect()
    }

    /// `[O : Z[theta]] = den^n / |det basis|`.
    pub fn index(&self) -> BigInt {
        let d = det_bareiss(&self.basis).abs();
        let num = num_traits::pow(self.den.clone(), self.degree());
        let (q, r) = num.div_rem(&d);
        assert!(r.is_zero(), "order does not contain Z[theta]");
        q
    }

    pub fn mul(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let n = self.degree();
        let mut out = vec![BigInt::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let c = x * y;
                for (o, m) in out.iter_mut().zip(&self.mult[i][j]) {
                    *o += &c * m;
                }
            }
        }
        out
    }

    /// `O / pO` as an `F_p`-algebra in the reduction of this basis.
    pub fn residue_algebra(&self, p: u64) -> FpAlgebra {
        let mult = self
            .mult
            .iter()
            .map(|row| row.iter().map(|c| to_mod(c, p)).collect())
            .collect();
        FpAlgebra::new(p, mult, to_mod(&self.one, p))
    }

    fn unit_rows(n: usize, p: u64) -> IntMatrix {
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { BigInt::from(p) } else { BigInt::zero() }).collect())
            .collect()
    }

    fn lift(vs: &ModMatrix) -> IntMatrix {
        vs.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    /// One Round 2 step at `p`: the ring of multipliers of the `p`-radical.
    /// Returns `None` when it equals this order, i.e. the order is
    /// `p`-maximal.
    pub fn enlarge_at(&self, p: u64) -> Option<Order> {
        let n = self.degree();
        let radical = self.residue_algebra(p).radical();
        let mut gens = Self::lift(&radical);
        gens.extend(Self::unit_rows(n, p));
        let ideal = hnf(gens, n);
        let ideal_inv = inverse_rational(&ideal);
        // x -> (beta -> x beta) on I / pI
        let images: ModMatrix = (0..n)
            .map(|i| {
                let mut wi = vec![BigInt::zero(); n];
                wi[i] = BigInt::one();
                let mut img = Vec::with_capacity(n * n);
                for beta in &ideal {
                    let prod: Vec<BigRational> = self.mul(&wi, beta).into_iter().map(BigRational::from).collect();
                    for c in vec_mul_rat(&prod, &ideal_inv) {
                        debug_assert!(c.is_integer());
                        img.push(reduce_big(&c.to_integer(), p));
                    }
                }
                img
            })
            .collect();
        let kernel = left_kernel_mod(&images, p);
        if kernel.is_empty() {
            return None;
        }
        let mut gens = Self::lift(&kernel);
        gens.extend(Self::unit_rows(n, p));
        let u = hnf(gens, n);
        let new_basis: IntMatrix = u.iter().map(|r| vec_mul_int(r, &self.basis)).collect();
        Some(Order::from_basis(&self.poly, new_basis, &self.den * BigInt::from(p)))
    }

    /// Iterates [`Order::enlarge_at`] to the `p`-maximal overorder.
    pub fn p_maximal(self, p: u64) -> Order {
        let mut o = self;
        while let Some(next) = o.enlarge_at(p) {
            o = next;
        }
        o
    }
}

/// Dedekind's criterion: `Z[theta]` is `p`-maximal for monic `f`.
pub fn dedekind_is_maximal(f: &IntPolynomial, p: u64) -> bool {
    let fbar = ModPolynomial::from_int_poly(f, p).expect("prime modulus");
    let fac = factor_mod_p(&fbar).expect("nonzero");
    if fac.factors.iter().all(|(_, m)| *m == 1) {
        return true;
    }
    let mut g = ModPolynomial::one(p);
    let mut h = ModPolynomial::one(p);
    for (t, m) in &fac.factors {
        g = g.mul(t);
        for _ in 1..*m {
            h = h.mul(t);
        }
    }
    // F = (g h - f) / p with g, h lifted
    let gh = &g.to_int_poly() * &h.to_int_poly();
    let diff = &gh - f;
    let big_p = BigInt::from(p);
    let fq = diff.div_scalar_exact(&big_p);
    let fbar2 = ModPolynomial::from_int_poly(&fq, p).expect("prime modulus");
    let z = fbar2.gcd(&g).gcd(&h);
    z.deg() == 0 && !z.is_zero()
}
