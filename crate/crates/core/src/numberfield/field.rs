use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::integer::{factor_integer, is_prime_u64, valuation};
use crate::algebra::{count_real_roots, factor_mod_p, factor_over_z, poly_discriminant, IntPolynomial, ModPolynomial};
use crate::splitting::FactorizationType;

use super::order::{dedekind_is_maximal, Order};
use super::NumberFieldError;

/// `Q(theta)` with `theta` a root of a monic irreducible integer polynomial,
/// together with its ring of integers.
#[derive(Clone, Debug)]
pub struct NumberField {
    defining_poly: IntPolynomial,
    poly_disc: BigInt,
    maximal_order: Order,
    index: BigInt,
    field_disc: BigInt,
    signature: (usize, usize),
}

/// Splitting of `l O_K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeDecomposition {
    pub prime: u64,
    #[serde(rename = "type")]
    pub factorization_type: FactorizationType,
    pub wild: bool,
}

impl PrimeDecomposition {
    fn from_pairs(prime: u64, pairs: Vec<(usize, usize)>) -> Self {
        let factorization_type = FactorizationType::new(pairs).expect("nonempty positive pairs");
        let wild = factorization_type.is_wild_at(prime);
        PrimeDecomposition { prime, factorization_type, wild }
    }
}

/// Builds the field and its maximal order (Round 2 at every `p` with
/// `p^2 | disc(f)`, skipping primes where Dedekind's criterion already
/// certifies `Z[theta]`).
pub fn field_from_poly(f: &IntPolynomial) -> Result<NumberField, NumberFieldError> {
    if f.deg() < 1 {
        return Err(NumberFieldError::Constant);
    }
    if !f.is_monic() {
        return Err(NumberFieldError::NotMonic);
    }
    let fac = factor_over_z(f)?;
    if fac.factors.len() != 1 || fac.factors[0].1 != 1 {
        return Err(NumberFieldError::Reducible(f.to_list_string()));
    }
    let poly_disc = poly_discriminant(f)?;
    let mut order = Order::equation_order(f);
    for (p, k) in factor_integer(&poly_disc) {
        if k < 2 {
            continue;
        }
        let p = p.to_u64().ok_or_else(|| NumberFieldError::PrimeTooLarge(p.to_string()))?;
        if dedekind_is_maximal(f, p) {
            continue;
        }
        order = order.p_maximal(p);
    }
    let index = order.index();
    let field_disc = &poly_disc / (&index * &index);
    debug_assert_eq!(&field_disc * &index * &index, poly_disc);
    let r1 = count_real_roots(f)?;
    let signature = (r1, (f.deg() - r1) / 2);
    Ok(NumberField { defining_poly: f.clone(), poly_disc, maximal_order: order, index, field_disc, signature })
}

impl NumberField {
    pub fn degree(&self) -> usize {
        self.defining_poly.deg()
    }

    pub fn defining_poly(&self) -> &IntPolynomial {
        &self.defining_poly
    }

    pub fn poly_disc(&self) -> &BigInt {
        &self.poly_disc
    }

    /// `[O_K : Z[theta]]`.
    pub fn index(&self) -> &BigInt {
        &self.index
    }

    pub fn field_disc(&self) -> &BigInt {
        &self.field_disc
    }

    /// `(r1, r2)`.
    pub fn signature(&self) -> (usize, usize) {
        self.signature
    }

    pub fn maximal_order(&self) -> &Order {
        &self.maximal_order
    }

    /// Integral basis rows in power-basis coordinates.
    pub fn integral_basis(&self) -> Vec<Vec<BigRational>> {
        self.maximal_order.basis_rational()
    }

    /// Integral basis as an integer matrix over a common denominator.
    pub fn integral_basis_parts(&self) -> (&[Vec<BigInt>], &BigInt) {
        (self.maximal_order.basis(), self.maximal_order.denominator())
    }

    /// Primes dividing the field discriminant.
    pub fn ramified_primes(&self) -> Vec<BigInt> {
        factor_integer(&self.field_disc).into_iter().map(|(p, _)| p).collect()
    }

    pub fn disc_valuation(&self, l: u64) -> u32 {
        disc_valuation(&self.field_disc, l)
    }

    pub fn has_square_discriminant(&self) -> bool {
        crate::algebra::resultant::is_square_discriminant(&self.field_disc)
    }

    fn check_prime(l: u64) -> Result<(), NumberFieldError> {
        if is_prime_u64(l) {
            Ok(())
        } else {
            Err(NumberFieldError::NotPrime(l))
        }
    }

    /// Splitting of `l`: factors `f` mod `l` when `l` does not divide the
    /// index, otherwise splits `O_K / l O_K`.
    pub fn prime_decomposition(&self, l: u64) -> Result<PrimeDecomposition, NumberFieldError> {
        Self::check_prime(l)?;
        if (&self.index % BigInt::from(l)).is_zero() {
            self.decomposition_via_order(l)
        } else {
            self.decomposition_via_polynomial(l)
        }
    }

    /// Dedekind: each factor of `f mod l` of degree `f` and multiplicity `e`
    /// gives `(f, e)`. Errors when `l` divides the index.
    pub fn decomposition_via_polynomial(&self, l: u64) -> Result<PrimeDecomposition, NumberFieldError> {
        Self::check_prime(l)?;
        if (&self.index % BigInt::from(l)).is_zero() {
            return Err(NumberFieldError::IndexDivisor(l));
        }
        let fbar = ModPolynomial::from_int_poly(&self.defining_poly, l)?;
        let fac = factor_mod_p(&fbar)?;
        let pairs = fac.factors.iter().map(|(g, m)| (g.deg(), *m as usize)).collect();
        Ok(PrimeDecomposition::from_pairs(l, pairs))
    }

    /// Local splitting of the `F_l`-algebra `O_K / l O_K`; valid for every `l`.
    pub fn decomposition_via_order(&self, l: u64) -> Result<PrimeDecomposition, NumberFieldError> {
        Self::check_prime(l)?;
        let pairs = self.maximal_order.residue_algebra(l).splitting_pairs();
        Ok(PrimeDecomposition::from_pairs(l, pairs))
    }
}

/// `v_l(disc)` for a possibly negative discriminant; shared with callers
/// that only hold the integer.
pub fn disc_valuation(d: &BigInt, l: u64) -> u32 {
    if d.is_zero() {
        return 0;
    }
    valuation(&d.abs(), &BigInt::from(l))
}

/// Rational `1 / index` as expected for the determinant of the integral basis.
pub fn basis_determinant(k: &NumberField) -> BigRational {
    let (m, den) = k.integral_basis_parts();
    let d = super::linalg::det_bareiss(&m.to_vec());
    BigRational::new(d, num_traits::pow(den.clone(), k.degree()))
}
