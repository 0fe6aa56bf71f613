use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::algebra::interpolate::interpolate_integer;
use crate::algebra::{factor_over_z, poly_resultant, IntPolynomial};

use super::field::NumberField;
use super::NumberFieldError;

/// Largest shift tried before giving up on a squarefree resultant.
pub const MAX_SHIFT: i64 = 50;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompositumDegrees {
    /// The `k` for which `R_k` is squarefree.
    pub shift: i64,
    /// Degrees of the irreducible factors of `R_k`, ascending.
    pub degrees: Vec<usize>,
}

/// `R_k(x) = Res_y(f(y), g(x - k y))`, normalised to positive leading
/// coefficient. Built from its values at `deg f * deg g + 1` integers.
pub fn compositum_resultant(f: &IntPolynomial, g: &IntPolynomial, k: i64) -> Result<IntPolynomial, NumberFieldError> {
    let d = f.deg() * g.deg();
    let mk = BigInt::from(-k);
    let half = (d / 2) as i64;
    // sequential: callers run this on worker threads that may not block the rayon pool
    let points: Result<Vec<(BigInt, BigInt)>, NumberFieldError> = (0..=d as i64)
        .map(|i| {
            let x = BigInt::from(i - half);
            let gy = g.compose_linear(&mk, &x);
            Ok((x, poly_resultant(f, &gy)?))
        })
        .collect();
    let r = interpolate_integer(&points?).ok_or(NumberFieldError::Interpolation)?;
    Ok(if r.leading_coeff().is_negative() { -&r } else { r })
}

/// First `k = 1, 2, ...` with `R_k` squarefree.
pub fn squarefree_shift(f: &IntPolynomial, g: &IntPolynomial) -> Result<(i64, IntPolynomial), NumberFieldError> {
    for k in 1..=MAX_SHIFT {
        let r = compositum_resultant(f, g, k)?;
        if r.is_squarefree() {
            return Ok((k, r));
        }
    }
    Err(NumberFieldError::NoSquarefreeShift(MAX_SHIFT))
}

/// Degrees of the composita `K * sigma(K1)`: factor degrees of a
/// squarefree `R_k`. They sum to `[K:Q][K1:Q]`.
pub fn compositum_degrees(k: &NumberField, k1: &NumberField) -> Result<CompositumDegrees, NumberFieldError> {
    compositum_degrees_of(k.defining_poly(), k1.defining_poly())
}

pub fn compositum_degrees_of(f: &IntPolynomial, g: &IntPolynomial) -> Result<CompositumDegrees, NumberFieldError> {
    let (shift, r) = squarefree_shift(f, g)?;
    let fac = factor_over_z(&r)?;
    Ok(CompositumDegrees { shift, degrees: fac.degrees() })
}

/// Equal degree `n` and some compositum of degree `n`.
pub fn is_isomorphic(k: &NumberField, k1: &NumberField) -> Result<bool, NumberFieldError> {
    if k.degree() != k1.degree() {
        return Ok(false);
    }
    let n = k.degree();
    Ok(compositum_degrees(k, k1)?.degrees.contains(&n))
}
