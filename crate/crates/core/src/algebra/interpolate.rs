//! Exact polynomial interpolation over `Q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::IntPolynomial;

/// Polynomial of degree `< points.len()` through the given points, by
/// Newton divided differences. Returns `None` when the interpolant has a
/// non-integral coefficient. Abscissae must be distinct.
pub fn interpolate_integer(points: &[(BigInt, BigInt)]) -> Option<IntPolynomial> {
    let n = points.len();
    if n == 0 {
        return Some(IntPolynomial::zero());
    }
    let xs: Vec<BigRational> = points.iter().map(|(x, _)| BigRational::from(x.clone())).collect();
    let mut dd: Vec<BigRational> = points.iter().map(|(_, y)| BigRational::from(y.clone())).collect();
    for j in 1..n {
        for i in (j..n).rev() {
            let den = &xs[i] - &xs[i - j];
            assert!(!den.is_zero(), "repeated abscissa");
            dd[i] = (&dd[i] - &dd[i - 1]) / den;
        }
    }
    // Horner on the Newton form, coefficients kept rational.
    let mut acc: Vec<BigRational> = vec![dd[n - 1].clone()];
    for i in (0..n - 1).rev() {
        // acc = acc * (x - xs[i]) + dd[i]
        let mut next = vec![BigRational::zero(); acc.len() + 1];
        for (k, c) in acc.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * &xs[i];
        }
        next[0] += &dd[i];
        acc = next;
    }
    let mut coeffs = Vec::with_capacity(acc.len());
    for c in acc {
        if !c.denom().is_one() {
            return None;
        }
        coeffs.push(c.to_integer());
    }
    Some(IntPolynomial::new(coeffs))
}
