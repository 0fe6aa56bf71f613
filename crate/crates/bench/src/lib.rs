//! Shared inputs for the criterion benches.

use gassmann::numberfield::compositum_resultant;
use gassmann::search::reference::{reference_poly, REFERENCE_POLYNOMIALS};
use gassmann::IntPolynomial;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn reference(label: &str) -> IntPolynomial {
    let (_, c) = REFERENCE_POLYNOMIALS.iter().find(|(l, _)| *l == label).expect("known label");
    reference_poly(c)
}

/// `R_1` for the first reference pair: degree 49, factors as 21 + 28.
pub fn compositum_49() -> IntPolynomial {
    compositum_resultant(&reference("f1"), &reference("g1"), 1).expect("resultant")
}

/// Dense polynomial with coefficients in `[-bound, bound]` and leading
/// coefficient 1.
pub fn random_monic(degree: usize, bound: i64, seed: u64) -> IntPolynomial {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    let mut c: Vec<i64> = (0..degree).map(|_| r.gen_range(-bound..=bound)).collect();
    c.push(1);
    IntPolynomial::from_i64s(&c)
}
