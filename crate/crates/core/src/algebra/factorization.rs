use num_bigint::BigInt;

use super::{IntPolynomial, ModPolynomial};

/// `unit * prod factor^multiplicity`, factors in canonical order
/// (degree first, then coefficient lists lexicographically).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<P, U> {
    pub unit: U,
    pub factors: Vec<(P, u32)>,
}

pub type ModFactorization = Factorization<ModPolynomial, u64>;
pub type IntFactorization = Factorization<IntPolynomial, BigInt>;

impl<P, U> Factorization<P, U> {
    /// Number of irreducible factors counted with multiplicity.
    pub fn factor_count(&self) -> usize {
        self.factors.iter().map(|(_, m)| *m as usize).sum()
    }
}

impl ModFactorization {
    pub fn expand(&self, p: u64) -> ModPolynomial {
        let mut acc = ModPolynomial::constant(self.unit, p);
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(f);
            }
        }
        acc
    }

    /// `(degree, multiplicity)` of each factor, in canonical order.
    pub fn degree_pattern(&self) -> Vec<(usize, u32)> {
        self.factors.iter().map(|(f, m)| (f.deg(), *m)).collect()
    }

    pub(crate) fn sort_canonical(&mut self) {
        self.factors
            .sort_by(|a, b| a.0.cmp_canonical(&b.0).then(a.1.cmp(&b.1)));
    }
}

impl IntFactorization {
    pub fn expand(&self) -> IntPolynomial {
        let mut acc = IntPolynomial::constant(self.unit.clone());
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m);
        }
        acc
    }

    /// Degrees of the irreducible factors, repeated by multiplicity, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(f, m)| std::iter::repeat(f.deg()).take(*m as usize))
            .collect();
        d.sort_unstable();
        d
    }

    pub(crate) fn sort_canonical(&mut self) {
        self.factors
            .sort_by(|a, b| a.0.cmp_canonical(&b.0).then(a.1.cmp(&b.1)));
    }
}
