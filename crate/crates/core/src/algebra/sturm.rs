//! Real root counting with Sturm sequences.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{AlgebraError, IntPolynomial};

/// Sturm chain of `f`, scaled by positive constants so everything stays in
/// `Z[x]` without changing signs.
pub fn sturm_sequence(f: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut seq = vec![f.clone(), f.derivative()];
    loop {
        let n = seq.len();
        let (a, b) = (&seq[n - 2], &seq[n - 1]);
        if b.is_zero() {
            seq.pop();
            break;
        }
        if b.deg() == 0 {
            break;
        }
        // lc(b)^k * a = q*b + r; make the multiplier positive.
        let k = a.deg() - b.deg() + 1;
        let mut r = a.pseudo_rem(b);
        if b.leading_coeff().is_negative() && k % 2 == 1 {
            r = -&r;
        }
        let r = -&r;
        let c = r.content();
        let r = if c.is_zero() { r } else { r.div_scalar_exact(&c) };
        seq.push(r);
    }
    seq
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn sign(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Number of distinct real roots of a squarefree polynomial.
pub fn count_real_roots(f: &IntPolynomial) -> Result<usize, AlgebraError> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    if f.deg() == 0 {
        return Ok(0);
    }
    if !f.is_squarefree() {
        return Err(AlgebraError::NotSquarefree);
    }
    let seq = sturm_sequence(f);
    let at_pos_inf = sign_changes(seq.iter().map(|p| sign(&p.leading_coeff())));
    let at_neg_inf = sign_changes(seq.iter().map(|p| {
        let s = sign(&p.leading_coeff());
        if p.deg() % 2 == 1 {
            -s
        } else {
            s
        }
    }));
    Ok(at_neg_inf - at_pos_inf)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn small_cases() {
        assert_eq!(count_real_roots(&p(&[1, 0, 1])).unwrap(), 0);
        assert_eq!(count_real_roots(&p(&[-2, 0, 1])).unwrap(), 2);
        assert_eq!(count_real_roots(&p(&[0, -1, 0, 1])).unwrap(), 3);
        assert_eq!(count_real_roots(&p(&[-2, 0, 0, 0, 0, 0, 0, 1])).unwrap(), 1);
        assert_eq!(count_real_roots(&p(&[7])).unwrap(), 0);
    }

    #[test]
    fn negative_leading_coefficient() {
        assert_eq!(count_real_roots(&p(&[2, 0, -1])).unwrap(), 2);
        assert_eq!(count_real_roots(&p(&[0, 1, 0, -1])).unwrap(), 3);
    }

    #[test]
    fn rejects_repeated_roots() {
        let f = &p(&[1, 1]) * &p(&[1, 1]);
        assert!(matches!(count_real_roots(&f), Err(AlgebraError::NotSquarefree)));
    }
}
