//! Small dense linear algebra over `Z`, `Q` and `F_p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::integer::{inv_mod, mul_mod, sub_mod};

pub type IntMatrix = Vec<Vec<BigInt>>;
pub type RatMatrix = Vec<Vec<BigRational>>;
pub type ModMatrix = Vec<Vec<u64>>;

/// Hermite normal form of the lattice spanned by `rows` (full rank `n`
/// assumed): upper triangular, positive diagonal, entries above each pivot
/// reduced into `[0, pivot)`. Returns exactly `n` rows.
pub fn hnf(mut rows: IntMatrix, n: usize) -> IntMatrix {
    let mut pivot_row = 0;
    for col in 0..n {
        // Euclid on column `col` among rows pivot_row..
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..rows.len() {
                if rows[r][col].is_zero() {
                    continue;
                }
                if best.is_none_or(|b| rows[r][col].abs() < rows[b][col].abs()) {
                    best = Some(r);
                }
            }
            let Some(b) = best else { break };
            rows.swap(pivot_row, b);
            let mut done = true;
            for r in pivot_row + 1..rows.len() {
                if rows[r][col].is_zero() {
                    continue;
                }
                let q = rows[r][col].div_floor(&rows[pivot_row][col]);
                let (head, tail) = rows.split_at_mut(r);
                let pr = &head[pivot_row];
                for (x, y) in tail[0].iter_mut().zip(pr) {
                    *x -= &q * y;
                }
                if !tail[0][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if pivot_row < rows.len() && !rows[pivot_row][col].is_zero() {
            if rows[pivot_row][col].is_negative() {
                for x in rows[pivot_row].iter_mut() {
                    *x = -&*x;
                }
            }
            pivot_row += 1;
        }
    }
    rows.truncate(pivot_row);
    assert_eq!(rows.len(), n, "lattice is not of full rank");
    // reduce above the diagonal
    for i in 0..n {
        for r in 0..i {
            let q = rows[r][i].div_floor(&rows[i][i]);
            if q.is_zero() {
                continue;
            }
            let (head, tail) = rows.split_at_mut(i);
            for (x, y) in head[r].iter_mut().zip(&tail[0]) {
                *x -= &q * y;
            }
        }
    }
    rows
}

/// Determinant by fraction-free Bareiss elimination.
pub fn det_bareiss(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Inverse over `Q` of a nonsingular integer matrix.
pub fn inverse_rational(m: &IntMatrix) -> RatMatrix {
    let n = m.len();
    let mut a: RatMatrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row.iter().map(|x| BigRational::from(x.clone())).collect();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).expect("nonsingular matrix");
        a.swap(c, p);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                let (pc, rr) = if r < c {
                    let (h, t) = a.split_at_mut(c);
                    (&t[0], &mut h[r])
                } else {
                    let (h, t) = a.split_at_mut(r);
                    (&h[c], &mut t[0])
                };
                for (x, y) in rr.iter_mut().zip(pc) {
                    *x -= &f * y;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Row vector times rational matrix.
pub fn vec_mul_rat(v: &[BigRational], m: &RatMatrix) -> Vec<BigRational> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| v.iter().zip(m).map(|(a, row)| a * &row[j]).sum())
        .collect()
}

/// Row vector times integer matrix.
pub fn vec_mul_int(v: &[BigInt], m: &IntMatrix) -> Vec<BigInt> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| v.iter().zip(m).map(|(a, row)| a * &row[j]).sum())
        .collect()
}

/// Reduced row echelon form over `F_p`; returns the nonzero rows and their
/// pivot columns.
pub fn rref_mod(mut m: ModMatrix, p: u64) -> (ModMatrix, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(k) = (r..rows).find(|&k| m[k][c] != 0) else { continue };
        m.swap(r, k);
        let inv = inv_mod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for k in 0..rows {
            if k != r && m[k][c] != 0 {
                let f = m[k][c];
                for j in 0..cols {
                    let t = mul_mod(f, m[r][j], p);
                    m[k][j] = sub_mod(m[k][j], t, p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Basis of `{x : M x = 0}` for an `rows x cols` matrix over `F_p`.
pub fn kernel_mod(m: &ModMatrix, cols: usize, p: u64) -> ModMatrix {
    let (rr, pivots) = rref_mod(m.clone(), p);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; cols];
            v[fc] = 1;
            for (row, &pc) in rr.iter().zip(&pivots) {
                v[pc] = (p - row[fc]) % p;
            }
            v
        })
        .collect()
}

/// Basis of `{x : sum x_i images[i] = 0}`.
pub fn left_kernel_mod(images: &ModMatrix, p: u64) -> ModMatrix {
    let n = images.len();
    let width = images.first().map_or(0, Vec::len);
    let t: ModMatrix = (0..width).map(|j| (0..n).map(|i| images[i][j]).collect()).collect();
    kernel_mod(&t, n, p)
}

/// Reduces `v` modulo the row space of an RREF basis.
pub fn reduce_mod_span(v: &[u64], rref: &ModMatrix, pivots: &[usize], p: u64) -> Vec<u64> {
    let mut v = v.to_vec();
    for (row, &pc) in rref.iter().zip(pivots) {
        let f = v[pc];
        if f != 0 {
            for (x, &y) in v.iter_mut().zip(row) {
                *x = sub_mod(*x, mul_mod(f, y, p), p);
            }
        }
    }
    v
}

/// Solves `sum x_i basis[i] = v` for a linearly independent `basis`.
pub fn solve_in_basis_mod(basis: &ModMatrix, v: &[u64], p: u64) -> Option<Vec<u64>> {
    let k = basis.len();
    let width = v.len();
    // columns: basis vectors, augmented by v
    let m: ModMatrix = (0..width)
        .map(|j| {
            let mut row: Vec<u64> = (0..k).map(|i| basis[i][j]).collect();
            row.push(v[j]);
            row
        })
        .collect();
    let (rr, pivots) = rref_mod(m, p);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![0u64; k];
    for (row, &pc) in rr.iter().zip(&pivots) {
        x[pc] = row[k];
    }
    Some(x)
}

pub fn to_mod(v: &[BigInt], p: u64) -> Vec<u64> {
    v.iter().map(|x| crate::algebra::integer::reduce_big(x, p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn im(rows: &[&[i64]]) -> IntMatrix {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn hnf_of_small_lattice() {
        let h = hnf(im(&[&[2, 0], &[0, 2], &[1, 1]]), 2);
        assert_eq!(h, im(&[&[1, 1], &[0, 2]]));
        assert_eq!(det_bareiss(&h), BigInt::from(2));
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let m = im(&[&[2, -1, 0], &[1, 3, 4], &[0, 5, -2]]);
        // 2*(3*-2 - 4*5) - (-1)*(1*-2 - 0) = -52 - 2 = -54
        assert_eq!(det_bareiss(&m), BigInt::from(-54));
        let inv = inverse_rational(&m);
        let prod = vec_mul_rat(&m[0].iter().map(|x| BigRational::from(x.clone())).collect::<Vec<_>>(), &inv);
        assert_eq!(prod[0], BigRational::one());
        assert!(prod[1].is_zero());
    }

    #[test]
    fn kernels_mod_p() {
        let m: ModMatrix = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let k = kernel_mod(&m, 3, 7);
        assert_eq!(k.len(), 2);
        for v in &k {
            let s = (v[0] + 2 * v[1] + 3 * v[2]) % 7;
            assert_eq!(s, 0);
        }
        let lk = left_kernel_mod(&m, 7);
        assert_eq!(lk, vec![vec![5, 1]]);
        let x = solve_in_basis_mod(&vec![vec![1, 0, 1], vec![0, 1, 1]], &[2, 3, 5], 7).unwrap();
        assert_eq!(x, vec![2, 3]);
        assert!(solve_in_basis_mod(&vec![vec![1, 0, 1]], &[0, 1, 0], 7).is_none());
    }
}
