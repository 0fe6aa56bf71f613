//! The two known counterexample pairs and the values they are checked against.

use crate::algebra::IntPolynomial;

/// Coefficients, constant term first.
pub type Coeffs = [i64; 8];

/// `x^7 - 3x^6 + 4x^5 - 5x^4 + 3x^3 - x^2 - 2x + 1`
pub const F1: Coeffs = [1, -2, -1, 3, -5, 4, -3, 1];
/// `x^7 - x^5 - 2x^4 - 2x^3 + 2x^2 - x + 4`
pub const G1: Coeffs = [4, -1, 2, -2, -2, -1, 0, 1];
/// `x^7 - 7x^5 - 14x^4 - 7x^3 - 7x + 2`
pub const F2: Coeffs = [2, -7, 0, -7, -14, -7, 0, 1];
/// `x^7 - 14x^3 - 14x^2 + 7x + 22`
pub const G2: Coeffs = [22, 7, -14, -14, 0, 0, 0, 1];

/// The four polynomials with their labels, in pair order.
pub const REFERENCE_POLYNOMIALS: [(&str, Coeffs); 4] = [("f1", F1), ("g1", G1), ("f2", F2), ("g2", G2)];

pub fn reference_poly(c: &Coeffs) -> IntPolynomial {
    IntPolynomial::from_i64s(c)
}

/// Tab-separated input file holding the four polynomials.
pub fn reference_tsv() -> String {
    REFERENCE_POLYNOMIALS
        .iter()
        .map(|(l, c)| format!("{l}\t{}\n", reference_poly(c).to_list_string()))
        .collect()
}

/// Ramified factorization types with `g = 2, 3, 4` for degree 7, grouped
/// by product partition: reference data for the enumerator. The first
/// `2+2+3` entry is `{(1,1,1),(2,2,3)}`; with ramification `(1,2,3)` the
/// products would sum to 6.
pub const REFERENCE_TYPE_LISTS: &[(usize, &str, &[&str])] = &[
    (4, "1+1+1+4", &["{(1,1,1,1),(1,1,1,4)}", "{(1,1,1,2),(1,1,1,2)}"]),
    (4, "1+1+2+3", &["{(1,1,1,1),(1,1,2,3)}", "{(1,1,1,3),(1,1,2,1)}", "{(1,1,1,2),(1,1,3,1)}"]),
    (4, "1+2+2+2", &["{(1,1,1,1),(1,2,2,2)}", "{(1,1,1,2),(1,2,2,1)}", "{(1,1,2,2),(1,2,1,1)}"]),
    (3, "1+1+5", &["{(1,1,1),(1,1,5)}"]),
    (
        3,
        "1+2+4",
        &[
            "{(1,1,1),(1,2,4)}",
            "{(1,1,2),(1,2,2)}",
            "{(1,1,2),(1,4,1)}",
            "{(1,1,4),(1,2,1)}",
            "{(1,2,2),(1,1,2)}",
        ],
    ),
    (3, "1+3+3", &["{(1,1,1),(1,3,3)}", "{(1,1,3),(1,3,1)}"]),
    (
        3,
        "2+2+3",
        &[
            "{(1,1,1),(2,2,3)}",
            "{(1,1,2),(2,3,1)}",
            "{(1,1,3),(2,2,1)}",
            "{(1,2,2),(3,1,1)}",
            "{(1,2,3),(2,1,1)}",
        ],
    ),
    (2, "1+6", &["{(1,1),(1,6)}", "{(1,2),(1,3)}", "{(1,3),(1,2)}"]),
    (2, "2+5", &["{(1,1),(2,5)}", "{(1,5),(2,1)}", "{(1,2),(5,1)}"]),
    (
        2,
        "3+4",
        &["{(1,1),(3,4)}", "{(1,2),(3,2)}", "{(1,3),(4,1)}", "{(1,4),(3,1)}", "{(2,3),(2,1)}"],
    ),
];
