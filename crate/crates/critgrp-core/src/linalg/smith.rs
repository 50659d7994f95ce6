//! Smith normal form over the integers with unimodular transforms.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// A decomposition `A = left * diag * right` with `left` and `right`
/// unimodular and the diagonal of `diag` a divisibility chain
/// `d_1 | d_2 | ...` of nonnegative integers, zeros last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithNormalForm {
    pub left: IntMatrix,
    pub diag: IntMatrix,
    pub right: IntMatrix,
    /// Full diagonal of `diag`, length `min(rows, cols)`, ones and zeros
    /// included.
    pub invariant_factors: Vec<BigInt>,
}

impl SmithNormalForm {
    /// Invariant factors greater than one, i.e. the nontrivial cyclic
    /// summands of the cokernel when it is finite.
    pub fn nontrivial_factors(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .filter(|d| d.abs() > BigInt::from(1))
            .cloned()
            .collect()
    }
}

/// Computes the Smith normal form of `a`.
///
/// At every step the nonzero entry of smallest absolute value in the working
/// submatrix is chosen as pivot, which keeps intermediate coefficients small
/// in practice. `left` and `right` are updated with the inverses of the
/// elementary operations so that `a = left * diag * right` holds throughout.
pub fn smith_normal_form(a: &IntMatrix) -> SmithNormalForm {
    let (rows, cols) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut left = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);

    // Row operation s <- E s pairs with left <- left E^{-1}, and the column
    // operation s <- s F pairs with right <- F^{-1} right.

    let row_sub = |s: &mut IntMatrix, left: &mut IntMatrix, i: usize, j: usize, q: &BigInt| {
        // row_i -= q * row_j; inverse adds q * col_i to col_j of `left`.
        for c in 0..s.cols() {
            let v = &s[(i, c)] - q * &s[(j, c)];
            s[(i, c)] = v;
        }
        for r in 0..left.rows() {
            let v = &left[(r, j)] + q * &left[(r, i)];
            left[(r, j)] = v;
        }
    };
    let col_sub = |s: &mut IntMatrix, right: &mut IntMatrix, i: usize, j: usize, q: &BigInt| {
        // col_i -= q * col_j; inverse adds q * row_i to row_j of `right`.
        for r in 0..s.rows() {
            let v = &s[(r, i)] - q * &s[(r, j)];
            s[(r, i)] = v;
        }
        for c in 0..right.cols() {
            let v = &right[(j, c)] + q * &right[(i, c)];
            right[(j, c)] = v;
        }
    };

    let limit = rows.min(cols);
    for t in 0..limit {
        'pivot: loop {
            // Smallest-magnitude nonzero entry of the working submatrix.
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !s[(i, j)].is_zero()
                        && best
                            .map(|(bi, bj)| s[(i, j)].abs() < s[(bi, bj)].abs())
                            .unwrap_or(true)
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break 'pivot;
            };
            if pi != t {
                s.swap_rows(t, pi);
                left.swap_cols(t, pi);
            }
            if pj != t {
                s.swap_cols(t, pj);
                right.swap_rows(t, pj);
            }

            let mut leftover = false;
            for i in t + 1..rows {
                if !s[(i, t)].is_zero() {
                    let q = &s[(i, t)] / &s[(t, t)];
                    row_sub(&mut s, &mut left, i, t, &q);
                    leftover |= !s[(i, t)].is_zero();
                }
            }
            for j in t + 1..cols {
                if !s[(t, j)].is_zero() {
                    let q = &s[(t, j)] / &s[(t, t)];
                    col_sub(&mut s, &mut right, j, t, &q);
                    leftover |= !s[(t, j)].is_zero();
                }
            }
            if leftover {
                // A remainder smaller than the pivot appeared; re-pivot.
                continue 'pivot;
            }

            // Pivot now alone in its row and column. Enforce divisibility
            // over the rest of the submatrix.
            let mut fixed = true;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !s[(i, j)].mod_floor(&s[(t, t)]).is_zero() {
                        // Fold the offending row into the pivot row.
                        let minus_one = BigInt::from(-1);
                        row_sub(&mut s, &mut left, t, i, &minus_one);
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break 'pivot;
            }
        }

        if s[(t, t)].is_negative() {
            for c in 0..cols {
                let v = -s[(t, c)].clone();
                s[(t, c)] = v;
            }
            for r in 0..rows {
                let v = -left[(r, t)].clone();
                left[(r, t)] = v;
            }
        }
    }

    let invariant_factors = (0..limit).map(|t| s[(t, t)].clone()).collect();
    SmithNormalForm {
        left,
        diag: s,
        right,
        invariant_factors,
    }
}
