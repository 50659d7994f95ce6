//! Column-style Hermite normal form, saturated integer kernels, and exact
//! integer linear solving.
//!
//! The convention fixed here and used for all lattice canonicalization:
//! column operations only, pivots are the topmost nonzero entry of their
//! column and are positive, pivot rows strictly increase left to right,
//! entries in a pivot row to the right of the pivot are zero, and entries to
//! the left are reduced into `[0, pivot)`. Zero columns sort to the end.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::lattice::Lattice;
use super::matrix::IntMatrix;

/// Column echelon form with transform: returns `(h, v, pivots)` such that
/// `a * v = h`, `v` is unimodular, `h` is in column Hermite normal form with
/// its zero columns last, and `pivots[k]` is the pivot row of column `k`.
pub fn column_hermite_with_transform(a: &IntMatrix) -> (IntMatrix, IntMatrix, Vec<usize>) {
    let (rows, cols) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut v = IntMatrix::identity(cols);
    let mut pivots = Vec::new();
    let mut pc = 0; // next pivot column

    let combine_cols = |h: &mut IntMatrix, v: &mut IntMatrix, r: usize, i: usize, j: usize| {
        // Replace columns (i, j) by (x*c_i + y*c_j, -(b/g)*c_i + (a/g)*c_j)
        // where (g, x, y) = xgcd(h[r][i], h[r][j]); determinant one.
        let a_entry = h[(r, i)].clone();
        let b_entry = h[(r, j)].clone();
        let ext = a_entry.extended_gcd(&b_entry);
        let (g, x, y) = (ext.gcd, ext.x, ext.y);
        let ai = &a_entry / &g;
        let bj = &b_entry / &g;
        for m in [&mut *h, &mut *v] {
            for row in 0..m.rows() {
                let ci = m[(row, i)].clone();
                let cj = m[(row, j)].clone();
                m[(row, i)] = &x * &ci + &y * &cj;
                m[(row, j)] = &ai * &cj - &bj * &ci;
            }
        }
    };

    for r in 0..rows {
        if pc == cols {
            break;
        }
        let Some(first) = (pc..cols).find(|&j| !h[(r, j)].is_zero()) else {
            continue;
        };
        if first != pc {
            h.swap_cols(pc, first);
            v.swap_cols(pc, first);
        }
        for j in pc + 1..cols {
            if !h[(r, j)].is_zero() {
                combine_cols(&mut h, &mut v, r, pc, j);
            }
        }
        if h[(r, pc)].is_negative() {
            for row in 0..rows {
                let val = -h[(row, pc)].clone();
                h[(row, pc)] = val;
            }
            for row in 0..cols {
                let val = -v[(row, pc)].clone();
                v[(row, pc)] = val;
            }
        }
        // Reduce the pivot row entries of earlier columns into [0, pivot).
        for j in 0..pc {
            let q = h[(r, j)].div_floor(&h[(r, pc)]);
            if !q.is_zero() {
                for row in 0..rows {
                    let val = &h[(row, j)] - &q * &h[(row, pc)];
                    h[(row, j)] = val;
                }
                for row in 0..cols {
                    let val = &v[(row, j)] - &q * &v[(row, pc)];
                    v[(row, j)] = val;
                }
            }
        }
        pivots.push(r);
        pc += 1;
    }

    (h, v, pivots)
}

/// Column Hermite normal form of `a` with zero columns dropped; the result
/// has exactly `rank(a)` columns and spans the same column lattice as `a`.
pub fn hermite_normal_form(a: &IntMatrix) -> IntMatrix {
    let (h, _, pivots) = column_hermite_with_transform(a);
    h.select_cols(&(0..pivots.len()).collect::<Vec<_>>())
}

/// Basis of the saturated kernel lattice `{x : a x = 0}` over the integers.
///
/// Every integer kernel vector is an integer combination of the returned
/// columns because they are columns of a unimodular transform.
pub fn integer_kernel_basis(a: &IntMatrix) -> Lattice {
    let (_, v, pivots) = column_hermite_with_transform(a);
    let kernel_cols: Vec<usize> = (pivots.len()..a.cols()).collect();
    Lattice::from_int_basis(a.cols(), v.select_cols(&kernel_cols))
        .expect("kernel columns of a unimodular matrix are independent")
}

/// Solves `a x = b` over the integers; `None` when no integer solution
/// exists. Free coordinates are set to zero.
pub fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), b.len());
    let (h, v, pivots) = column_hermite_with_transform(a);
    let mut y = alloc::vec![BigInt::zero(); a.cols()];
    for (k, &r) in pivots.iter().enumerate() {
        let mut acc = b[r].clone();
        for j in 0..k {
            acc -= &h[(r, j)] * &y[j];
        }
        let (q, rem) = acc.div_rem(&h[(r, k)]);
        if !rem.is_zero() {
            return None;
        }
        y[k] = q;
    }
    // Rows without a pivot must already agree.
    if h.mul_vec(&y).as_slice() != b {
        return None;
    }
    Some(v.mul_vec(&y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn already_canonical() {
        let a = IntMatrix::from_i64_rows(vec![vec![2, 0], vec![0, 2]]);
        assert_eq!(hermite_normal_form(&a), a);
    }

    #[test]
    fn index_two_sublattice() {
        let a = IntMatrix::from_i64_rows(vec![vec![1, 1], vec![1, -1]]);
        let h = hermite_normal_form(&a);
        assert_eq!(h, IntMatrix::from_i64_rows(vec![vec![1, 0], vec![1, 2]]));
        assert_eq!(h.det().abs(), BigInt::from(2));
    }

    #[test]
    fn zero_matrix_has_empty_basis() {
        let a = IntMatrix::zeros(3, 2);
        let h = hermite_normal_form(&a);
        assert_eq!(h.cols(), 0);
        assert_eq!(h.rows(), 3);
    }

    #[test]
    fn transform_is_unimodular() {
        let a = IntMatrix::from_i64_rows(vec![vec![4, 6, 2], vec![2, 8, 10]]);
        let (h, v, pivots) = column_hermite_with_transform(&a);
        assert_eq!(a.mul(&v), h);
        assert_eq!(v.det().abs(), BigInt::from(1));
        assert_eq!(pivots.len(), 2);
    }

    #[test]
    fn kernel_of_difference_row() {
        let a = IntMatrix::from_i64_rows(vec![vec![1, -1]]);
        let k = integer_kernel_basis(&a);
        assert_eq!(k.rank(), 1);
        let b = k.canonical_basis().to_integer();
        assert_eq!(b.col(0), vec![BigInt::from(1), BigInt::from(1)]);
    }

    #[test]
    fn kernel_of_cyclic_triangle_incidence() {
        // Incidence of the 3-cycle oriented 0 -> 1 -> 2 -> 0.
        let a = IntMatrix::from_i64_rows(vec![vec![-1, 0, 1], vec![1, -1, 0], vec![0, 1, -1]]);
        let k = integer_kernel_basis(&a);
        assert_eq!(k.rank(), 1);
        let b = k.canonical_basis().to_integer();
        assert_eq!(
            b.col(0),
            vec![BigInt::from(1), BigInt::from(1), BigInt::from(1)]
        );
    }

    #[test]
    fn kernel_of_invertible_is_empty() {
        let a = IntMatrix::from_i64_rows(vec![vec![2, 1], vec![1, 1]]);
        assert_eq!(integer_kernel_basis(&a).rank(), 0);
    }

    #[test]
    fn integer_solve_roundtrip() {
        let a = IntMatrix::from_i64_rows(vec![vec![2, 3, 1], vec![0, 1, 4]]);
        let b = vec![BigInt::from(7), BigInt::from(9)];
        let x = solve_integer(&a, &b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
    }

    #[test]
    fn integer_solve_detects_nonintegral() {
        // 2x = 1 has no integer solution.
        let a = IntMatrix::from_i64_rows(vec![vec![2]]);
        assert!(solve_integer(&a, &[BigInt::from(1)]).is_none());
        assert!(solve_integer(&a, &[BigInt::from(4)]).is_some());
    }

    #[test]
    fn integer_solve_detects_inconsistent() {
        let a = IntMatrix::from_i64_rows(vec![vec![1, 1], vec![1, 1]]);
        assert!(solve_integer(&a, &[BigInt::from(1), BigInt::from(2)]).is_none());
    }
}
