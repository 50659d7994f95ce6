//! Dense row-major matrices with exact entries.
//!
//! Two instantiations are used throughout the crate: [`IntMatrix`] over
//! arbitrary-precision integers and [`RatMatrix`] over exact rationals.
//! `num_rational` keeps every rational fully reduced with a positive
//! denominator, so equality of entries is plain structural equality.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<BigRational>;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from rows; panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_cols(cols: Vec<Vec<T>>) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        assert!(cols.iter().all(|col| col.len() == r), "ragged columns");
        Matrix::from_fn(r, c, |i, j| cols[j][i].clone())
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn map<U: Clone>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(&mut f).collect(),
        }
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_cols(&self, keep: &[usize]) -> Self {
        Matrix::from_fn(self.rows, keep.len(), |i, j| self[(i, keep[j])].clone())
    }

    /// Keeps the listed rows, in the given order.
    pub fn select_rows(&self, keep: &[usize]) -> Self {
        Matrix::from_fn(keep.len(), self.cols, |i, j| self[(keep[i], j)].clone())
    }

    /// Concatenates columns of `self` and `other` side by side.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }
}

impl<T: Clone + Zero + One + PartialEq> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + One + PartialEq + Signed,
{
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "dimension mismatch in matrix product"
        );
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self[(i, k)].clone() * other[(k, j)].clone();
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(
            self.cols,
            v.len(),
            "dimension mismatch in matrix-vector product"
        );
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    acc = acc + self[(i, j)].clone() * v[j].clone();
                }
                acc
            })
            .collect()
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() - other[(i, j)].clone()
        })
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl IntMatrix {
    pub fn from_i64_rows(rows: Vec<Vec<i64>>) -> Self {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        )
    }

    pub fn to_rational(&self) -> RatMatrix {
        self.map(|x| BigRational::from_integer(x.clone()))
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                    // Bareiss: division by the previous pivot is exact.
                    m[(i, j)] = num / &prev;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }
}

impl RatMatrix {
    pub fn from_int(numerators: Vec<Vec<i64>>) -> Self {
        Matrix::from_rows(
            numerators
                .into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|x| BigRational::from_integer(BigInt::from(x)))
                        .collect()
                })
                .collect(),
        )
    }

    /// True when every entry has denominator 1.
    pub fn is_integral(&self) -> bool {
        self.data.iter().all(BigRational::is_integer)
    }

    /// Converts to an integer matrix; panics if any entry has a denominator.
    pub fn to_integer(&self) -> IntMatrix {
        self.map(|x| {
            assert!(x.is_integer(), "entry {x} is not an integer");
            x.to_integer()
        })
    }

    /// In-place Gauss-Jordan elimination. Returns the pivot columns; after
    /// the call the matrix is in reduced row echelon form.
    pub fn reduce_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let factor = self[(i, c)].clone();
                    for j in c..self.cols {
                        let v = &self[(i, j)] - &factor * &self[(r, j)];
                        self[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.reduce_in_place().len()
    }

    /// Indices of a maximal linearly independent subset of the rows, found
    /// greedily from the top.
    pub fn independent_rows(&self) -> Vec<usize> {
        self.transpose().independent_cols()
    }

    /// Indices of a maximal linearly independent subset of the columns.
    pub fn independent_cols(&self) -> Vec<usize> {
        let mut m = self.clone();
        m.reduce_in_place()
    }

    /// Exact inverse of a square matrix; panics if singular.
    pub fn inverse(&self) -> RatMatrix {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = self.hstack(&RatMatrix::identity(n));
        let pivots = aug.reduce_in_place();
        assert_eq!(pivots.len(), n, "matrix is singular");
        Matrix::from_fn(n, n, |i, j| aug[(i, n + j)].clone())
    }

    /// Solves `self * X = rhs` exactly. Returns `None` when inconsistent.
    /// When the solution is not unique the free variables are set to zero.
    pub fn solve_cols(&self, rhs: &RatMatrix) -> Option<RatMatrix> {
        assert_eq!(self.rows, rhs.rows);
        let mut aug = self.hstack(rhs);
        let pivots = aug.reduce_in_place();
        // A pivot in the rhs block means an inconsistent system.
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = RatMatrix::zeros(self.cols, rhs.cols);
        for (r, &c) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x[(c, j)] = aug[(r, self.cols + j)].clone();
            }
        }
        // Rows beyond the pivots must have vanished for consistency.
        for r in pivots.len()..aug.rows {
            for j in 0..rhs.cols {
                if !aug[(r, self.cols + j)].is_zero() {
                    return None;
                }
            }
        }
        Some(x)
    }

    /// Orthogonal projection onto the row space, `M^t (M M^t)^{-1} M` for a
    /// row basis `M`. Symmetric, idempotent, exact.
    pub fn row_space_projection(&self) -> RatMatrix {
        let basis_rows = self.independent_rows();
        if basis_rows.is_empty() {
            return RatMatrix::zeros(self.cols, self.cols);
        }
        let m = self.select_rows(&basis_rows);
        let gram = m.mul(&m.transpose());
        m.transpose().mul(&gram.inverse()).mul(&m)
    }
}

/// Orthogonal projection onto the row space of an integer matrix.
///
/// The result `P` satisfies `P^2 = P`, `P^t = P`, `P x = x` for every `x`
/// in the row space and `P z = 0` for every `z` in the kernel of `a`.
pub fn row_space_projection(a: &IntMatrix) -> RatMatrix {
    a.to_rational().row_space_projection()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn det_small() {
        let a = IntMatrix::from_i64_rows(vec![vec![2, 0], vec![0, 3]]);
        assert_eq!(a.det(), BigInt::from(6));
        let b = IntMatrix::from_i64_rows(vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(b.det(), BigInt::zero());
        let c = IntMatrix::from_i64_rows(vec![vec![3, -1, -1], vec![-1, 3, -1], vec![-1, -1, 3]]);
        assert_eq!(c.det(), BigInt::from(16));
        assert_eq!(IntMatrix::zeros(0, 0).det(), BigInt::one());
    }

    #[test]
    fn det_needs_row_swap() {
        let a = IntMatrix::from_i64_rows(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(a.det(), BigInt::from(-1));
    }

    #[test]
    fn solve_and_inverse() {
        let a = RatMatrix::from_int(vec![vec![2, 1], vec![1, 1]]);
        let inv = a.inverse();
        assert_eq!(a.mul(&inv), RatMatrix::identity(2));

        let rhs = RatMatrix::from_int(vec![vec![3], vec![2]]);
        let x = a.solve_cols(&rhs).unwrap();
        assert_eq!(a.mul(&x), rhs);

        // Inconsistent system.
        let b = RatMatrix::from_int(vec![vec![1, 1], vec![1, 1]]);
        let bad = RatMatrix::from_int(vec![vec![1], vec![2]]);
        assert!(b.solve_cols(&bad).is_none());
    }

    #[test]
    fn projection_single_difference_row() {
        // Projection onto span{(1, -1)}.
        let a = IntMatrix::from_i64_rows(vec![vec![1, -1]]);
        let p = row_space_projection(&a);
        assert_eq!(p[(0, 0)], rat(1, 2));
        assert_eq!(p[(0, 1)], rat(-1, 2));
        assert_eq!(p[(1, 0)], rat(-1, 2));
        assert_eq!(p[(1, 1)], rat(1, 2));
    }

    #[test]
    fn projection_identity_rows() {
        let a = IntMatrix::from_i64_rows(vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(row_space_projection(&a), RatMatrix::identity(2));
    }

    #[test]
    fn projection_is_idempotent_and_symmetric() {
        let a = IntMatrix::from_i64_rows(vec![vec![1, 2, 3], vec![2, 4, 5], vec![3, 6, 8]]);
        let p = row_space_projection(&a);
        assert_eq!(p.mul(&p), p);
        assert!(p.is_symmetric());
    }
}
