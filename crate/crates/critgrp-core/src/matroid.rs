//! Regular matroids presented by totally unimodular matrices: validation,
//! circuits, connectivity, Jacobians, and the projection-entry structure
//! checks behind the exponent-2 classification and the exponent-3
//! diagnostics.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::group::AbelianGroup;
use crate::jacobian::{jacobian_dual_cut, projection_and_dual};
use crate::linalg::{IntMatrix, RatMatrix};
use crate::report::{Condition, StructureReport};

/// A regular matroid represented by a matrix with entries in {-1, 0, 1};
/// the ground set is the column set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularMatroidRep {
    matrix: IntMatrix,
}

/// Brute-force total unimodularity: every square submatrix has determinant
/// -1, 0, or 1. Refuses matrices whose smaller dimension exceeds the cap;
/// callers that certify their input can construct the representation with
/// [`RegularMatroidRep::new_unverified`] instead.
pub fn is_totally_unimodular(a: &IntMatrix, cap: usize) -> Result<bool, Error> {
    let small = a.rows().min(a.cols());
    if small > cap {
        return Err(Error::CapExceeded {
            what: "total unimodularity dimension",
            cap,
            needed: small,
        });
    }
    let one = BigInt::one();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if a[(i, j)].abs() > one {
                return Ok(false);
            }
        }
    }
    for size in 2..=small {
        let row_sets = combinations(a.rows(), size);
        let col_sets = combinations(a.cols(), size);
        for rs in &row_sets {
            let sub_rows = a.select_rows(rs);
            for cs in &col_sets {
                if sub_rows.select_cols(cs).det().abs() > one {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

impl RegularMatroidRep {
    /// Validates entries and verifies total unimodularity under the cap.
    pub fn new(matrix: IntMatrix, tu_cap: usize) -> Result<Self, Error> {
        let rep = RegularMatroidRep::new_unverified(matrix)?;
        if !is_totally_unimodular(&rep.matrix, tu_cap)? {
            return Err(Error::NotTotallyUnimodular);
        }
        Ok(rep)
    }

    /// Validates entries only; the caller vouches for total unimodularity.
    pub fn new_unverified(matrix: IntMatrix) -> Result<Self, Error> {
        let one = BigInt::one();
        for i in 0..matrix.rows() {
            for j in 0..matrix.cols() {
                if matrix[(i, j)].abs() > one {
                    return Err(Error::EntryOutOfRange { row: i, col: j });
                }
            }
        }
        Ok(RegularMatroidRep { matrix })
    }

    pub fn from_i64_rows(rows: Vec<Vec<i64>>) -> Result<Self, Error> {
        RegularMatroidRep::new_unverified(IntMatrix::from_i64_rows(rows))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Number of ground-set elements (columns).
    pub fn element_count(&self) -> usize {
        self.matrix.cols()
    }

    /// A loop is a zero column.
    pub fn has_loop(&self) -> bool {
        (0..self.matrix.cols()).any(|j| self.matrix.col(j).iter().all(Zero::is_zero))
    }

    fn column_set_rank(&self, cols: &[usize]) -> usize {
        self.matrix.select_cols(cols).to_rational().rank()
    }

    /// All circuits: inclusion-minimal linearly dependent column sets,
    /// enumerated by increasing size with supersets of found circuits
    /// pruned. Errors above the element cap.
    pub fn circuits(&self, cap: usize) -> Result<Vec<Vec<usize>>, Error> {
        let n = self.element_count();
        if n > cap {
            return Err(Error::CapExceeded {
                what: "circuit enumeration element count",
                cap,
                needed: n,
            });
        }
        let mut circuits: Vec<Vec<usize>> = Vec::new();
        for size in 1..=n {
            for subset in combinations(n, size) {
                if circuits
                    .iter()
                    .any(|c| c.iter().all(|e| subset.contains(e)))
                {
                    continue; // contains a smaller circuit
                }
                if self.column_set_rank(&subset) < subset.len() {
                    circuits.push(subset);
                }
            }
        }
        Ok(circuits)
    }

    /// Connectivity in the matroid sense: at most one element, or every
    /// pair of distinct elements lies in a common circuit.
    pub fn is_connected(&self, cap: usize) -> Result<bool, Error> {
        let n = self.element_count();
        if n <= 1 {
            return Ok(true);
        }
        let circuits = self.circuits(cap)?;
        let mut covered = vec![vec![false; n]; n];
        for c in &circuits {
            for (i, &a) in c.iter().enumerate() {
                for &b in &c[i + 1..] {
                    covered[a][b] = true;
                    covered[b][a] = true;
                }
            }
        }
        Ok((0..n).all(|a| (a + 1..n).all(|b| covered[a][b])))
    }

    /// Number of bases (maximal independent column sets), by enumeration.
    pub fn bases_count(&self, cap: usize) -> Result<BigInt, Error> {
        let n = self.element_count();
        if n > cap {
            return Err(Error::CapExceeded {
                what: "basis enumeration element count",
                cap,
                needed: n,
            });
        }
        let rank = self.matrix.to_rational().rank();
        let mut count = BigInt::zero();
        for subset in combinations(n, rank) {
            if self.column_set_rank(&subset) == rank {
                count += BigInt::one();
            }
        }
        Ok(count)
    }

    /// Jacobian of the matroid: the dual-cut quotient of the representation.
    pub fn jacobian(&self) -> Result<AbelianGroup, Error> {
        jacobian_dual_cut(&self.matrix)
    }
}

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn nonzero_in_row(p: &RatMatrix, i: usize) -> Vec<usize> {
    (0..p.cols()).filter(|&j| !p[(i, j)].is_zero()).collect()
}

/// Structure of the projection matrix when the Jacobian has exponent at
/// most two: entries in {-1/2, 0, 1/2}, diagonal 1/2, exactly two nonzero
/// entries per row, symmetry, the paired columns annihilated by the
/// representation (so each pair is a circuit), and at most two elements in
/// total. Applicable to connected loopless representations with at least
/// two elements; single-element matroids of exponent one pass trivially.
pub fn exponent2_structure_check(
    m: &RegularMatroidRep,
    circuit_cap: usize,
) -> Result<StructureReport, Error> {
    if m.has_loop() {
        return Ok(StructureReport::not_applicable());
    }
    let exponent = m.jacobian()?.exponent();
    if exponent > BigInt::from(2) {
        return Ok(StructureReport::not_applicable());
    }
    if !m.is_connected(circuit_cap)? {
        return Ok(StructureReport::not_applicable());
    }
    let n = m.element_count();
    if n < 2 {
        return Ok(StructureReport {
            applicable: true,
            conditions: vec![Condition::new(
                "element-count-at-most-two",
                true,
                format!("{n} element(s): passes trivially"),
            )],
        });
    }

    let p = projection_and_dual(&m.matrix).projection;
    let half = rational(1, 2);
    let allowed = [rational(-1, 2), rational(0, 1), half.clone()];

    let mut conditions = Vec::new();
    let entries_ok = (0..n).all(|i| (0..n).all(|j| allowed.contains(&p[(i, j)])));
    conditions.push(Condition::new(
        "entries-in-zero-or-half",
        entries_ok,
        String::new(),
    ));
    let diag_ok = (0..n).all(|i| p[(i, i)] == half);
    conditions.push(Condition::new("diagonal-one-half", diag_ok, String::new()));
    let two_per_row = (0..n).all(|i| nonzero_in_row(&p, i).len() == 2);
    conditions.push(Condition::new(
        "two-nonzero-entries-per-row",
        two_per_row,
        String::new(),
    ));
    conditions.push(Condition::new(
        "projection-symmetric",
        p.is_symmetric(),
        String::new(),
    ));

    // Each row pairs its index with the unique other nonzero column; the
    // signed sum of the paired indicator vectors lies in the kernel of the
    // representation, so the pair is a circuit.
    let mut pairing_ok = true;
    let circuits = m.circuits(circuit_cap)?;
    for i in 0..n {
        let others: Vec<usize> = nonzero_in_row(&p, i)
            .into_iter()
            .filter(|&j| j != i)
            .collect();
        let &[j] = others.as_slice() else {
            pairing_ok = false;
            break;
        };
        let sign = if p[(i, j)] == half { -1 } else { 1 };
        let mut v = vec![BigInt::zero(); n];
        v[i] = BigInt::one();
        v[j] = BigInt::from(sign);
        let killed_by_p = p
            .mul_vec(
                &v.iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .collect::<Vec<_>>(),
            )
            .iter()
            .all(Zero::is_zero);
        let killed_by_rep = m.matrix.mul_vec(&v).iter().all(Zero::is_zero);
        let pair = vec![i.min(j), i.max(j)];
        let is_circuit = circuits.contains(&pair);
        pairing_ok &= killed_by_p && killed_by_rep && is_circuit;
    }
    conditions.push(Condition::new(
        "paired-columns-form-circuit",
        pairing_ok,
        String::new(),
    ));

    conditions.push(Condition::new(
        "element-count-at-most-two",
        n <= 2,
        format!("{n} elements"),
    ));

    Ok(StructureReport {
        applicable: true,
        conditions,
    })
}

/// Diagnostic version of the projection-entry conditions for exponent
/// three: entries in {0, ±1/3, ±2/3}, diagonal in {1/3, 2/3}, exactly three
/// nonzero entries per row and per column, and nonzero off-diagonal entries
/// equal to ±1/3. Reported per condition; no classification is attached.
pub fn exponent3_entry_diagnostics(m: &RegularMatroidRep) -> Result<StructureReport, Error> {
    if m.has_loop() {
        return Ok(StructureReport::not_applicable());
    }
    if m.jacobian()?.exponent() != BigInt::from(3) {
        return Ok(StructureReport::not_applicable());
    }
    let n = m.element_count();
    let p = projection_and_dual(&m.matrix).projection;

    let allowed = [
        rational(0, 1),
        rational(1, 3),
        rational(-1, 3),
        rational(2, 3),
        rational(-2, 3),
    ];
    let diag_allowed = [rational(1, 3), rational(2, 3)];
    let off_allowed = [rational(0, 1), rational(1, 3), rational(-1, 3)];

    let entries_ok = (0..n).all(|i| (0..n).all(|j| allowed.contains(&p[(i, j)])));
    let diag_ok = (0..n).all(|i| diag_allowed.contains(&p[(i, i)]));
    let three_per_row = (0..n).all(|i| nonzero_in_row(&p, i).len() == 3);
    let three_per_col = (0..n).all(|j| (0..n).filter(|&i| !p[(i, j)].is_zero()).count() == 3);
    let off_ok = (0..n).all(|i| (0..n).all(|j| i == j || off_allowed.contains(&p[(i, j)])));

    Ok(StructureReport {
        applicable: true,
        conditions: vec![
            Condition::new("entries-in-zero-or-thirds", entries_ok, String::new()),
            Condition::new("diagonal-in-third-or-two-thirds", diag_ok, String::new()),
            Condition::new(
                "three-nonzero-entries-per-row-and-column",
                three_per_row && three_per_col,
                String::new(),
            ),
            Condition::new("offdiagonal-plus-minus-one-third", off_ok, String::new()),
        ],
    })
}
