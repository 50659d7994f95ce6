//! Finite abelian groups in invariant-factor form.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg::{smith_normal_form, IntMatrix};

/// A finite abelian group `Z/d_1 + Z/d_2 + ...` with `d_1 | d_2 | ...` and
/// every `d_i >= 2`. The trivial group is the empty list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianGroup {
    factors: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup {
            factors: Vec::new(),
        }
    }

    /// Builds the group from a Smith-normal-form diagonal, dropping factors
    /// equal to one. Panics on zeros: quotients in this crate are finite.
    pub fn from_invariant_diagonal(diag: &[BigInt]) -> Self {
        let one = BigInt::one();
        let factors: Vec<BigInt> = diag
            .iter()
            .map(|d| {
                assert!(!d.is_zero(), "zero invariant factor: quotient is infinite");
                d.abs()
            })
            .filter(|d| d > &one)
            .collect();
        for w in factors.windows(2) {
            debug_assert!(w[1].mod_floor(&w[0]).is_zero(), "broken divisibility chain");
        }
        AbelianGroup { factors }
    }

    pub fn from_u64_factors(factors: &[u64]) -> Self {
        AbelianGroup::from_invariant_diagonal(
            &factors.iter().map(|&d| BigInt::from(d)).collect::<Vec<_>>(),
        )
    }

    /// Cyclic group of order `n` (trivial when `n == 1`).
    pub fn cyclic(n: u64) -> Self {
        assert!(n >= 1);
        if n == 1 {
            AbelianGroup::trivial()
        } else {
            AbelianGroup::from_u64_factors(&[n])
        }
    }

    pub fn factors(&self) -> &[BigInt] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Product of the invariant factors.
    pub fn order(&self) -> BigInt {
        self.factors.iter().fold(BigInt::one(), |acc, d| acc * d)
    }

    /// Largest invariant factor; 1 for the trivial group.
    pub fn exponent(&self) -> BigInt {
        self.factors.last().cloned().unwrap_or_else(BigInt::one)
    }

    /// Invariant-factor form of the direct sum, computed as the Smith normal
    /// form of the block diagonal of both factor lists (no factorization of
    /// the orders needed).
    pub fn direct_sum(&self, other: &Self) -> Self {
        let all: Vec<BigInt> = self
            .factors
            .iter()
            .chain(other.factors.iter())
            .cloned()
            .collect();
        if all.is_empty() {
            return AbelianGroup::trivial();
        }
        let n = all.len();
        let diag = IntMatrix::from_fn(n, n, |i, j| {
            if i == j {
                all[i].clone()
            } else {
                BigInt::zero()
            }
        });
        let snf = smith_normal_form(&diag);
        AbelianGroup::from_invariant_diagonal(&snf.invariant_factors)
    }

    /// Recovers the invariant factors of a finite abelian group presented by
    /// its addition table. `table[a][b]` is the index of `a + b`; `identity`
    /// is the index of the neutral element.
    ///
    /// Repeatedly splits off a cyclic summand generated by an element of
    /// maximal order and recurses on the quotient.
    pub fn from_addition_table(table: &[Vec<usize>], identity: usize) -> Self {
        let mut factors_desc: Vec<u64> = Vec::new();
        let mut table: Vec<Vec<usize>> = table.to_vec();
        let mut identity = identity;

        while table.len() > 1 {
            let n = table.len();
            // Element of maximal order.
            let order_of = |a: usize, table: &[Vec<usize>]| -> u64 {
                let mut x = a;
                let mut ord = 1u64;
                while x != identity {
                    x = table[x][a];
                    ord += 1;
                }
                ord
            };
            let (gen, max_order) = (0..n)
                .map(|a| (a, order_of(a, &table)))
                .max_by_key(|&(_, o)| o)
                .expect("nonempty table");
            factors_desc.push(max_order);

            // Cosets of <gen>: orbit of repeatedly adding gen.
            let mut rep = vec![usize::MAX; n];
            let mut reps: Vec<usize> = Vec::new();
            for start in 0..n {
                if rep[start] != usize::MAX {
                    continue;
                }
                let id = reps.len();
                reps.push(start);
                let mut x = start;
                loop {
                    rep[x] = id;
                    x = table[x][gen];
                    if x == start {
                        break;
                    }
                }
            }
            let quotient: Vec<Vec<usize>> = reps
                .iter()
                .map(|&a| reps.iter().map(|&b| rep[table[a][b]]).collect())
                .collect();
            identity = rep[identity];
            table = quotient;
        }

        // Built from the largest factor down; the chain condition is a
        // consequence of splitting off maximal-order summands.
        factors_desc.reverse();
        for w in factors_desc.windows(2) {
            assert!(w[1] % w[0] == 0, "table is not a finite abelian group");
        }
        AbelianGroup::from_u64_factors(&factors_desc)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "trivial");
        }
        for (i, d) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "Z/{d}")?;
        }
        Ok(())
    }
}
