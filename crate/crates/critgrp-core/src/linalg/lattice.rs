//! Lattices given by explicit bases, and invariant factors of finite
//! lattice quotients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::hermite::hermite_normal_form;
use super::matrix::{IntMatrix, RatMatrix};
use super::smith::smith_normal_form;
use crate::error::Error;
use crate::group::AbelianGroup;

/// A full-column-rank basis of a sublattice of `Q^ambient`.
///
/// The basis is kept exactly as constructed; [`Lattice::canonical_basis`]
/// produces the unique column Hermite normal form (rational bases are scaled
/// by the least common denominator, reduced over the integers, and scaled
/// back), so two lattices are equal iff their canonical bases are equal.
#[derive(Debug, Clone)]
pub struct Lattice {
    ambient: usize,
    basis: RatMatrix,
}

impl Lattice {
    /// Wraps an integer basis; fails if the columns are dependent.
    pub fn from_int_basis(ambient: usize, basis: IntMatrix) -> Result<Self, Error> {
        Lattice::from_rat_basis(ambient, basis.to_rational())
    }

    /// Wraps a rational basis; fails if the columns are dependent.
    pub fn from_rat_basis(ambient: usize, basis: RatMatrix) -> Result<Self, Error> {
        assert_eq!(
            basis.rows(),
            ambient,
            "basis rows must match ambient dimension"
        );
        if basis.rank() != basis.cols() {
            return Err(Error::DependentColumns);
        }
        Ok(Lattice { ambient, basis })
    }

    /// Lattice generated by a (possibly dependent) set of rational columns;
    /// the stored basis is already canonical.
    pub fn from_rat_generators(ambient: usize, generators: &RatMatrix) -> Self {
        assert_eq!(generators.rows(), ambient);
        let basis = canonical_rational_hnf(generators);
        Lattice { ambient, basis }
    }

    /// Lattice generated by a set of integer columns.
    pub fn from_int_generators(ambient: usize, generators: &IntMatrix) -> Self {
        Lattice::from_rat_generators(ambient, &generators.to_rational())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    /// The basis as constructed (fundamental cycles, incidence rows, ...).
    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    /// Unique Hermite-normal-form basis of this lattice.
    pub fn canonical_basis(&self) -> RatMatrix {
        canonical_rational_hnf(&self.basis)
    }

    /// Membership test: `v` is an integer combination of the basis.
    pub fn contains(&self, v: &[BigRational]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let rhs = RatMatrix::from_cols(alloc::vec![v.to_vec()]);
        match self.basis.solve_cols(&rhs) {
            Some(x) => x.is_integral(),
            None => false,
        }
    }
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.canonical_basis() == other.canonical_basis()
    }
}

impl Eq for Lattice {}

/// Scales away denominators, runs the integer column HNF, and scales back.
/// The least common denominator is an invariant of the lattice, so the
/// result does not depend on the presented generators.
fn canonical_rational_hnf(generators: &RatMatrix) -> RatMatrix {
    let mut lcm = BigInt::one();
    for i in 0..generators.rows() {
        for j in 0..generators.cols() {
            lcm = lcm.lcm(generators[(i, j)].denom());
        }
    }
    let scaled = generators.map(|x| {
        let v = x * BigRational::from_integer(lcm.clone());
        debug_assert!(v.is_integer());
        v.to_integer()
    });
    let h = hermite_normal_form(&scaled);
    let back = BigRational::new(BigInt::one(), lcm);
    h.map(|x| BigRational::from_integer(x.clone()) * &back)
}

/// Invariant factors (those greater than one) of `super / sub`.
///
/// Both lattices must have the same full rank inside the same subspace and
/// `sub` must be contained in `super`; equivalently the change-of-basis
/// matrix expressing `sub`'s basis in `super`'s coordinates must be square
/// and integral. The quotient order is the absolute determinant of that
/// matrix.
pub fn lattice_quotient_invariants(
    sub: &Lattice,
    superlattice: &Lattice,
) -> Result<AbelianGroup, Error> {
    if sub.ambient != superlattice.ambient {
        return Err(Error::LengthMismatch {
            expected: superlattice.ambient,
            got: sub.ambient,
        });
    }
    if sub.rank() != superlattice.rank() {
        return Err(Error::RankMismatch {
            left: sub.rank(),
            right: superlattice.rank(),
        });
    }
    let coords = superlattice
        .basis
        .solve_cols(&sub.basis)
        .ok_or(Error::NotSublattice)?;
    if !coords.is_integral() {
        return Err(Error::NotSublattice);
    }
    let change = coords.to_integer();
    let snf = smith_normal_form(&change);
    if snf.invariant_factors.iter().any(Zero::is_zero) {
        // Cannot happen for a full-column-rank `sub`; treat as a rank error.
        return Err(Error::RankMismatch {
            left: sub.rank(),
            right: superlattice.rank(),
        });
    }
    Ok(AbelianGroup::from_invariant_diagonal(
        &snf.invariant_factors,
    ))
}

/// Order of `super / sub` as the absolute determinant of the change of
/// basis; used as a cross-check against the invariant-factor product.
pub fn lattice_quotient_order(sub: &Lattice, superlattice: &Lattice) -> Result<BigInt, Error> {
    if sub.rank() != superlattice.rank() {
        return Err(Error::RankMismatch {
            left: sub.rank(),
            right: superlattice.rank(),
        });
    }
    let coords = superlattice
        .basis
        .solve_cols(&sub.basis)
        .ok_or(Error::NotSublattice)?;
    if !coords.is_integral() {
        return Err(Error::NotSublattice);
    }
    Ok(coords.to_integer().det().abs())
}
