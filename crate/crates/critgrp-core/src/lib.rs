//! Critical groups (Jacobians) of finite multigraphs and regular matroids,
//! computed with exact arbitrary-precision arithmetic.
//!
//! The crate provides three provably equivalent constructions of the group:
//! via the Smith normal form of the reduced Laplacian, via the quotient of
//! the edge lattice by the span of the cycle and cut lattices, and via the
//! dual of the cut lattice under the orthogonal projection onto the cut
//! space. A fourth route enumerates q-reduced divisors directly with Dhar's
//! burning algorithm. Bounded exhaustive searches over small multigraphs and
//! totally unimodular representations check the exponent-2 and exponent-3
//! classification statements.
//!
//! Everything is `no_std` + `alloc`; no floating point is used anywhere.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod classify;
pub mod error;
pub mod graph;
pub mod group;
pub mod jacobian;
pub mod linalg;
pub mod matroid;
pub mod report;
pub mod sandpile;

pub use error::Error;
pub use graph::{Multigraph, Orientation};
pub use group::AbelianGroup;
pub use linalg::{IntMatrix, Lattice, Matrix, RatMatrix, SmithNormalForm};
pub use sandpile::{Divisor, FiringScript};

/// Brute-force size limits shared by the enumeration-flavoured operations.
///
/// The defaults are sized for desk-scale runs; raising them is supported but
/// the algorithms behind them are deliberately naive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caps {
    /// Largest vertex count accepted by [`Multigraph::canonical_form`].
    pub canonical_vertices: usize,
    /// Largest group order for which an addition table is built by
    /// [`sandpile::jacobian_by_reduced_divisors`].
    pub group_order: usize,
    /// Largest `min(rows, cols)` accepted by
    /// [`matroid::is_totally_unimodular`].
    pub tu_dimension: usize,
    /// Largest element count accepted by [`matroid::RegularMatroidRep::circuits`].
    pub circuit_elements: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            canonical_vertices: 8,
            group_order: 512,
            tu_dimension: 6,
            circuit_elements: 12,
        }
    }
}
