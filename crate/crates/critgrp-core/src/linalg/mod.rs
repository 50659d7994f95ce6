//! Exact dense linear algebra over the integers and rationals: Smith and
//! Hermite normal forms, saturated integer kernels, orthogonal projections
//! onto row spaces, and invariant factors of lattice quotients.

mod hermite;
mod lattice;
mod matrix;
mod smith;

pub use hermite::{
    column_hermite_with_transform, hermite_normal_form, integer_kernel_basis, solve_integer,
};
pub use lattice::{lattice_quotient_invariants, lattice_quotient_order, Lattice};
pub use matrix::{row_space_projection, IntMatrix, Matrix, RatMatrix};
pub use smith::{smith_normal_form, SmithNormalForm};
