//! Error type shared by all modules.

use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The operation requires a connected graph.
    Disconnected,
    /// The graph has fewer vertices than the operation needs.
    InsufficientVertices { needed: usize, got: usize },
    /// A vertex index is not in `0..vertex_count`.
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    /// An edge joins a vertex to itself.
    SelfLoop { vertex: usize },
    /// An orientation does not match the edge it claims to orient.
    OrientationMismatch { edge: usize },
    /// A vertex-indexed vector has the wrong length.
    LengthMismatch { expected: usize, got: usize },
    /// Dhar's algorithm requires the divisor to be nonnegative away from the
    /// base vertex.
    NegativeOutsideBase { vertex: usize },
    /// A brute-force size limit was exceeded.
    CapExceeded {
        what: &'static str,
        cap: usize,
        needed: usize,
    },
    /// The claimed sublattice is not contained in the claimed superlattice.
    NotSublattice,
    /// Two lattices that must have equal rank do not.
    RankMismatch { left: usize, right: usize },
    /// A lattice basis has linearly dependent columns.
    DependentColumns,
    /// A matroid representation entry is outside {-1, 0, 1}.
    EntryOutOfRange { row: usize, col: usize },
    /// The matrix is not totally unimodular.
    NotTotallyUnimodular,
    /// The classification search does not support this exponent bound.
    UnsupportedExponent { k: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Disconnected => write!(f, "graph is not connected"),
            Error::InsufficientVertices { needed, got } => {
                write!(f, "need at least {needed} vertices, got {got}")
            }
            Error::VertexOutOfRange {
                vertex,
                vertex_count,
            } => write!(
                f,
                "vertex index {vertex} out of range for {vertex_count} vertices"
            ),
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::OrientationMismatch { edge } => {
                write!(f, "orientation does not match edge {edge}")
            }
            Error::LengthMismatch { expected, got } => {
                write!(f, "expected a vector of length {expected}, got {got}")
            }
            Error::NegativeOutsideBase { vertex } => {
                write!(f, "divisor is negative at non-base vertex {vertex}")
            }
            Error::CapExceeded { what, cap, needed } => {
                write!(f, "{what} cap exceeded: limit {cap}, needed {needed}")
            }
            Error::NotSublattice => {
                write!(f, "first lattice is not a sublattice of the second")
            }
            Error::RankMismatch { left, right } => {
                write!(f, "lattice ranks differ: {left} vs {right}")
            }
            Error::DependentColumns => write!(f, "basis columns are linearly dependent"),
            Error::EntryOutOfRange { row, col } => {
                write!(f, "entry at ({row}, {col}) is outside {{-1, 0, 1}}")
            }
            Error::NotTotallyUnimodular => write!(f, "matrix is not totally unimodular"),
            Error::UnsupportedExponent { k } => {
                write!(f, "classification for exponent bound {k} is not supported")
            }
        }
    }
}

impl core::error::Error for Error {}
