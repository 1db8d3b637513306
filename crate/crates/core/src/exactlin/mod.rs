//! Exact linear algebra over the rationals and prime fields.

mod echelon;
mod matrix;
mod quotient;
mod scalar;
mod sparse;

pub use echelon::{kernel_basis, kernel_with_free_columns, rank, rank_of, Basis, Echelon, Subspace};
pub use matrix::Matrix;
pub use quotient::{induced_map_with, induced_on_quotient, make_quotient, QuotientSpace};
pub use scalar::{Field, Rational, Scalar};
pub use sparse::SparseVec;
