//! Exact computation of absolute and relative Hochschild homology for an
//! extension of finite-dimensional algebras `B ⊂ A`, the fundamental short
//! nearly exact sequence of Hochschild complexes, and the Jacobi-Zariski long
//! nearly exact sequence together with its gap.

pub mod algebra;
pub mod complexes;
pub mod error;
pub mod exactlin;
pub mod fixtures;
pub mod fundamental;
pub mod jzreport;
pub mod par;
pub mod relbar;
pub mod tensorb;
pub mod torlab;

pub use error::{Error, Result};
