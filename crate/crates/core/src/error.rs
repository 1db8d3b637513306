use thiserror::Error;

/// Errors raised anywhere in the pipeline. Validation failures carry a
/// human-readable witness.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("map is not well defined on the quotient: {0}")]
    WellDefinednessViolation(String),
    #[error("multiplication is not associative on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("declared unit is not a two-sided identity on basis element {0}")]
    NotUnital(usize),
    #[error("algebra is infinite dimensional: admissible path of length {0} exists")]
    InfiniteDimensional(usize),
    #[error("subalgebra is not closed under multiplication: product of generators {0} and {1}")]
    NotClosed(usize, usize),
    #[error("subalgebra does not contain the unit")]
    UnitNotContained,
    #[error("subalgebra generators are linearly dependent (column {0})")]
    DependentGenerators(usize),
    #[error("bimodule axiom fails: {0}")]
    NotABimodule(String),
    #[error("module axiom fails: {0}")]
    NotAModule(String),
    #[error("not a chain complex: {0}")]
    NotAComplex(String),
    #[error("not a chain map: {0}")]
    NotAChainMap(String),
    #[error("not a subcomplex in degree {degree}: {message}")]
    NotSubcomplex { degree: usize, message: String },
    #[error("degree {degree} is outside the reliable range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("degree bound {0} is too small (need at least 3)")]
    DegreeBoundTooSmall(usize),
    #[error("the given map is not a section of the projection A -> A/B")]
    NotASection,
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("input error at {field}: {message}")]
    Input { field: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
