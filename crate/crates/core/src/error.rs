use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },
    #[error("point has {got} coordinates, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not univariate")]
    NotUnivariate,
    #[error("variable index {0} out of range")]
    InvalidIndex(usize),
    #[error("variable index {0} repeated")]
    RepeatedIndex(usize),
    #[error("group size must be at least 1")]
    EmptyGroup,
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid subgroup nesting: {0}")]
    InvalidNesting(String),
    #[error("invalid generator set: {0}")]
    InvalidGenerators(String),
    #[error("dihedral order {0} is degenerate (need n >= 3)")]
    DegenerateDihedral(usize),
    #[error("formal sign undefined: {0}")]
    FormalSignUndefined(String),
    #[error("invalid orbit datum: {0}")]
    InvalidDatum(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
