use thiserror::Error;

/// Errors raised by group construction and the verification engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group needs at least one modulus")]
    EmptyModuli,
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("group order overflows u64")]
    OrderOverflow,
    #[error("expected {expected} coordinates, got {got}")]
    CoordArity { expected: usize, got: usize },
    #[error("mismatched groups: {left} vs {right}")]
    MismatchedGroups { left: String, right: String },
    #[error("point set is empty")]
    EmptySet,
    #[error("set does not generate a coordinatewise product subgroup")]
    NotProductForm,
    #[error("cube edge {edge} outside 1..={modulus}")]
    BadCubeEdge { edge: u64, modulus: u64 },
    #[error("dual undefined: {edge} does not divide {modulus}")]
    DualUndefined { edge: u64, modulus: u64 },
    #[error("progression with step {step} and length {count} repeats modulo {modulus}")]
    ProgressionCollision { step: u64, count: u64, modulus: u64 },
    #[error("weight function must be nonnegative")]
    NegativeWeight,
    #[error("tiling level must be nonnegative")]
    NegativeLevel,
    #[error("exponent-count vector has length {got}, expected {expected}")]
    BadCountsLength { expected: u64, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
