use thiserror::Error;

/// Errors raised by the library. Refusals of a drop set are not errors; see [`crate::b1::Choice`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("nonzero constant term")]
    ConstantTerm,
    #[error("variable x{index} out of range for n = {n}")]
    VariableOutOfRange { index: usize, n: usize },
    #[error("all terms cancel")]
    ZeroPolynomial,
    #[error("empty support")]
    EmptySupport,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("ambient dimension {0} outside the supported range 1..={1}")]
    DimensionCap(usize, usize),
    #[error("negative entry in a weight vector")]
    NegativeEntry,
    #[error("invalid half-space: {0}")]
    InvalidHalfSpace(String),
    #[error("object does not belong to this structure")]
    NotInStructure,
    #[error("prime {0} is smaller than 3")]
    PrimeTooSmall(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} divides a coefficient denominator")]
    PrimeDividesDenominator(u64),
    #[error("no configured prime is usable for this face")]
    NoUsablePrime,
    #[error("torus enumeration of {points} points exceeds the budget of {budget}")]
    BudgetExceeded { points: u128, budget: u64 },
    #[error("facet {0} is not a B1-facet")]
    NotB1(usize),
    #[error("facet {0} has level 0")]
    ZeroLevel(usize),
    #[error("facet {0} lies in a translate of a coordinate hyperplane")]
    CoordinateFacet(usize),
    #[error("facet index {0} out of range")]
    FacetIndex(usize),
    #[error("no facet with normal {0:?}")]
    UnknownNormal(Vec<i64>),
    #[error("fan lacks the standard ray e{0}")]
    MissingStandardRay(usize),
    #[error("negative exponent in the transform on ray {ray}")]
    NegativeExponent { ray: usize },
    #[error("invalid stratum: {0}")]
    InvalidStratum(String),
    #[error("integer overflow: {0}")]
    Overflow(String),
    #[error("invalid drop set: {0}")]
    InvalidBSet(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
