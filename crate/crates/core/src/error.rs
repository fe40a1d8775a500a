use thiserror::Error;

/// Rejections raised while building a structure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("carrier must contain at least one element")]
    EmptyCarrier,
    #[error("carrier of size {0} exceeds the supported maximum of 64")]
    CarrierTooLarge(usize),
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("invalid element label `{0}`")]
    InvalidLabel(String),
    #[error("hyperoperation table needs {expected} cells, found {found}")]
    TableShape { expected: usize, found: usize },
    #[error("{x} ∘ {y} is empty")]
    EmptyImage { x: String, y: String },
    #[error("{x} ∘ {y} names an element outside the carrier")]
    OutOfCarrier { x: String, y: String },
    #[error("relation pair outside the carrier")]
    RelationOutOfCarrier,
}

/// Rejections raised by predicates and products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum PredicateError {
    #[error("operand subset must be nonempty")]
    EmptyOperand,
    #[error("argument is defined over a different carrier")]
    CarrierMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradeError {
    #[error("grade {0} lies outside [0, 1]")]
    OutOfRange(String),
    #[error("zero denominator")]
    ZeroDenominator,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("order {0} exceeds the enumeration cap of 4")]
    OrderTooLarge(usize),
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("grid denominator must be at least 1")]
    ZeroGrid,
    #[error("range {start}..{end} exceeds the domain size {total}")]
    RangeOutOfBounds { start: u64, end: u64, total: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("unknown relaxation `{0}`")]
    UnknownRelaxation(String),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
}
