use thiserror::Error;

use crate::symkernel::PolyError;

/// Errors raised by the geometric layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("unsupported index {index} for type {kind}")]
    UnsupportedIndex { kind: char, index: u32 },
    #[error("weight out of range: {0}")]
    WeightOutOfRange(String),
    #[error("zero vector")]
    ZeroVector,
    #[error("length mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("tree is not stable: {0}")]
    Unstable(String),
    #[error("parity violation on component {0}")]
    ParityViolation(usize),
    #[error("illegal reduction from {from:?} to {to:?}")]
    IllegalReduction {
        from: (u32, Option<u32>),
        to: (u32, Option<u32>),
    },
    #[error("enumeration too large: n = {n} exceeds cap {cap}")]
    TooLarge { n: u32, cap: u32 },
    #[error("chart index {j} out of range for k = {k}")]
    ChartOutOfRange { k: u32, j: u32 },
    #[error("equation is not quasi-homogeneous: {0}")]
    NotQuasiHomogeneous(String),
    #[error("degenerate specialization: {0}")]
    DegenerateSpecialization(String),
    #[error("illegal target (k, l) = ({k}, {l}) for n = {n}")]
    IllegalTarget { n: u32, k: u32, l: u32 },
}

impl Error {
    /// Variant name, as reported by the command line front-end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Poly(p) => match p {
                PolyError::NotDivisible => "NotDivisible",
                PolyError::NotUnivariate => "NotUnivariate",
                PolyError::ExponentOverflow => "ExponentOverflow",
                PolyError::UnweightedVariable(_) => "UnweightedVariable",
                PolyError::DivisorMeetsInfinity => "DivisorMeetsInfinity",
                PolyError::Parse { .. } => "ParseError",
                PolyError::ZeroDivision => "ZeroDivision",
                PolyError::ZeroPolynomial => "ZeroPolynomial",
            },
            Error::UnsupportedIndex { .. } => "UnsupportedIndex",
            Error::WeightOutOfRange(_) => "WeightOutOfRange",
            Error::ZeroVector => "ZeroVector",
            Error::DimensionMismatch(..) => "DimensionMismatch",
            Error::InvalidInput(_) => "InvalidInput",
            Error::InvalidTree(_) => "InvalidTree",
            Error::Unstable(_) => "Unstable",
            Error::ParityViolation(_) => "ParityViolation",
            Error::IllegalReduction { .. } => "IllegalReduction",
            Error::TooLarge { .. } => "TooLarge",
            Error::ChartOutOfRange { .. } => "ChartOutOfRange",
            Error::NotQuasiHomogeneous(_) => "NotQuasiHomogeneous",
            Error::DegenerateSpecialization(_) => "DegenerateSpecialization",
            Error::IllegalTarget { .. } => "IllegalTarget",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
