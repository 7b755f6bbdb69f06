use thiserror::Error;

use crate::curve::GridPoint;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed chain-code header: {0}")]
    MalformedHeader(String),
    #[error("invalid chain-code symbol '{0}' (expected one of 0123)")]
    InvalidCodeSymbol(char),
    #[error("closed curve has nonzero net displacement ({dx}, {dy})")]
    ClosedCurveDisplacement { dx: i64, dy: i64 },
    #[error("degenerate curve: {0}")]
    DegenerateCurve(&'static str),
    #[error("curve index {0} out of range")]
    IndexOutOfRange(usize),

    #[error("slope {a}/{b} is not a reduced fraction in [0,1]")]
    InvalidSlope { a: i64, b: i64 },
    #[error("circle radius must be at least 2, got {0}")]
    RadiusTooSmall(i64),

    #[error("points {0:?} and {1:?} are not 4-adjacent")]
    NotAdjacent(GridPoint, GridPoint),
    #[error("need at least two points, got {0}")]
    TooFewPoints(usize),

    #[error("invalid continued-fraction coefficients: {0}")]
    InvalidCoefficients(String),
    #[error("operation undefined for the flat slope [0]: {0}")]
    FlatSlope(&'static str),
    #[error("mediant requires ancestors with unit determinant, got {0}")]
    MediantDeterminant(i64),
    #[error("fraction {a}/{b} is not a Stern-Brocot node in (0,1]")]
    NotATreeNode { a: i64, b: i64 },

    #[error("slope evolution undefined: {0}")]
    EvolutionUndefined(String),
    #[error("point is not weakly exterior to the segment")]
    NotWeaklyExterior,
    #[error("no leaning point found for the given characteristics")]
    NoLeaningPoint,

    #[error("slope bounds undefined: {0}")]
    BoundsUndefined(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
