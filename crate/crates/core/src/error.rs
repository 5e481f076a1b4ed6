use thiserror::Error;

/// Errors raised by the arithmetic, group, Farey, bound and triangulation layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("continued fraction has no digits")]
    EmptyContinuedFraction,
    #[error("continued fraction digit {index} is {value}; digits after the first must be >= 1")]
    NonPositiveDigit { index: usize, value: String },
    #[error("surd denominator must be nonzero")]
    ZeroDenominator,
    #[error("radicand {0} is a perfect square; the value is rational")]
    PerfectSquare(String),
    #[error("radicand {0} must be positive")]
    NonPositiveRadicand(String),
    #[error("surd expansion exceeded the iteration cap of {0}")]
    IterationCap(usize),
    #[error("matrix determinant is {0}, expected 1")]
    NotUnimodular(String),
    #[error("matrix determinant is {0}, expected +1 or -1")]
    NotInvertible(String),
    #[error("matrix is not Anosov (trace {0})")]
    NotAnosov(String),
    #[error("matrix is +-identity and has no axis")]
    Identity,
    #[error("matrix is elliptic (trace {0}); the word method needs an infinite-order element")]
    Elliptic(String),
    #[error("word is empty")]
    EmptyWord,
    #[error("{0}/{1} is not a valid slope")]
    InvalidSlope(String, String),
    #[error("slopes {0} do not form a Farey triangle")]
    NotFareyTriangle(String),
    #[error("lines have the same centre {0}")]
    SameLine(String),
    #[error("input must be positive")]
    NonPositive,
    #[error("triangles are at tree distance {0}; at least 2 is required")]
    TooClose(usize),
    #[error("invalid arguments: {0}")]
    Precondition(String),
    #[error("Euler number is zero; not realizable as an elliptic manifold")]
    ZeroEulerNumber,
    #[error("invalid gluing table: {0}")]
    InvalidTable(String),
    #[error("slope {0} is not an edge of the boundary torus")]
    NotBoundaryEdge(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
