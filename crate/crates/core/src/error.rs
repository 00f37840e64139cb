use thiserror::Error;

use crate::babylon::IrrationalSymbol;

/// Errors raised by the computational modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator must be non-zero")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),
    #[error("invalid decimal literal {0:?}")]
    InvalidDecimal(String),
    #[error("at most {max} sexagesimal places are supported, got {requested}")]
    TooManyPlaces { requested: usize, max: usize },
    #[error("precision must lie in {min}..={max} decimal digits, got {requested}")]
    InvalidPrecision { requested: u32, min: u32, max: u32 },
    #[error("{0}")]
    Domain(String),
    #[error("{what} must be positive")]
    NonPositive { what: &'static str },
    #[error("negative radicand in a\u{b2} - b")]
    NegativeRadicand,
    #[error("negative discriminant q + (p/2)\u{b2}")]
    NegativeDiscriminant,
    #[error("approximation context {context:?} has no surrogate for {symbol}")]
    MissingSymbol {
        context: String,
        symbol: IrrationalSymbol,
    },
    #[error("surrogate for {symbol} must be positive")]
    NonPositiveSurrogate { symbol: IrrationalSymbol },
    #[error("unknown approximation context {0:?}")]
    UnknownContext(String),
    #[error("invalid context JSON: {0}")]
    ContextJson(String),
    #[error("invalid figure: {0}")]
    InvalidFigure(String),
    #[error("{0} is only defined in exact mode")]
    ExactOnly(&'static str),
    #[error("{0} is not defined for this figure")]
    UnsupportedMetric(&'static str),
    #[error("candidate list for {0} is empty")]
    EmptyCandidates(&'static str),
    #[error("unsupported figure id {0:?}")]
    UnsupportedFigureId(String),
    #[error("invalid render request: {0}")]
    InvalidRender(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
