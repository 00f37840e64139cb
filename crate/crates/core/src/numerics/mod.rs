//! Exact rationals, sexagesimal numerals and high-precision reals.

mod quantity;
mod rational;
mod real;
mod sexagesimal;

pub use quantity::Quantity;
pub use rational::Rational;
pub use real::{ExactReal, Precision};
pub use sexagesimal::{is_regular, ParseSexagesimalError, RoundingMode, Sexagesimal, BASE, MAX_PLACES};

use crate::error::Result;

pub fn parse_sexagesimal(text: &str) -> Result<Sexagesimal, ParseSexagesimalError> {
    text.parse()
}

pub fn sexagesimal_to_rational(s: &Sexagesimal) -> Rational {
    s.to_rational()
}

pub fn rational_to_sexagesimal(q: &Rational, places: usize, mode: RoundingMode) -> Result<Sexagesimal> {
    Sexagesimal::from_rational(q, places, mode)
}
