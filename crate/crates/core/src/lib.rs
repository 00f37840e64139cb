//! Areas and dimensions of regular polyarcs, Babylonian approximation
//! arithmetic, and sexagesimal numerals, used to recompute the circular-figure
//! constants of the Susa Mathematical Tablet No. 3.
//!
//! Every figure can be evaluated in two explicit modes: [`geometry::ExactEval`]
//! (high-precision reals) and [`geometry::ContextEval`] (pure rational
//! arithmetic with surrogates such as π ≈ 3 and √3 ≈ 7/4).

pub mod babylon;
pub mod error;
pub mod geometry;
pub mod numerics;
pub mod render;
pub mod tablet;

pub use error::{Error, Result};
pub use numerics::{ExactReal, Precision, Quantity, Rational, RoundingMode, Sexagesimal};
