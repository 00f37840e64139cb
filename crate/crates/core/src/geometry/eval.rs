//! The two evaluation modes. Figure formulas are written once against
//! [`Evaluator`] and run either on high-precision reals or on rationals with
//! an approximation context; the two are never mixed within one call.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::babylon::{ApproximationContext, IrrationalSymbol};
use crate::error::{Error, Result};
use crate::numerics::{ExactReal, Precision, Quantity, Rational};

pub trait Scalar:
    Clone
    + Debug
    + Into<Quantity>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn is_negative(&self) -> bool;
}

impl Scalar for Rational {
    fn is_negative(&self) -> bool {
        Rational::is_negative(self)
    }
}

impl Scalar for ExactReal {
    fn is_negative(&self) -> bool {
        ExactReal::is_negative(self)
    }
}

/// How a call was evaluated, recorded alongside its results.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum ModeInfo {
    Exact { precision: Precision },
    Context { context: String },
}

pub trait Evaluator {
    type Value: Scalar;

    fn constant(&self, q: &Rational) -> Self::Value;

    fn symbol(&self, symbol: IrrationalSymbol) -> Result<Self::Value>;

    /// Square root when the mode can express it (always in exact mode; only
    /// for rational squares in context mode).
    fn sqrt(&self, v: &Self::Value) -> Option<Self::Value>;

    fn mode(&self) -> ModeInfo;

    fn precision(&self) -> Option<Precision> {
        None
    }

    fn asin(&self, _v: &Self::Value) -> Result<Self::Value> {
        Err(Error::ExactOnly("arcsine"))
    }

    fn sin(&self, _v: &Self::Value) -> Result<Self::Value> {
        Err(Error::ExactOnly("sine"))
    }

    fn cos(&self, _v: &Self::Value) -> Result<Self::Value> {
        Err(Error::ExactOnly("cosine"))
    }

    /// cot(π/n)
    fn cot_pi_over(&self, n: u32) -> Result<Self::Value>;

    fn int(&self, n: i64) -> Self::Value {
        self.constant(&Rational::integer(n))
    }

    fn frac(&self, n: i64, d: i64) -> Self::Value {
        self.constant(&Rational::frac(n, d))
    }

    fn is_exact(&self) -> bool {
        self.precision().is_some()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactEval {
    pub precision: Precision,
}

impl ExactEval {
    pub fn new(precision: Precision) -> Self {
        Self { precision }
    }
}

impl Default for ExactEval {
    fn default() -> Self {
        Self::new(Precision::DEFAULT)
    }
}

impl Evaluator for ExactEval {
    type Value = ExactReal;

    fn constant(&self, q: &Rational) -> ExactReal {
        ExactReal::from_rational(q, self.precision)
    }

    fn symbol(&self, symbol: IrrationalSymbol) -> Result<ExactReal> {
        Ok(symbol.exact(self.precision))
    }

    fn sqrt(&self, v: &ExactReal) -> Option<ExactReal> {
        v.sqrt().ok()
    }

    fn mode(&self) -> ModeInfo {
        ModeInfo::Exact {
            precision: self.precision,
        }
    }

    fn precision(&self) -> Option<Precision> {
        Some(self.precision)
    }

    fn asin(&self, v: &ExactReal) -> Result<ExactReal> {
        v.asin()
    }

    fn sin(&self, v: &ExactReal) -> Result<ExactReal> {
        Ok(v.sin())
    }

    fn cos(&self, v: &ExactReal) -> Result<ExactReal> {
        Ok(v.cos())
    }

    fn cot_pi_over(&self, n: u32) -> Result<ExactReal> {
        (ExactReal::pi(self.precision) / ExactReal::from_int(i64::from(n), self.precision)).cot()
    }
}

/// Rational evaluation with surrogates from an approximation context.
#[derive(Debug, Clone, Copy)]
pub struct ContextEval<'a> {
    pub context: &'a ApproximationContext,
}

impl<'a> ContextEval<'a> {
    pub fn new(context: &'a ApproximationContext) -> Self {
        Self { context }
    }
}

impl Evaluator for ContextEval<'_> {
    type Value = Rational;

    fn constant(&self, q: &Rational) -> Rational {
        q.clone()
    }

    fn symbol(&self, symbol: IrrationalSymbol) -> Result<Rational> {
        self.context.get(symbol).cloned()
    }

    fn sqrt(&self, v: &Rational) -> Option<Rational> {
        v.sqrt_exact()
    }

    fn mode(&self) -> ModeInfo {
        ModeInfo::Context {
            context: self.context.name().to_string(),
        }
    }

    /// Only the angles whose cotangent is a surd the context can hold:
    /// cot(π/3) = √3/3, cot(π/4) = 1, cot(π/6) = √3.
    fn cot_pi_over(&self, n: u32) -> Result<Rational> {
        match n {
            3 => Ok(self.symbol(IrrationalSymbol::Sqrt3)? / Rational::integer(3)),
            4 => Ok(Rational::one()),
            6 => self.symbol(IrrationalSymbol::Sqrt3),
            _ => Err(Error::ExactOnly("cot(\u{3c0}/n) for n outside {3, 4, 6}")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_cotangents_match_exact_ones() {
        let ctx = ApproximationContext::standard();
        let c = ContextEval::new(&ctx);
        assert_eq!(c.cot_pi_over(4).unwrap(), Rational::one());
        assert_eq!(c.cot_pi_over(6).unwrap(), Rational::frac(7, 4));
        assert_eq!(c.cot_pi_over(3).unwrap(), Rational::frac(7, 12));
        assert!(c.cot_pi_over(5).is_err());

        let e = ExactEval::default();
        let tol = Rational::frac(1, 1_000_000_000_000_000_000);
        let s3 = e.symbol(IrrationalSymbol::Sqrt3).unwrap();
        assert!(e.cot_pi_over(6).unwrap().rel_eq(&s3, &tol));
        assert!(e.cot_pi_over(3).unwrap().rel_eq(&(s3 / e.int(3)), &tol));
    }

    #[test]
    fn context_mode_has_no_transcendentals() {
        let ctx = ApproximationContext::standard();
        let c = ContextEval::new(&ctx);
        assert_eq!(c.asin(&Rational::frac(1, 2)), Err(Error::ExactOnly("arcsine")));
        assert_eq!(c.sqrt(&Rational::frac(1, 4)), Some(Rational::frac(1, 2)));
        assert_eq!(c.sqrt(&Rational::frac(4, 15)), None);
    }
}
