//! Completing the square for x² + p·x = q.
//!
//! Half the linear coefficient is squared and added to both sides, giving
//! (x + p/2)² = q + (p/2)², so the positive root is √(q + (p/2)²) − p/2.

use super::{ApproximationContext, IrrationalSymbol};
use crate::error::{Error, Result};
use crate::numerics::{ExactReal, Precision, Quantity, Rational};

/// A coefficient of the form c₀ + Σ cᵢ·sᵢ with rational cᵢ and irrational sᵢ.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymbolicValue {
    terms: Vec<(Rational, Option<IrrationalSymbol>)>,
}

impl SymbolicValue {
    pub fn rational(q: Rational) -> Self {
        Self {
            terms: vec![(q, None)],
        }
    }

    /// `coeff · symbol`
    pub fn term(coeff: Rational, symbol: IrrationalSymbol) -> Self {
        Self {
            terms: vec![(coeff, Some(symbol))],
        }
    }

    pub fn plus(mut self, other: SymbolicValue) -> Self {
        self.terms.extend(other.terms);
        self
    }

    /// `Some(q)` when no irrational symbol is involved.
    pub fn as_rational(&self) -> Option<Rational> {
        self.terms.iter().try_fold(Rational::zero(), |acc, (c, s)| match s {
            None => Some(acc + c),
            Some(_) => None,
        })
    }

    pub fn resolve_exact(&self, precision: Precision) -> ExactReal {
        self.terms
            .iter()
            .fold(ExactReal::from_int(0, precision), |acc, (c, s)| {
                let c = ExactReal::from_rational(c, precision);
                acc + match s {
                    None => c,
                    Some(sym) => c * sym.exact(precision),
                }
            })
    }

    pub fn resolve_in(&self, context: &ApproximationContext) -> Result<Rational> {
        self.terms.iter().try_fold(Rational::zero(), |acc, (c, s)| {
            Ok(acc
                + match s {
                    None => c.clone(),
                    Some(sym) => c * context.get(*sym)?,
                })
        })
    }
}

impl From<Rational> for SymbolicValue {
    fn from(q: Rational) -> Self {
        Self::rational(q)
    }
}

/// How √(q + (p/2)²) is obtained.
#[derive(Debug, Clone)]
pub enum RootPolicy<'a> {
    /// High-precision evaluation; stays rational when the discriminant is a
    /// rational square.
    Exact(Precision),
    /// Coefficients are resolved in `context`; the square root is `root`
    /// when supplied, otherwise the discriminant must be a rational square.
    Surrogate {
        context: &'a ApproximationContext,
        root: Option<Rational>,
    },
}

/// Positive root of x² + p·x = q.
pub fn solve_quadratic_takiltum(p: &SymbolicValue, q: &SymbolicValue, policy: &RootPolicy<'_>) -> Result<Quantity> {
    match policy {
        RootPolicy::Exact(precision) => {
            if let (Some(p), Some(q)) = (p.as_rational(), q.as_rational()) {
                let half = &p / Rational::integer(2);
                let disc = q + half.square();
                if disc.is_negative() {
                    return Err(Error::NegativeDiscriminant);
                }
                if let Some(root) = disc.sqrt_exact() {
                    return Ok(Quantity::Rational(root - half));
                }
                let root = ExactReal::from_rational(&disc, *precision).sqrt()?;
                return Ok(Quantity::Real(root - ExactReal::from_rational(&half, *precision)));
            }
            let two = ExactReal::from_int(2, *precision);
            let half = p.resolve_exact(*precision) / two;
            let disc = q.resolve_exact(*precision) + half.square();
            if disc.is_negative() {
                return Err(Error::NegativeDiscriminant);
            }
            Ok(Quantity::Real(disc.sqrt()? - half))
        }
        RootPolicy::Surrogate { context, root } => {
            let half = p.resolve_in(context)? / Rational::integer(2);
            let disc = q.resolve_in(context)? + half.square();
            if disc.is_negative() {
                return Err(Error::NegativeDiscriminant);
            }
            let root = match root {
                Some(r) => r.clone(),
                None => disc.sqrt_exact().ok_or_else(|| {
                    Error::Domain(format!("discriminant {disc} is not a rational square; supply a surrogate root"))
                })?,
            };
            Ok(Quantity::Rational(root - half))
        }
    }
}
