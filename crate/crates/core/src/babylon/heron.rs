use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::Rational;

/// Exact iterates of x ↦ ½(x + N/x), seed included.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeronTrace {
    pub radicand: Rational,
    pub seed: Rational,
    pub iterates: Vec<Rational>,
}

impl HeronTrace {
    /// The `k`-th iterate; `iterate(0)` is the seed.
    pub fn iterate(&self, k: usize) -> Option<&Rational> {
        self.iterates.get(k)
    }

    pub fn last(&self) -> &Rational {
        self.iterates.last().expect("trace always holds the seed")
    }
}

/// One Heron step. `x` must be non-zero.
pub fn heron_step(radicand: &Rational, x: &Rational) -> Rational {
    (x + radicand / x) / Rational::integer(2)
}

pub fn heron_sequence(radicand: &Rational, seed: &Rational, steps: usize) -> Result<HeronTrace> {
    if !radicand.is_positive() {
        return Err(Error::NonPositive { what: "radicand" });
    }
    if !seed.is_positive() {
        return Err(Error::NonPositive { what: "seed" });
    }
    let mut iterates = Vec::with_capacity(steps + 1);
    iterates.push(seed.clone());
    for _ in 0..steps {
        let next = heron_step(radicand, iterates.last().expect("non-empty"));
        iterates.push(next);
    }
    Ok(HeronTrace {
        radicand: radicand.clone(),
        seed: seed.clone(),
        iterates,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SurdSign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl std::str::FromStr for SurdSign {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "+" | "plus" => Ok(Self::Plus),
            "-" | "minus" => Ok(Self::Minus),
            other => Err(format!("sign must be + or -, got {other:?}")),
        }
    }
}

/// √(a² ± b) ≈ a ± b/(2a)
pub fn surd_linear_approx(a: &Rational, b: &Rational, sign: SurdSign) -> Result<Rational> {
    if !a.is_positive() {
        return Err(Error::NonPositive { what: "a" });
    }
    if b.is_negative() {
        return Err(Error::Domain("b must be non-negative".into()));
    }
    let correction = b / (a * Rational::integer(2));
    match sign {
        SurdSign::Plus => Ok(a + correction),
        SurdSign::Minus => {
            if (a.square() - b).is_negative() {
                return Err(Error::NegativeRadicand);
            }
            Ok(a - correction)
        }
    }
}
