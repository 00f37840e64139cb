//! High-precision reals for evaluating closed forms such as `6·asin(..) + ..`.
//!
//! Values carry their working precision; arithmetic between two values runs at
//! the larger of the two. The binary working precision includes guard digits
//! so that results are good to the requested number of decimal digits.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, RoundingMode, Sign, Word};
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

const GUARD_DIGITS: u32 = 20;
const ROUNDING: RoundingMode = RoundingMode::ToEven;
const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Working precision in decimal digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Precision(u32);

impl Precision {
    pub const MIN: u32 = 10;
    pub const MAX: u32 = 2000;
    pub const DEFAULT: Precision = Precision(30);

    pub fn new(digits: u32) -> Result<Self> {
        if !(Self::MIN..=Self::MAX).contains(&digits) {
            return Err(Error::InvalidPrecision {
                requested: digits,
                min: Self::MIN,
                max: Self::MAX,
            });
        }
        Ok(Self(digits))
    }

    pub fn digits(self) -> u32 {
        self.0
    }

    fn bits(self) -> usize {
        let bits = (f64::from(self.0 + GUARD_DIGITS) * LOG2_10).ceil() as usize;
        bits.div_ceil(64) * 64
    }
}

impl Default for Precision {
    fn default() -> Self {
        Self::DEFAULT
    }
}

impl fmt::Display for Precision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone)]
pub struct ExactReal {
    value: BigFloat,
    precision: Precision,
}

fn consts() -> Consts {
    Consts::new().expect("astro-float constants cache")
}

fn bigint_to_float(n: &BigInt, bits: usize) -> BigFloat {
    let sign = if n.is_negative() { Sign::Neg } else { Sign::Pos };
    let words: Vec<Word> = n.magnitude().to_u64_digits();
    if words.is_empty() {
        return BigFloat::from_word(0, bits);
    }
    let exponent = (words.len() * 64) as i32;
    let mut f = BigFloat::from_words(&words, sign, exponent);
    f.set_precision(bits, ROUNDING).expect("valid precision");
    f
}

impl ExactReal {
    fn wrap(value: BigFloat, precision: Precision) -> Self {
        Self { value, precision }
    }

    fn bits(&self) -> usize {
        self.precision.bits()
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    pub fn from_rational(q: &Rational, precision: Precision) -> Self {
        let bits = precision.bits();
        let num = bigint_to_float(q.numer(), bits);
        let den = bigint_to_float(q.denom(), bits);
        Self::wrap(num.div(&den, bits, ROUNDING), precision)
    }

    pub fn from_int(n: i64, precision: Precision) -> Self {
        Self::from_rational(&Rational::integer(n), precision)
    }

    pub fn pi(precision: Precision) -> Self {
        let bits = precision.bits();
        Self::wrap(consts().pi(bits, ROUNDING), precision)
    }

    /// Square root of a rational, e.g. `sqrt_of(21)` for √21.
    pub fn sqrt_of(q: &Rational, precision: Precision) -> Result<Self> {
        Self::from_rational(q, precision).sqrt()
    }

    pub fn sqrt(&self) -> Result<Self> {
        if self.is_negative() {
            return Err(Error::Domain("square root of a negative value".into()));
        }
        Ok(Self::wrap(self.value.sqrt(self.bits(), ROUNDING), self.precision))
    }

    pub fn sin(&self) -> Self {
        Self::wrap(self.value.sin(self.bits(), ROUNDING, &mut consts()), self.precision)
    }

    pub fn cos(&self) -> Self {
        Self::wrap(self.value.cos(self.bits(), ROUNDING, &mut consts()), self.precision)
    }

    pub fn asin(&self) -> Result<Self> {
        let one = Self::from_int(1, self.precision);
        if self.abs() > one {
            return Err(Error::Domain("arcsine argument outside [-1, 1]".into()));
        }
        Ok(Self::wrap(self.value.asin(self.bits(), ROUNDING, &mut consts()), self.precision))
    }

    pub fn cot(&self) -> Result<Self> {
        let s = self.sin();
        if s.is_zero() {
            return Err(Error::Domain("cotangent at a multiple of pi".into()));
        }
        Ok(self.cos() / s)
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.value.abs(), self.precision)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.value.is_negative() && !self.value.is_zero()
    }

    /// Re-rounds to another precision.
    pub fn with_precision(&self, precision: Precision) -> Self {
        let mut value = self.value.clone();
        value.set_precision(precision.bits(), ROUNDING).expect("valid precision");
        Self::wrap(value, precision)
    }

    /// The binary floating value as an exact (dyadic) rational.
    pub fn to_rational(&self) -> Rational {
        let Some((words, _, sign, exponent, _)) = self.value.as_raw_parts() else {
            return Rational::zero();
        };
        if self.value.is_zero() {
            return Rational::zero();
        }
        let mantissa = BigUint::from_slice(
            &words
                .iter()
                .flat_map(|w| [(*w & 0xFFFF_FFFF) as u32, (*w >> 32) as u32])
                .collect::<Vec<_>>(),
        );
        let shift = i64::from(exponent) - (words.len() as i64) * 64;
        let magnitude = Rational::from_biguint_parts(sign == Sign::Neg, mantissa, BigUint::from(1u8));
        magnitude * Rational::pow2(shift)
    }

    pub fn to_f64(&self) -> f64 {
        self.to_rational().inner().to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal string with `sig` significant digits, rounded half away from zero.
    pub fn to_significant_string(&self, sig: u32) -> String {
        let q = self.to_rational();
        if q.is_zero() {
            return format!("0.{}", "0".repeat(sig.saturating_sub(1) as usize));
        }
        let magnitude = q.abs().to_f64().log10().floor() as i64;
        let places = (i64::from(sig) - 1 - magnitude).max(0) as usize;
        q.to_decimal_string(places)
    }

    /// Fixed-point decimal with `places` digits after the point.
    pub fn to_decimal_string(&self, places: usize) -> String {
        self.to_rational().to_decimal_string(places)
    }

    /// Parses a decimal literal at the given precision.
    pub fn parse_decimal(text: &str, precision: Precision) -> Result<Self> {
        Ok(Self::from_rational(&Rational::from_decimal_str(text)?, precision))
    }

    /// |self − other| ≤ tol · |other|
    /// Parse at a precision equal to the number of significant digits given,
    /// clamped to the supported range.
    pub fn parse_decimal_inferred(text: &str) -> Result<Self> {
        let mantissa = text.split(['e', 'E']).next().unwrap_or("");
        let digits = mantissa
            .bytes()
            .filter(u8::is_ascii_digit)
            .skip_while(|&b| b == b'0')
            .count();
        let precision = Precision::new((digits as u32).clamp(Precision::MIN, Precision::MAX))?;
        Self::parse_decimal(text, precision)
    }

    pub fn rel_eq(&self, other: &Self, tol: &Rational) -> bool {
        let diff = (self - other).abs().to_rational();
        diff <= tol * &other.abs().to_rational()
    }
}

impl fmt::Display for ExactReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_significant_string(self.precision.digits()))
    }
}

impl fmt::Debug for ExactReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactReal({self} @{})", self.precision)
    }
}

impl PartialEq for ExactReal {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for ExactReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.cmp(&other.value).map(|c| c.cmp(&0))
    }
}

impl Neg for ExactReal {
    type Output = ExactReal;
    fn neg(self) -> ExactReal {
        ExactReal::wrap(self.value.neg(), self.precision)
    }
}

impl Neg for &ExactReal {
    type Output = ExactReal;
    fn neg(self) -> ExactReal {
        ExactReal::wrap(self.value.clone().neg(), self.precision)
    }
}

/// A decimal string with P significant digits.
impl serde::Serialize for ExactReal {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Precision is inferred from the number of significant digits.
impl<'de> serde::Deserialize<'de> for ExactReal {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let text = String::deserialize(deserializer)?;
        ExactReal::parse_decimal_inferred(&text).map_err(D::Error::custom)
    }
}

macro_rules! real_binop {
    ($Trait:ident, $method:ident, |$a:ident, $b:ident, $bits:ident| $body:expr) => {
        impl $Trait<&ExactReal> for &ExactReal {
            type Output = ExactReal;
            fn $method(self, rhs: &ExactReal) -> ExactReal {
                let precision = self.precision.max(rhs.precision);
                let $bits = precision.bits();
                let ($a, $b) = (&self.value, &rhs.value);
                ExactReal::wrap($body, precision)
            }
        }
        impl $Trait<ExactReal> for ExactReal {
            type Output = ExactReal;
            fn $method(self, rhs: ExactReal) -> ExactReal {
                (&self).$method(&rhs)
            }
        }
        impl $Trait<&ExactReal> for ExactReal {
            type Output = ExactReal;
            fn $method(self, rhs: &ExactReal) -> ExactReal {
                (&self).$method(rhs)
            }
        }
        impl $Trait<ExactReal> for &ExactReal {
            type Output = ExactReal;
            fn $method(self, rhs: ExactReal) -> ExactReal {
                self.$method(&rhs)
            }
        }
    };
}

real_binop!(Add, add, |a, b, bits| a.add(b, bits, ROUNDING));
real_binop!(Sub, sub, |a, b, bits| a.sub(b, bits, ROUNDING));
real_binop!(Mul, mul, |a, b, bits| a.mul(b, bits, ROUNDING));
real_binop!(Div, div, |a, b, bits| {
    assert!(!b.is_zero(), "ExactReal division by zero");
    a.div(b, bits, ROUNDING)
});
