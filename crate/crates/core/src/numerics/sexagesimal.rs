//! Base-60 numerals in the `i,i;f,f,f` transcription style: a semicolon marks
//! the radix point and commas separate digits.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use super::Rational;
use crate::error::{Error, Result};

pub const BASE: u8 = 60;

/// Upper bound on the number of fractional places produced by conversion.
pub const MAX_PLACES: usize = 64;

/// How the last requested place is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RoundingMode {
    /// Drop everything past the last place (toward zero).
    #[default]
    Truncate,
    /// Round half away from zero at the last place.
    Round,
}

impl FromStr for RoundingMode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "truncate" | "trunc" => Ok(Self::Truncate),
            "round" => Ok(Self::Round),
            other => Err(format!("unknown rounding mode {other:?} (expected truncate|round)")),
        }
    }
}

/// A canonical sexagesimal numeral.
///
/// The integer part never has leading zeros (zero is the single digit `0`)
/// and the fractional part never has trailing zeros, so derived equality is
/// value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sexagesimal {
    negative: bool,
    integer: Vec<u8>,
    fraction: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseSexagesimalError {
    #[error("empty sexagesimal numeral")]
    Empty,
    #[error("expected a digit at position {position}")]
    MissingDigit { position: usize },
    #[error("unexpected character {found:?} at position {position}")]
    UnexpectedChar { position: usize, found: char },
    #[error("digit {value} at position {position} is not below 60")]
    DigitOutOfRange { position: usize, value: String },
}

impl ParseSexagesimalError {
    pub fn position(&self) -> usize {
        match self {
            Self::Empty => 0,
            Self::MissingDigit { position }
            | Self::UnexpectedChar { position, .. }
            | Self::DigitOutOfRange { position, .. } => *position,
        }
    }
}

impl Sexagesimal {
    /// Builds a numeral from raw digits, validating and canonicalizing them.
    pub fn new(negative: bool, integer: Vec<u8>, fraction: Vec<u8>) -> Result<Self> {
        if let Some(d) = integer.iter().chain(&fraction).find(|&&d| d >= BASE) {
            return Err(Error::Domain(format!("sexagesimal digit {d} is not below 60")));
        }
        Ok(Self::canonical(negative, integer, fraction))
    }

    fn canonical(negative: bool, mut integer: Vec<u8>, mut fraction: Vec<u8>) -> Self {
        let lead = integer.iter().take_while(|&&d| d == 0).count();
        integer.drain(..lead);
        if integer.is_empty() {
            integer.push(0);
        }
        while fraction.last() == Some(&0) {
            fraction.pop();
        }
        let is_zero = integer == [0] && fraction.is_empty();
        Self {
            negative: negative && !is_zero,
            integer,
            fraction,
        }
    }

    pub fn zero() -> Self {
        Self::canonical(false, vec![0], Vec::new())
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn integer_digits(&self) -> &[u8] {
        &self.integer
    }

    pub fn fraction_digits(&self) -> &[u8] {
        &self.fraction
    }

    /// Exact value as a reduced fraction.
    pub fn to_rational(&self) -> Rational {
        let mut int = BigInt::zero();
        for &d in &self.integer {
            int = int * BASE + d;
        }
        let mut frac = BigInt::zero();
        let mut den = BigInt::from(1u8);
        for &d in &self.fraction {
            frac = frac * BASE + d;
            den *= BASE;
        }
        let value = Rational::integer(int) + Rational::new(frac, den).expect("positive power of 60");
        if self.negative {
            -value
        } else {
            value
        }
    }

    /// Expands `q` to at most `places` fractional digits.
    ///
    /// Truncation yields the largest numeral with that many places not
    /// exceeding `|q|`, with the sign reapplied afterwards.
    pub fn from_rational(q: &Rational, places: usize, mode: RoundingMode) -> Result<Self> {
        if places > MAX_PLACES {
            return Err(Error::TooManyPlaces {
                requested: places,
                max: MAX_PLACES,
            });
        }
        let den = q.denom().clone();
        let (int, mut rem) = q.numer().abs().div_rem(&den);
        let mut fraction = Vec::with_capacity(places);
        for _ in 0..places {
            if rem.is_zero() {
                break;
            }
            rem *= BASE;
            let (digit, r) = rem.div_rem(&den);
            fraction.push(digit.to_u8().expect("digit below 60"));
            rem = r;
        }
        let mut integer = integer_digits(int);
        if mode == RoundingMode::Round && !rem.is_zero() && rem * 2u8 >= den {
            round_up(&mut integer, &mut fraction, places);
        }
        Ok(Self::canonical(q.is_negative(), integer, fraction))
    }
}

fn integer_digits(mut n: BigInt) -> Vec<u8> {
    if n.is_zero() {
        return vec![0];
    }
    let mut digits = Vec::new();
    while !n.is_zero() {
        let (q, r) = n.div_rem(&BigInt::from(BASE));
        digits.push(r.to_u8().expect("digit below 60"));
        n = q;
    }
    digits.reverse();
    digits
}

/// Adds one unit in the last of `places` fractional positions.
fn round_up(integer: &mut Vec<u8>, fraction: &mut Vec<u8>, places: usize) {
    fraction.resize(places, 0);
    for d in fraction.iter_mut().rev() {
        if *d + 1 < BASE {
            *d += 1;
            return;
        }
        *d = 0;
    }
    for d in integer.iter_mut().rev() {
        if *d + 1 < BASE {
            *d += 1;
            return;
        }
        *d = 0;
    }
    integer.insert(0, 1);
}

/// True iff `q` has a finite sexagesimal expansion, i.e. its reduced
/// denominator has no prime factors other than 2, 3 and 5.
pub fn is_regular(q: &Rational) -> bool {
    let mut d = q.denom().clone();
    for p in [2u8, 3, 5] {
        let p = BigInt::from(p);
        while (&d % &p).is_zero() {
            d /= &p;
        }
    }
    d == BigInt::from(1u8)
}

impl FromStr for Sexagesimal {
    type Err = ParseSexagesimalError;

    fn from_str(text: &str) -> std::result::Result<Self, Self::Err> {
        if text.is_empty() {
            return Err(ParseSexagesimalError::Empty);
        }
        let chars: Vec<char> = text.chars().collect();
        let mut pos = 0;
        let negative = chars[0] == '-';
        if negative {
            pos = 1;
        }
        let mut integer = Vec::new();
        let mut fraction = Vec::new();
        let mut in_fraction = false;
        loop {
            let start = pos;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(match chars.get(pos) {
                    None | Some(',') | Some(';') => ParseSexagesimalError::MissingDigit { position: pos },
                    Some(&found) => ParseSexagesimalError::UnexpectedChar { position: pos, found },
                });
            }
            let literal: String = chars[start..pos].iter().collect();
            let digit = literal
                .parse::<u32>()
                .ok()
                .filter(|&v| v < u32::from(BASE))
                .ok_or_else(|| ParseSexagesimalError::DigitOutOfRange {
                    position: start,
                    value: literal.clone(),
                })?;
            if in_fraction {
                fraction.push(digit as u8);
            } else {
                integer.push(digit as u8);
            }
            match chars.get(pos) {
                None => break,
                Some(',') => pos += 1,
                Some(';') if !in_fraction => {
                    in_fraction = true;
                    pos += 1;
                }
                Some(&found) => return Err(ParseSexagesimalError::UnexpectedChar { position: pos, found }),
            }
        }
        Ok(Self::canonical(negative, integer, fraction))
    }
}

impl fmt::Display for Sexagesimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        write_digits(f, &self.integer)?;
        if !self.fraction.is_empty() {
            f.write_str(";")?;
            write_digits(f, &self.fraction)?;
        }
        Ok(())
    }
}

fn write_digits(f: &mut fmt::Formatter<'_>, digits: &[u8]) -> fmt::Result {
    for (i, d) in digits.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{d}")?;
    }
    Ok(())
}

impl fmt::Debug for Sexagesimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sexagesimal({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct SexagesimalRepr {
    sign: String,
    int: Vec<u8>,
    frac: Vec<u8>,
}

impl Serialize for Sexagesimal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SexagesimalRepr {
            sign: if self.negative { "-" } else { "+" }.to_string(),
            int: self.integer.clone(),
            frac: self.fraction.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Sexagesimal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = SexagesimalRepr::deserialize(deserializer)?;
        let negative = match repr.sign.as_str() {
            "+" => false,
            "-" => true,
            other => return Err(D::Error::custom(format!("sign must be \"+\" or \"-\", got {other:?}"))),
        };
        Sexagesimal::new(negative, repr.int, repr.frac).map_err(D::Error::custom)
    }
}
