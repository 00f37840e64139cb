use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{ExactReal, Precision, Rational};

/// A computed value: exact rational, or a high-precision real.
#[derive(Debug, Clone, PartialEq)]
pub enum Quantity {
    Rational(Rational),
    Real(ExactReal),
}

impl Quantity {
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Self::Rational(q) => Some(q),
            Self::Real(_) => None,
        }
    }

    pub fn as_real(&self) -> Option<&ExactReal> {
        match self {
            Self::Real(r) => Some(r),
            Self::Rational(_) => None,
        }
    }

    /// The value as a real at `precision` (exact rationals are converted).
    pub fn to_real(&self, precision: Precision) -> ExactReal {
        match self {
            Self::Rational(q) => ExactReal::from_rational(q, precision),
            Self::Real(r) => r.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Self::Rational(q) => q.to_f64(),
            Self::Real(r) => r.to_f64(),
        }
    }
}

impl From<Rational> for Quantity {
    fn from(q: Rational) -> Self {
        Self::Rational(q)
    }
}

impl From<ExactReal> for Quantity {
    fn from(r: ExactReal) -> Self {
        Self::Real(r)
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rational(q) => write!(f, "{q}"),
            Self::Real(r) => write!(f, "{r}"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum QuantityRepr {
    Rational(Rational),
    Decimal(String),
}

/// `{"rational": {"num", "den"}}` or `{"decimal": "<P significant digits>"}`.
impl Serialize for Quantity {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Self::Rational(q) => QuantityRepr::Rational(q.clone()),
            Self::Real(r) => QuantityRepr::Decimal(r.to_string()),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Quantity {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        match QuantityRepr::deserialize(deserializer)? {
            QuantityRepr::Rational(q) => Ok(Self::Rational(q)),
            QuantityRepr::Decimal(text) => ExactReal::parse_decimal_inferred(&text)
                .map(Self::Real)
                .map_err(D::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shapes() {

        let q = Quantity::from(Rational::frac(2, 9));
        assert_eq!(serde_json::to_string(&q).unwrap(), r#"{"rational":{"num":"2","den":"9"}}"#);
        let r = Quantity::from(ExactReal::pi(Precision::DEFAULT));
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, r#"{"decimal":"3.14159265358979323846264338328"}"#);
        let back: Quantity = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }
}
