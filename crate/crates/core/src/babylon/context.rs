use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{ExactReal, Precision, Rational};

/// The irrational constants that appear in the circular-figure formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum IrrationalSymbol {
    Pi,
    Sqrt2,
    Sqrt3,
    Sqrt6,
    Sqrt7,
    Sqrt14,
    Sqrt21,
}

impl IrrationalSymbol {
    pub const ALL: [IrrationalSymbol; 7] = [
        Self::Pi,
        Self::Sqrt2,
        Self::Sqrt3,
        Self::Sqrt6,
        Self::Sqrt7,
        Self::Sqrt14,
        Self::Sqrt21,
    ];

    /// `Some(k)` for √k, `None` for π.
    pub fn radicand(self) -> Option<u32> {
        match self {
            Self::Pi => None,
            Self::Sqrt2 => Some(2),
            Self::Sqrt3 => Some(3),
            Self::Sqrt6 => Some(6),
            Self::Sqrt7 => Some(7),
            Self::Sqrt14 => Some(14),
            Self::Sqrt21 => Some(21),
        }
    }

    pub fn key(self) -> &'static str {
        match self {
            Self::Pi => "PI",
            Self::Sqrt2 => "SQRT2",
            Self::Sqrt3 => "SQRT3",
            Self::Sqrt6 => "SQRT6",
            Self::Sqrt7 => "SQRT7",
            Self::Sqrt14 => "SQRT14",
            Self::Sqrt21 => "SQRT21",
        }
    }

    /// High-precision value of the constant itself.
    pub fn exact(self, precision: Precision) -> ExactReal {
        match self.radicand() {
            None => ExactReal::pi(precision),
            Some(k) => ExactReal::sqrt_of(&Rational::integer(i64::from(k)), precision)
                .expect("positive radicand"),
        }
    }
}

impl fmt::Display for IrrationalSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.radicand() {
            None => f.write_str("\u{3c0}"),
            Some(k) => write!(f, "\u{221a}{k}"),
        }
    }
}

impl FromStr for IrrationalSymbol {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let upper = s.trim().to_ascii_uppercase();
        Self::ALL
            .into_iter()
            .find(|sym| sym.key() == upper)
            .ok_or_else(|| Error::ContextJson(format!("unknown symbol {s:?}")))
    }
}

/// A named, finite map from irrational symbols to positive rational surrogates.
///
/// Looking up a symbol that the context does not define is an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproximationContext {
    name: String,
    entries: BTreeMap<IrrationalSymbol, Rational>,
}

pub const STANDARD: &str = "standard";
pub const ALT_SQRT3: &str = "alt-sqrt3";
pub const STANDARD_SQRT21: &str = "standard-sqrt21";

impl ApproximationContext {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            entries: BTreeMap::new(),
        }
    }

    pub fn with(mut self, symbol: IrrationalSymbol, value: Rational) -> Result<Self> {
        self.insert(symbol, value)?;
        Ok(self)
    }

    pub fn insert(&mut self, symbol: IrrationalSymbol, value: Rational) -> Result<()> {
        if !value.is_positive() {
            return Err(Error::NonPositiveSurrogate { symbol });
        }
        self.entries.insert(symbol, value);
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn get(&self, symbol: IrrationalSymbol) -> Result<&Rational> {
        self.entries.get(&symbol).ok_or_else(|| Error::MissingSymbol {
            context: self.name.clone(),
            symbol,
        })
    }

    pub fn contains(&self, symbol: IrrationalSymbol) -> bool {
        self.entries.contains_key(&symbol)
    }

    pub fn entries(&self) -> impl Iterator<Item = (IrrationalSymbol, &Rational)> {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    /// `{"PI": "3/1", "SQRT3": "26/15", ...}`
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .entries
            .iter()
            .map(|(k, v)| (k.key().to_string(), serde_json::Value::String(v.to_fraction_string())))
            .collect();
        serde_json::Value::Object(map)
    }

    pub fn from_json(name: impl Into<String>, json: &str) -> Result<Self> {
        let raw: BTreeMap<String, String> =
            serde_json::from_str(json).map_err(|e| Error::ContextJson(e.to_string()))?;
        let mut ctx = Self::new(name);
        for (key, value) in raw {
            let symbol: IrrationalSymbol = key.parse()?;
            let q: Rational = value
                .parse()
                .map_err(|_| Error::ContextJson(format!("{key}: invalid rational {value:?}")))?;
            ctx.insert(symbol, q)?;
        }
        Ok(ctx)
    }

    /// π ≈ 3, √2 ≈ 17/12, √3 ≈ 7/4.
    pub fn standard() -> Self {
        Self::new(STANDARD)
            .with(IrrationalSymbol::Pi, Rational::integer(3))
            .and_then(|c| c.with(IrrationalSymbol::Sqrt2, Rational::frac(17, 12)))
            .and_then(|c| c.with(IrrationalSymbol::Sqrt3, Rational::frac(7, 4)))
            .expect("positive surrogates")
    }

    /// The standard context with the rarer √3 ≈ 26/15.
    pub fn alt_sqrt3() -> Self {
        Self::standard()
            .renamed(ALT_SQRT3)
            .with(IrrationalSymbol::Sqrt3, Rational::frac(26, 15))
            .expect("positive surrogate")
    }

    /// The standard context plus √21 ≈ 277727/60605, the third Heron iterate
    /// from 5 (already 4;34,57,16,21 to five places).
    pub fn standard_sqrt21() -> Self {
        Self::standard()
            .renamed(STANDARD_SQRT21)
            .with(IrrationalSymbol::Sqrt21, Rational::frac(277727, 60605))
            .expect("positive surrogate")
    }

    pub fn preset(name: &str) -> Result<Self> {
        match name.to_ascii_lowercase().replace('_', "-").as_str() {
            STANDARD => Ok(Self::standard()),
            ALT_SQRT3 => Ok(Self::alt_sqrt3()),
            STANDARD_SQRT21 => Ok(Self::standard_sqrt21()),
            _ => Err(Error::UnknownContext(name.to_string())),
        }
    }
}

/// All built-in contexts, in a fixed order.
pub fn context_presets() -> Vec<ApproximationContext> {
    vec![
        ApproximationContext::standard(),
        ApproximationContext::alt_sqrt3(),
        ApproximationContext::standard_sqrt21(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use IrrationalSymbol::*;

    #[test]
    fn presets_hold_the_classical_surrogates() {
        let std = ApproximationContext::standard();
        assert_eq!(std.get(Sqrt3).unwrap(), &Rational::frac(7, 4));
        assert_eq!(std.get(Pi).unwrap(), &Rational::integer(3));
        assert_eq!(std.get(Sqrt2).unwrap(), &Rational::frac(17, 12));
        let alt = ApproximationContext::alt_sqrt3();
        assert_eq!(alt.get(Sqrt3).unwrap(), &Rational::frac(26, 15));
        assert_eq!(alt.get(Pi).unwrap(), &Rational::integer(3));
        assert_eq!(alt.name(), ALT_SQRT3);
    }

    #[test]
    fn missing_symbol_is_an_error() {
        let err = ApproximationContext::standard().get(Sqrt21).unwrap_err();
        assert!(matches!(err, Error::MissingSymbol { symbol: Sqrt21, .. }));
    }

    #[test]
    fn surrogates_must_be_positive() {
        assert!(ApproximationContext::new("x").with(Pi, Rational::zero()).is_err());
        assert!(ApproximationContext::new("x").with(Pi, Rational::frac(-3, 1)).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let alt = ApproximationContext::alt_sqrt3();
        let json = alt.to_json().to_string();
        assert_eq!(json, r#"{"PI":"3/1","SQRT2":"17/12","SQRT3":"26/15"}"#);
        let back = ApproximationContext::from_json(ALT_SQRT3, &json).unwrap();
        assert_eq!(back, alt);
        assert!(ApproximationContext::from_json("x", r#"{"SQRT5":"2"}"#).is_err());
        assert!(ApproximationContext::from_json("x", r#"{"PI":"-3"}"#).is_err());
    }

    #[test]
    fn preset_lookup_by_name() {
        assert_eq!(ApproximationContext::preset("ALT_SQRT3").unwrap().name(), ALT_SQRT3);
        assert!(ApproximationContext::preset("nope").is_err());
        assert_eq!(context_presets().len(), 3);
    }
}
