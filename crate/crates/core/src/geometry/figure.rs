use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::eval::ModeInfo;
use crate::error::{Error, Result};
use crate::numerics::{Quantity, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    RegularConcave,
    RegularConvex,
    BarleyField,
    OxEye,
    #[serde(rename = "convex-4")]
    Convex4,
    #[serde(rename = "convex-6")]
    Convex6,
    #[serde(rename = "apusamikkum-4")]
    Apusamikkum4,
    #[serde(rename = "apusamikkum-3")]
    Apusamikkum3,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Self::RegularConcave,
        Self::RegularConvex,
        Self::BarleyField,
        Self::OxEye,
        Self::Convex4,
        Self::Convex6,
        Self::Apusamikkum4,
        Self::Apusamikkum3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::RegularConcave => "regular-concave",
            Self::RegularConvex => "regular-convex",
            Self::BarleyField => "barley-field",
            Self::OxEye => "ox-eye",
            Self::Convex4 => "convex-4",
            Self::Convex6 => "convex-6",
            Self::Apusamikkum4 => "apusamikkum-4",
            Self::Apusamikkum3 => "apusamikkum-3",
        }
    }

    pub fn is_generic(self) -> bool {
        matches!(self, Self::RegularConcave | Self::RegularConvex)
    }

    /// Arc count of the fixed figures.
    pub fn fixed_arcs(self) -> Option<u32> {
        match self {
            Self::RegularConcave | Self::RegularConvex => None,
            Self::BarleyField | Self::OxEye => Some(2),
            Self::Convex4 | Self::Apusamikkum4 => Some(4),
            Self::Convex6 => Some(6),
            Self::Apusamikkum3 => Some(3),
        }
    }

    pub fn is_concave(self) -> bool {
        matches!(self, Self::RegularConcave | Self::Apusamikkum4 | Self::Apusamikkum3)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        let norm = match norm.as_str() {
            "barley" => "barley-field",
            "oxeye" => "ox-eye",
            "convex4" => "convex-4",
            "convex6" => "convex-6",
            "apusamikkum4" | "apusamikkum" => "apusamikkum-4",
            "apusamikkum3" => "apusamikkum-3",
            "concave" => "regular-concave",
            "convex" => "regular-convex",
            other => other,
        };
        Self::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| Error::InvalidFigure(format!("unknown figure {s:?}")))
    }
}

/// The size parameter: arc length `a` or quadrant (constructive circle) radius `r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Size {
    ArcLength(Rational),
    QuadrantRadius(Rational),
}

impl Size {
    pub fn value(&self) -> &Rational {
        match self {
            Self::ArcLength(v) | Self::QuadrantRadius(v) => v,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyarcSpec {
    pub family: Family,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub size: Size,
}

impl PolyarcSpec {
    pub fn new(family: Family, n: Option<u32>, size: Size) -> Result<Self> {
        let spec = Self { family, n, size };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.size.value().is_positive() {
            return Err(Error::NonPositive { what: "size" });
        }
        match (self.family, self.n) {
            (Family::RegularConcave, Some(n)) if n < 3 => {
                Err(Error::InvalidFigure(format!("regular concave polyarc needs n >= 3, got {n}")))
            }
            (Family::RegularConvex, Some(n)) if n < 2 || n % 2 == 1 => {
                Err(Error::InvalidFigure(format!("regular convex polyarc needs even n >= 2, got {n}")))
            }
            (f, None) if f.is_generic() => Err(Error::InvalidFigure(format!("{f} needs an arc count n"))),
            (f, Some(n)) if !f.is_generic() && f.fixed_arcs() != Some(n) => {
                Err(Error::InvalidFigure(format!("{f} has {} arcs, not {n}", f.fixed_arcs().unwrap_or(0))))
            }
            (Family::RegularConvex | Family::Convex6, _) if matches!(self.size, Size::ArcLength(_)) => Err(
                Error::InvalidFigure(format!("{} is sized by its quadrant radius r", self.family)),
            ),
            _ => Ok(()),
        }
    }

    /// Arc count, whether fixed by the family or given.
    pub fn arcs(&self) -> u32 {
        self.family.fixed_arcs().or(self.n).unwrap_or(0)
    }

    pub fn barley_field(a: Rational) -> Result<Self> {
        Self::new(Family::BarleyField, None, Size::ArcLength(a))
    }

    pub fn ox_eye(a: Rational) -> Result<Self> {
        Self::new(Family::OxEye, None, Size::ArcLength(a))
    }

    pub fn convex4(r: Rational) -> Result<Self> {
        Self::new(Family::Convex4, None, Size::QuadrantRadius(r))
    }

    pub fn convex6(r: Rational) -> Result<Self> {
        Self::new(Family::Convex6, None, Size::QuadrantRadius(r))
    }

    pub fn apusamikkum4(a: Rational) -> Result<Self> {
        Self::new(Family::Apusamikkum4, None, Size::ArcLength(a))
    }

    pub fn apusamikkum3(r: Rational) -> Result<Self> {
        Self::new(Family::Apusamikkum3, None, Size::QuadrantRadius(r))
    }

    pub fn regular_concave(n: u32, size: Size) -> Result<Self> {
        Self::new(Family::RegularConcave, Some(n), size)
    }

    pub fn regular_convex(n: u32, r: Rational) -> Result<Self> {
        Self::new(Family::RegularConvex, Some(n), Size::QuadrantRadius(r))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MetricKey {
    Length,
    Width,
    Diagonal,
    Transversal,
    SquareSide,
    SquareArea,
    HexagonSide,
    TriangleArea,
    SegmentArea,
    HexagonArea,
    HalfAngleAlpha,
}

impl MetricKey {
    pub fn name(self) -> &'static str {
        match self {
            Self::Length => "length",
            Self::Width => "width",
            Self::Diagonal => "diagonal",
            Self::Transversal => "transversal",
            Self::SquareSide => "square_side",
            Self::SquareArea => "square_area",
            Self::HexagonSide => "hexagon_side",
            Self::TriangleArea => "triangle_area",
            Self::SegmentArea => "segment_area",
            Self::HexagonArea => "hexagon_area",
            Self::HalfAngleAlpha => "half_angle_alpha",
        }
    }
}

impl fmt::Display for MetricKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Area and named dimensions of one figure, with the mode that produced them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FigureMetrics {
    pub figure: Family,
    #[serde(flatten)]
    pub mode: ModeInfo,
    pub area: Quantity,
    pub lengths: BTreeMap<MetricKey, Quantity>,
}

impl FigureMetrics {
    pub fn get(&self, key: MetricKey) -> Option<&Quantity> {
        self.lengths.get(&key)
    }
}
