use std::fmt;

use serde::{Deserialize, Serialize};

use crate::babylon::{ALT_SQRT3, STANDARD, STANDARD_SQRT21};
use crate::geometry::{Family, MetricKey, PolyarcSpec, Size};
use crate::numerics::{parse_sexagesimal, Rational, Sexagesimal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TabletQuantity {
    Area,
    Length,
    Width,
    Diagonal,
    Transversal,
}

impl fmt::Display for TabletQuantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Area => "area",
            Self::Length => "length",
            Self::Width => "width",
            Self::Diagonal => "diagonal",
            Self::Transversal => "transversal",
        })
    }
}

/// How the scribe's number is recomputed: which context, at what size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Recipe {
    pub context: String,
    pub size: Rational,
}

/// One circular-figure constant of the tablet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TabletEntry {
    /// Unique key; a line with two readings gets a suffix ("5", "5-total").
    pub id: &'static str,
    pub line: u32,
    pub label: &'static str,
    pub figure: PolyarcSpec,
    pub quantity: TabletQuantity,
    /// The metric compared against the scribe value; `None` is the area.
    pub metric: Option<MetricKey>,
    #[serde(serialize_with = "super::as_text")]
    pub scribe_value: Sexagesimal,
    pub recipe: Recipe,
    /// Whether the recomputation is known to reproduce the scribe value.
    pub expected_match: bool,
}

impl TabletEntry {
    pub fn scribe_rational(&self) -> Rational {
        self.scribe_value.to_rational()
    }
}

struct Row {
    id: &'static str,
    line: u32,
    label: &'static str,
    family: Family,
    size: fn(Rational) -> Size,
    quantity: TabletQuantity,
    metric: Option<MetricKey>,
    scribe: &'static str,
    context: &'static str,
    expected_match: bool,
}

const fn row(
    id: &'static str,
    line: u32,
    label: &'static str,
    family: Family,
    quantity: TabletQuantity,
    metric: Option<MetricKey>,
    scribe: &'static str,
) -> Row {
    let size: fn(Rational) -> Size = match family {
        Family::Convex4 | Family::Convex6 | Family::Apusamikkum3 => Size::QuadrantRadius,
        _ => Size::ArcLength,
    };
    Row {
        id,
        line,
        label,
        family,
        size,
        quantity,
        metric,
        scribe,
        context: STANDARD,
        expected_match: true,
    }
}

use Family::*;
use TabletQuantity as Q;

const ROWS: [Row; 13] = [
    Row {
        context: ALT_SQRT3,
        ..row("5", 5, "square inside the 4-arc", Convex4, Q::Area, Some(MetricKey::SquareArea), "0;16")
    },
    Row {
        context: ALT_SQRT3,
        ..row("5-total", 5, "4-arc, whole figure with \u{3c0} = 3", Convex4, Q::Area, None, "0;16")
    },
    Row {
        context: STANDARD_SQRT21,
        expected_match: false,
        ..row("6", 6, "6-arc (inscribed hexagon)", Convex6, Q::Area, None, "0;16,26,46,40")
    },
    row("16", 16, "barley-field area", BarleyField, Q::Area, None, "0;13,20"),
    row("17", 17, "barley-field length", BarleyField, Q::Length, Some(MetricKey::Length), "0;56,40"),
    row("18", 18, "barley-field width", BarleyField, Q::Width, Some(MetricKey::Width), "0;23,20"),
    row("19", 19, "ox-eye area", OxEye, Q::Area, None, "0;16,52,30"),
    row("20", 20, "ox-eye length", OxEye, Q::Length, Some(MetricKey::Length), "0;52,30"),
    row("21", 21, "ox-eye width", OxEye, Q::Width, Some(MetricKey::Width), "0;30"),
    row("22", 22, "apusamikkum area", Apusamikkum4, Q::Area, None, "0;26,40"),
    row("23", 23, "apusamikkum diagonal", Apusamikkum4, Q::Diagonal, Some(MetricKey::Diagonal), "1;20"),
    row(
        "24",
        24,
        "apusamikkum transversal",
        Apusamikkum4,
        Q::Transversal,
        Some(MetricKey::Transversal),
        "0;33,20",
    ),
    row("25", 25, "apusamikkum of three vertices", Apusamikkum3, Q::Area, None, "0;15"),
];

/// The thirteen circular-figure constants (lines 5, 6, 16–25; line 5 is
/// read two ways), all at unit size.
pub fn builtin_entries() -> Vec<TabletEntry> {
    ROWS.iter()
        .map(|r| TabletEntry {
            id: r.id,
            line: r.line,
            label: r.label,
            figure: PolyarcSpec::new(r.family, None, (r.size)(Rational::one())).expect("valid builtin figure"),
            quantity: r.quantity,
            metric: r.metric,
            scribe_value: parse_sexagesimal(r.scribe).expect("valid builtin numeral"),
            recipe: Recipe {
                context: r.context.to_string(),
                size: Rational::one(),
            },
            expected_match: r.expected_match,
        })
        .collect()
}

/// Entries for a line number (line 5 has two).
pub fn entries_for_line(line: u32) -> Vec<TabletEntry> {
    builtin_entries().into_iter().filter(|e| e.line == line).collect()
}

pub fn entry(id: &str) -> Option<TabletEntry> {
    builtin_entries().into_iter().find(|e| e.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thirteen_entries_with_unique_ids() {
        let all = builtin_entries();
        assert_eq!(all.len(), 13);
        let mut ids: Vec<_> = all.iter().map(|e| e.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 13);
        assert_eq!(all.iter().filter(|e| !e.expected_match).count(), 1);
    }

    #[test]
    fn spot_checks() {
        assert_eq!(entry("16").unwrap().scribe_value.to_string(), "0;13,20");
        assert_eq!(entry("5").unwrap().recipe.context, ALT_SQRT3);
        assert_eq!(entry("23").unwrap().quantity, TabletQuantity::Diagonal);
        assert_eq!(entries_for_line(5).len(), 2);
        assert_eq!(entry("6").unwrap().scribe_rational(), Rational::frac(8881, 32400));
    }
}
