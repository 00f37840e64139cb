use serde::Serialize;

use super::entries::TabletEntry;
use crate::babylon::ApproximationContext;
use crate::error::{Error, Result};
use crate::geometry::{metrics, ContextEval, ExactEval, FigureMetrics, PolyarcSpec, Size};
use crate::numerics::{ExactReal, Precision, Quantity, Rational, RoundingMode, Sexagesimal};

/// Places kept when the recomputed value is shown in sexagesimal.
pub const REPORT_PLACES: usize = 8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub entry: TabletEntry,
    /// Context actually used (normally the entry's own).
    pub context: String,
    pub recomputed_rational: Rational,
    #[serde(serialize_with = "super::as_text")]
    pub recomputed_sexagesimal: Sexagesimal,
    pub matches_scribe: bool,
    pub exact_value: ExactReal,
    /// |exact − scribe| / exact × 100
    pub scribe_error_percent: ExactReal,
}

impl VerificationReport {
    /// A mismatch the dataset did not anticipate.
    pub fn is_unexpected(&self) -> bool {
        self.matches_scribe != self.entry.expected_match
    }
}

fn pick(m: &FigureMetrics, entry: &TabletEntry) -> Result<Quantity> {
    match entry.metric {
        None => Ok(m.area.clone()),
        Some(key) => m
            .get(key)
            .cloned()
            .ok_or_else(|| Error::InvalidFigure(format!("{} does not define {key}", m.figure))),
    }
}

fn sized(entry: &TabletEntry) -> PolyarcSpec {
    let size = match &entry.figure.size {
        Size::ArcLength(_) => Size::ArcLength(entry.recipe.size.clone()),
        Size::QuadrantRadius(_) => Size::QuadrantRadius(entry.recipe.size.clone()),
    };
    PolyarcSpec {
        size,
        ..entry.figure.clone()
    }
}

/// Recompute an entry in its own context.
pub fn verify_entry(entry: &TabletEntry, precision: Precision) -> Result<VerificationReport> {
    let ctx = ApproximationContext::preset(&entry.recipe.context)?;
    verify_entry_in(entry, &ctx, precision)
}

/// Recompute an entry under an arbitrary context (e.g. line 5 with √3 ≈ 7/4).
pub fn verify_entry_in(
    entry: &TabletEntry,
    context: &ApproximationContext,
    precision: Precision,
) -> Result<VerificationReport> {
    let spec = sized(entry);
    let approx = pick(&metrics(&ContextEval::new(context), &spec)?, entry)?;
    let recomputed = approx
        .as_rational()
        .cloned()
        .expect("context mode is rational");
    let exact = pick(&metrics(&ExactEval::new(precision), &spec)?, entry)?.to_real(precision);
    let scribe = entry.scribe_rational();
    let scribe_real = ExactReal::from_rational(&scribe, precision);
    let hundred = ExactReal::from_int(100, precision);
    let error = ((&exact - &scribe_real).abs() / &exact) * hundred;
    Ok(VerificationReport {
        entry: entry.clone(),
        context: context.name().to_string(),
        recomputed_sexagesimal: Sexagesimal::from_rational(&recomputed, REPORT_PLACES, RoundingMode::Truncate)?,
        matches_scribe: recomputed == scribe,
        recomputed_rational: recomputed,
        exact_value: exact,
        scribe_error_percent: error,
    })
}

pub fn verify_all(precision: Precision) -> Result<Vec<VerificationReport>> {
    super::builtin_entries()
        .iter()
        .map(|e| verify_entry(e, precision))
        .collect()
}
