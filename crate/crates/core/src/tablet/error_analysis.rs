use serde::Serialize;

use super::tables::scribe_hexagon_value;
use crate::geometry::{convex6_metrics, Evaluator, ExactEval, MetricKey};
use crate::numerics::{ExactReal, Precision, Rational};

/// Relative error of the line-6 constant, under both readings of the
/// published error formula.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScribeError {
    pub scribe_value: Rational,
    pub exact_area: ExactReal,
    pub exact_hexagon: ExactReal,
    /// |area − scribe| / area × 100, the formula as printed.
    pub printed_formula_percent: ExactReal,
    /// |hexagon − scribe| / hexagon × 100: the scribe computed the hexagon.
    pub hexagon_denominator_percent: ExactReal,
    pub claimed_percent: Rational,
    /// Whether either reading rounds to the claimed figure.
    pub claim_reproduced: bool,
}

pub fn scribe_error_l6(precision: Precision) -> ScribeError {
    let e = ExactEval::new(precision);
    let m = convex6_metrics(&e, &e.int(1)).expect("exact mode defines every convex-6 metric");
    let area = m.area.to_real(precision);
    let hexagon = m
        .get(MetricKey::HexagonArea)
        .expect("exact mode reports the hexagon")
        .to_real(precision);
    let scribe = scribe_hexagon_value();
    let s = ExactReal::from_rational(&scribe, precision);
    let percent = |exact: &ExactReal| (exact - &s).abs() / exact * ExactReal::from_int(100, precision);
    let printed = percent(&area);
    let hex = percent(&hexagon);
    let claimed = Rational::frac(14, 10);
    let claim = claimed.to_decimal_string(1);
    ScribeError {
        claim_reproduced: printed.to_decimal_string(1) == claim || hex.to_decimal_string(1) == claim,
        scribe_value: scribe,
        exact_area: area,
        exact_hexagon: hexagon,
        printed_formula_percent: printed,
        hexagon_denominator_percent: hex,
        claimed_percent: claimed,
    }
}
