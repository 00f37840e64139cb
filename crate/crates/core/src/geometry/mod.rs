//! Closed-form areas and dimensions of the polyarc figures, their
//! constructions, and a chord-based oracle.

mod construct;
mod eval;
mod figure;
mod formulas;
mod oracle;

pub use construct::{
    chain_radius_f64, concave_chain, construct, disc_intersection, quadrant_radius_f64, Arc, Circle, Construction,
    Point,
};
pub use eval::{ContextEval, Evaluator, ExactEval, ModeInfo, Scalar};
pub use figure::{Family, FigureMetrics, MetricKey, PolyarcSpec, Size};
pub use formulas::{
    apusamikkum3_metrics, apusamikkum4_metrics, area, barley_field_metrics, chain_radius, concave_area_general,
    convex4_metrics, convex6_metrics, convex_area_general, metrics, ox_eye_metrics,
};
pub use oracle::{oracle_area, shoelace, MIN_CHORDS};

#[cfg(test)]
mod tests;
