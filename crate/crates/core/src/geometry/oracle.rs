//! Independent check of the closed forms: build the boundary, replace each
//! arc by `k` chords and take the shoelace area. The error shrinks like 1/k².

use super::construct::{construct, Point};
use super::figure::PolyarcSpec;
use crate::error::{Error, Result};

pub const MIN_CHORDS: usize = 8;

pub fn oracle_area(spec: &PolyarcSpec, k: usize) -> Result<f64> {
    if k < MIN_CHORDS {
        return Err(Error::Domain(format!("need at least {MIN_CHORDS} chords per arc, got {k}")));
    }
    let c = construct(spec)?;
    let points: Vec<Point> = c.boundary.iter().flat_map(|arc| arc.sample(k)).collect();
    Ok(shoelace(&points))
}

/// Signed area of a closed polygon; positive when counterclockwise.
pub fn shoelace(points: &[Point]) -> f64 {
    let m = points.len();
    let twice: f64 = (0..m)
        .map(|i| {
            let p = points[i];
            let q = points[(i + 1) % m];
            p.x * q.y - q.x * p.y
        })
        .sum();
    twice / 2.0
}
