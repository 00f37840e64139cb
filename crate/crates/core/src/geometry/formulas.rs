//! Closed forms for every figure, generic over the evaluation mode.
//!
//! In context mode the surrogates are substituted into these final formulas,
//! which is the arithmetic path the scribe followed (2(π−2)/π² with π → 3
//! gives 2/9), not an approximation of the exact value.

use std::collections::BTreeMap;

use super::eval::{Evaluator, Scalar};
use super::figure::{Family, FigureMetrics, MetricKey, PolyarcSpec, Size};
use crate::babylon::IrrationalSymbol::{self, *};
use crate::error::{Error, Result};
use crate::numerics::ExactReal;

fn sq<V: Scalar>(v: &V) -> V {
    v.clone() * v.clone()
}

struct Builder<E: Evaluator> {
    lengths: BTreeMap<MetricKey, E::Value>,
}

impl<E: Evaluator> Builder<E> {
    fn new() -> Self {
        Self { lengths: BTreeMap::new() }
    }

    fn put(mut self, key: MetricKey, v: E::Value) -> Self {
        self.lengths.insert(key, v);
        self
    }

    fn finish(self, e: &E, figure: Family, area: E::Value) -> FigureMetrics {
        FigureMetrics {
            figure,
            mode: e.mode(),
            area: area.into(),
            lengths: self.lengths.into_iter().map(|(k, v)| (k, v.into())).collect(),
        }
    }
}

fn sym<E: Evaluator>(e: &E, s: IrrationalSymbol) -> Result<E::Value> {
    e.symbol(s)
}

fn check_size<V: Scalar>(v: &V, what: &'static str) -> Result<()> {
    // zero is a harmless degenerate limit; negative sizes are rejected
    if v.is_negative() {
        Err(Error::NonPositive { what })
    } else {
        Ok(())
    }
}

/// Two circles, each cutting off a quarter of the other: length 2√2a/π,
/// width 2(2−√2)a/π, area 2(π−2)a²/π².
pub fn barley_field_metrics<E: Evaluator>(e: &E, a: &E::Value) -> Result<FigureMetrics> {
    check_size(a, "a")?;
    let pi = sym(e, Pi)?;
    let s2 = sym(e, Sqrt2)?;
    let two = e.int(2);
    let length = two.clone() * s2.clone() * a.clone() / pi.clone();
    let width = two.clone() * (two.clone() - s2) * a.clone() / pi.clone();
    let area = two.clone() * (pi.clone() - two) * sq(a) / sq(&pi);
    Ok(Builder::<E>::new()
        .put(MetricKey::Length, length)
        .put(MetricKey::Width, width)
        .finish(e, Family::BarleyField, area))
}

/// Two circles through each other's centers (120° arcs): width 3a/(2π),
/// length 3√3a/(2π), area (3/(2π) − 9√3/(8π²))a².
pub fn ox_eye_metrics<E: Evaluator>(e: &E, a: &E::Value) -> Result<FigureMetrics> {
    check_size(a, "a")?;
    let pi = sym(e, Pi)?;
    let s3 = sym(e, Sqrt3)?;
    let width = e.int(3) * a.clone() / (e.int(2) * pi.clone());
    let length = e.int(3) * s3.clone() * a.clone() / (e.int(2) * pi.clone());
    let area = (e.int(3) / (e.int(2) * pi.clone()) - e.int(9) * s3 / (e.int(8) * sq(&pi))) * sq(a);
    Ok(Builder::<E>::new()
        .put(MetricKey::Length, length)
        .put(MetricKey::Width, width)
        .finish(e, Family::OxEye, area))
}

/// Overlap of two perpendicular quarter-arc lenses: inner square of area
/// (2−√3)r² plus four segments of (π/3−1)r²/4 each.
///
/// The square side √(2−√3)·r is reported only when the mode can take the
/// root (exact mode, or a context where 2−√3 is a rational square).
pub fn convex4_metrics<E: Evaluator>(e: &E, r: &E::Value) -> Result<FigureMetrics> {
    check_size(r, "r")?;
    let pi = sym(e, Pi)?;
    let s3 = sym(e, Sqrt3)?;
    let r2 = sq(r);
    let square_area = (e.int(2) - s3.clone()) * r2.clone();
    let segment = (pi.clone() / e.int(3) - e.int(1)) * r2.clone() / e.int(4);
    let total = (pi / e.int(3) + e.int(1) - s3) * r2;
    let mut b = Builder::<E>::new()
        .put(MetricKey::SquareArea, square_area.clone())
        .put(MetricKey::SegmentArea, segment);
    if let Some(side) = e.sqrt(&square_area) {
        b = b.put(MetricKey::SquareSide, side);
    }
    Ok(b.finish(e, Family::Convex4, total))
}

/// Overlap of three lenses rotated by 60°.
///
/// Exact mode gives the whole breakdown. Context mode has no surrogate for
/// the segment angle, so it computes only the inscribed hexagon
/// (3√3/8)(5−√21)r², which is also what it reports as the area: that is the
/// scribe's approximation of the figure.
pub fn convex6_metrics<E: Evaluator>(e: &E, r: &E::Value) -> Result<FigureMetrics> {
    check_size(r, "r")?;
    let r2 = sq(r);
    let s3 = sym(e, Sqrt3)?;
    let hexagon = e.int(3) * s3.clone() / e.int(8) * (e.int(5) - sym(e, Sqrt21)?) * r2.clone();
    if !e.is_exact() {
        return Ok(Builder::<E>::new()
            .put(MetricKey::HexagonArea, hexagon.clone())
            .finish(e, Family::Convex6, hexagon));
    }
    let s7 = sym(e, Sqrt7)?;
    let k = (sym(e, Sqrt14)? - sym(e, Sqrt6)?) / e.int(4);
    let x = k.clone() * r.clone();
    let triangle = (e.int(5) * s3.clone() - e.int(3) * s7.clone()) / e.int(16) * r2.clone();
    let half_alpha = e.asin(&(k / e.int(2)))?;
    let segment = half_alpha.clone() * r2.clone() + (s7 - e.int(3) * s3) / e.int(16) * r2;
    let total = e.int(6) * (triangle.clone() + segment.clone());
    Ok(Builder::<E>::new()
        .put(MetricKey::HexagonSide, x)
        .put(MetricKey::TriangleArea, triangle)
        .put(MetricKey::HalfAngleAlpha, half_alpha)
        .put(MetricKey::SegmentArea, segment)
        .put(MetricKey::HexagonArea, hexagon)
        .finish(e, Family::Convex6, total))
}

/// Four quarter circles around a square of side 2r: diagonal 4a/π,
/// transversal 4(√2−1)a/π, area (16−4π)a²/π².
pub fn apusamikkum4_metrics<E: Evaluator>(e: &E, a: &E::Value) -> Result<FigureMetrics> {
    check_size(a, "a")?;
    let pi = sym(e, Pi)?;
    let s2 = sym(e, Sqrt2)?;
    let diagonal = e.int(4) * a.clone() / pi.clone();
    let transversal = e.int(4) * (s2 - e.int(1)) * a.clone() / pi.clone();
    let area = (e.int(16) - e.int(4) * pi.clone()) * sq(a) / sq(&pi);
    Ok(Builder::<E>::new()
        .put(MetricKey::Diagonal, diagonal)
        .put(MetricKey::Transversal, transversal)
        .finish(e, Family::Apusamikkum4, area))
}

/// Three mutually tangent circles: area (√3 − π/2)r².
pub fn apusamikkum3_metrics<E: Evaluator>(e: &E, r: &E::Value) -> Result<FigureMetrics> {
    check_size(r, "r")?;
    let area = (sym(e, Sqrt3)? - sym(e, Pi)? / e.int(2)) * sq(r);
    Ok(Builder::<E>::new().finish(e, Family::Apusamikkum3, area))
}

/// Regular concave n-arc with arc length a: the n-gon of side 2r minus n
/// sectors, (n³cot(π/n)/(π²(n−2)²) − n²/(2π(n−2)))·a².
pub fn concave_area_general<E: Evaluator>(e: &E, n: u32, a: &E::Value) -> Result<E::Value> {
    if n < 3 {
        return Err(Error::InvalidFigure(format!("regular concave polyarc needs n >= 3, got {n}")));
    }
    check_size(a, "a")?;
    let pi = sym(e, Pi)?;
    let nn = e.int(i64::from(n));
    let m = e.int(i64::from(n) - 2);
    let polygon = sq(&nn) * nn.clone() * e.cot_pi_over(n)? / (sq(&pi) * sq(&m));
    let sectors = sq(&nn) / (e.int(2) * pi * m);
    Ok((polygon - sectors) * sq(a))
}

/// Regular convex n-arc (n even) built from rotated quarter-arc lenses of
/// quadrant radius r. Exact mode only: the arcsine has no surrogate.
pub fn convex_area_general<E: Evaluator>(e: &E, n: u32, r: &E::Value) -> Result<E::Value> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::InvalidFigure(format!("regular convex polyarc needs even n >= 2, got {n}")));
    }
    if !e.is_exact() {
        return Err(Error::ExactOnly("general convex polyarc area"));
    }
    check_size(r, "r")?;
    let pi = sym(e, Pi)?;
    let s2 = sym(e, Sqrt2)?;
    let nn = e.int(i64::from(n));
    let angle = pi / nn.clone();
    let s = e.sin(&angle)?;
    let c = e.cos(&angle)?;
    let s_double = e.sin(&(e.int(2) * angle))?;
    let root = e
        .sqrt(&(e.int(1) + sq(&c)))
        .ok_or(Error::ExactOnly("general convex polyarc area"))?;
    let chord = s * root;
    let sector = e.asin(&(chord.clone() / s2.clone() - s_double.clone() / (e.int(2) * s2)))?;
    let triangle = chord / e.int(2) - s_double / e.int(4);
    Ok(nn * (sector - triangle) * sq(r))
}

/// Radius of the circle carrying the centers of an n-chain of tangent
/// circles of radius r: r/sin(π/n).
pub fn chain_radius(n: u32, r: &ExactReal) -> Result<ExactReal> {
    if n < 3 {
        return Err(Error::InvalidFigure(format!("a tangent chain needs n >= 3, got {n}")));
    }
    if r.is_negative() || r.is_zero() {
        return Err(Error::NonPositive { what: "r" });
    }
    let p = r.precision();
    let angle = ExactReal::pi(p) / ExactReal::from_int(i64::from(n), p);
    Ok(r / &angle.sin())
}

/// Area of any figure, evaluated in mode `e`.
pub fn area<E: Evaluator>(e: &E, spec: &PolyarcSpec) -> Result<crate::numerics::Quantity> {
    metrics(e, spec).map(|m| m.area)
}

/// All metrics of a figure, evaluated in mode `e`.
pub fn metrics<E: Evaluator>(e: &E, spec: &PolyarcSpec) -> Result<FigureMetrics> {
    spec.validate()?;
    let v = e.constant(spec.size.value());
    let n = spec.arcs();
    let pi = || sym(e, Pi);
    match spec.family {
        Family::BarleyField => {
            let a = match &spec.size {
                Size::ArcLength(_) => v,
                Size::QuadrantRadius(_) => pi()? * v / e.int(2),
            };
            barley_field_metrics(e, &a)
        }
        Family::OxEye => {
            let a = match &spec.size {
                Size::ArcLength(_) => v,
                Size::QuadrantRadius(_) => e.int(2) * pi()? * v / e.int(3),
            };
            ox_eye_metrics(e, &a)
        }
        Family::Convex4 => {
            let r = match &spec.size {
                Size::QuadrantRadius(_) => v,
                Size::ArcLength(_) => e.int(6) * v / pi()?,
            };
            convex4_metrics(e, &r)
        }
        Family::Convex6 => convex6_metrics(e, &v),
        Family::Apusamikkum4 => {
            let a = match &spec.size {
                Size::ArcLength(_) => v,
                Size::QuadrantRadius(_) => pi()? * v / e.int(2),
            };
            apusamikkum4_metrics(e, &a)
        }
        Family::Apusamikkum3 => {
            let r = match &spec.size {
                Size::QuadrantRadius(_) => v,
                Size::ArcLength(_) => e.int(3) * v / pi()?,
            };
            apusamikkum3_metrics(e, &r)
        }
        Family::RegularConcave => {
            let a = match &spec.size {
                Size::ArcLength(_) => v,
                Size::QuadrantRadius(_) => e.int(i64::from(n) - 2) * pi()? * v / e.int(i64::from(n)),
            };
            let area = concave_area_general(e, n, &a)?;
            Ok(Builder::<E>::new().finish(e, Family::RegularConcave, area))
        }
        Family::RegularConvex => {
            let area = convex_area_general(e, n, &v)?;
            Ok(Builder::<E>::new().finish(e, Family::RegularConvex, area))
        }
    }
}

