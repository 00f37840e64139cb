//! Floating-point constructions of the figures: constructive circles, guide
//! polygon and the closed arc boundary, traversed counterclockwise about the
//! origin. Used by the chord oracle and by the SVG renderer; the closed forms
//! never depend on this module.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use super::figure::{Family, PolyarcSpec, Size};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn polar(radius: f64, angle: f64) -> Self {
        Self::new(radius * angle.cos(), radius * angle.sin())
    }

    pub fn dist(self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn midpoint(self, other: Point) -> Point {
        Point::new((self.x + other.x) / 2.0, (self.y + other.y) / 2.0)
    }

    fn angle_from(self, center: Point) -> f64 {
        (self.y - center.y).atan2(self.x - center.x)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

/// A circular arc from `start` to `end`; `sweep` is the signed central angle
/// (positive = counterclockwise about `center`), |sweep| < π.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Arc {
    pub center: Point,
    pub radius: f64,
    pub start: Point,
    pub end: Point,
    pub sweep: f64,
}

impl Arc {
    /// The arc of the circle (center, radius) from `start` to `end` that
    /// subtends less than a half turn.
    pub fn between(center: Point, radius: f64, start: Point, end: Point) -> Self {
        let mut sweep = end.angle_from(center) - start.angle_from(center);
        while sweep <= -PI {
            sweep += 2.0 * PI;
        }
        while sweep > PI {
            sweep -= 2.0 * PI;
        }
        Self {
            center,
            radius,
            start,
            end,
            sweep,
        }
    }

    pub fn midpoint(&self) -> Point {
        let t = self.start.angle_from(self.center) + self.sweep / 2.0;
        Point::new(self.center.x + self.radius * t.cos(), self.center.y + self.radius * t.sin())
    }

    /// `k` points at uniform angular steps, starting at `start` and stopping
    /// one step short of `end`.
    pub fn sample(&self, k: usize) -> Vec<Point> {
        let a0 = self.start.angle_from(self.center);
        (0..k)
            .map(|j| {
                let t = a0 + self.sweep * j as f64 / k as f64;
                Point::new(self.center.x + self.radius * t.cos(), self.center.y + self.radius * t.sin())
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Construction {
    /// The constructive circles, in boundary order.
    pub circles: Vec<Circle>,
    /// Circle centers (concave) or boundary vertices (convex).
    pub polygon: Vec<Point>,
    pub boundary: Vec<Arc>,
}

/// n tangent circles of radius r whose centers lie on R = r/sin(π/n); the
/// boundary is the inner arc of each circle between its tangent points.
pub fn concave_chain(n: u32, r: f64) -> Result<Construction> {
    if n < 3 {
        return Err(Error::InvalidFigure(format!("a tangent chain needs n >= 3, got {n}")));
    }
    let step = 2.0 * PI / f64::from(n);
    let big = chain_radius_f64(n, r);
    let phase = PI / f64::from(n) - PI / 2.0;
    let centers: Vec<Point> = (0..n)
        .map(|k| Point::polar(big, phase + step * f64::from(k)))
        .collect();
    let m = centers.len();
    let touch = |k: usize| centers[k].midpoint(centers[(k + 1) % m]);
    let boundary = (0..m)
        .map(|k| Arc::between(centers[k], r, touch((k + m - 1) % m), touch(k)))
        .collect();
    Ok(Construction {
        circles: centers.iter().map(|&center| Circle { center, radius: r }).collect(),
        polygon: centers,
        boundary,
    })
}

/// Intersection of n discs of radius r centered at distance c from the
/// origin; each disc contributes the arc facing away from its center.
pub fn disc_intersection(n: u32, r: f64, c: f64) -> Result<Construction> {
    if n < 2 {
        return Err(Error::InvalidFigure(format!("a convex polyarc needs n >= 2, got {n}")));
    }
    let half = PI / f64::from(n);
    let reach = r * r - c * c * half.sin().powi(2);
    if c <= 0.0 || reach <= 0.0 {
        return Err(Error::InvalidFigure("discs do not overlap".into()));
    }
    let t = -c * half.cos() + reach.sqrt();
    let dir = |k: u32| PI / 2.0 + 2.0 * half * f64::from(k);
    let circles: Vec<Circle> = (0..n)
        .map(|k| Circle {
            center: Point::polar(c, dir(k)),
            radius: r,
        })
        .collect();
    let vertex = |k: u32| Point::polar(t, dir(k) + PI - half);
    let polygon: Vec<Point> = (0..n).map(vertex).collect();
    let boundary = (0..n)
        .map(|k| Arc::between(circles[k as usize].center, r, vertex(k), vertex((k + 1) % n)))
        .collect();
    Ok(Construction {
        circles,
        polygon,
        boundary,
    })
}

pub fn chain_radius_f64(n: u32, r: f64) -> f64 {
    r / (PI / f64::from(n)).sin()
}

/// Quadrant radius r of a figure, converting from arc length where needed.
pub fn quadrant_radius_f64(spec: &PolyarcSpec) -> f64 {
    let v = spec.size.value().to_f64();
    let a = match spec.size {
        Size::QuadrantRadius(_) => return v,
        Size::ArcLength(_) => v,
    };
    let n = f64::from(spec.arcs());
    match spec.family {
        Family::RegularConcave | Family::Apusamikkum4 | Family::Apusamikkum3 => n * a / ((n - 2.0) * PI),
        Family::BarleyField => 2.0 * a / PI,
        Family::OxEye => 3.0 * a / (2.0 * PI),
        Family::Convex4 => 6.0 * a / PI,
        Family::Convex6 | Family::RegularConvex => v,
    }
}

/// The construction of a figure. Lens-based figures use discs at r/√2 from
/// the center (quarter-arc lenses); the ox-eye uses r/2 (each circle passes
/// through the other's center).
pub fn construct(spec: &PolyarcSpec) -> Result<Construction> {
    spec.validate()?;
    let r = quadrant_radius_f64(spec);
    let n = spec.arcs();
    match spec.family {
        Family::RegularConcave | Family::Apusamikkum4 | Family::Apusamikkum3 => concave_chain(n, r),
        Family::OxEye => disc_intersection(n, r, r / 2.0),
        Family::BarleyField | Family::Convex4 | Family::Convex6 | Family::RegularConvex => {
            disc_intersection(n, r, r * FRAC_1_SQRT_2)
        }
    }
}
