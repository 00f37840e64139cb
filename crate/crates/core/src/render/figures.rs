use std::f64::consts::{FRAC_1_SQRT_2, PI};

use super::scene::{Layer, Scene, Shape};
use crate::error::Result;
use crate::geometry::{
    chain_radius_f64, concave_chain, construct, disc_intersection, Arc, Circle, Construction, Family, Point,
    PolyarcSpec, Size,
};
use crate::numerics::Rational;

fn unit(family: Family, n: Option<u32>) -> PolyarcSpec {
    PolyarcSpec::new(family, n, Size::QuadrantRadius(Rational::one())).expect("valid unit figure")
}

fn rotate(angle: f64) -> impl Fn(Point) -> Point {
    let (s, c) = angle.sin_cos();
    move |p| Point::new(c * p.x - s * p.y, s * p.x + c * p.y)
}

/// Circles, filled boundary and the generic guides of a construction.
fn base_scene(title: &str, c: &Construction, concave: bool) -> Scene {
    let mut s = Scene::new(title);
    for circle in &c.circles {
        s.add(Layer::Construction, Shape::Circle(*circle));
    }
    s.add(Layer::Figure, Shape::Region(c.boundary.clone()));
    s.add(Layer::Guide, Shape::Polygon(c.polygon.clone()));
    for circle in &c.circles {
        s.add(Layer::Guide, Shape::Dot(circle.center));
    }
    if concave {
        let big = c.circles[0].center.dist(Point::new(0.0, 0.0));
        s.add(
            Layer::Guide,
            Shape::Circle(Circle {
                center: Point::new(0.0, 0.0),
                radius: big,
            }),
        );
    }
    s
}

/// The construction of one figure with its figure-specific guides.
pub fn construction_scene(spec: &PolyarcSpec) -> Result<Scene> {
    let c = construct(spec)?;
    let title = match spec.n {
        Some(n) => format!("{} (n = {n})", spec.family),
        None => spec.family.to_string(),
    };
    let mut s = base_scene(&title, &c, spec.family.is_concave());
    let o = Point::new(0.0, 0.0);
    let vertices: Vec<Point> = c.boundary.iter().map(|a| a.start).collect();
    let mids: Vec<Point> = c.boundary.iter().map(Arc::midpoint).collect();
    match spec.family {
        Family::BarleyField | Family::OxEye => {
            // length between the two vertices, width across the arc midpoints
            s.add(Layer::Guide, Shape::Segment(vertices[0], vertices[1]));
            s.add(Layer::Guide, Shape::Segment(mids[0], mids[1]));
        }
        Family::Convex6 => {
            for v in &vertices {
                s.add(Layer::Guide, Shape::Segment(o, *v));
            }
        }
        Family::Apusamikkum4 => {
            s.add(Layer::Guide, Shape::Segment(vertices[0], vertices[2]));
            s.add(Layer::Guide, Shape::Segment(mids[1], mids[3]));
        }
        _ => {}
    }
    Ok(s)
}

/// Lays scenes out left to right, vertically centered, with a gap.
fn row(title: &str, scenes: Vec<Scene>) -> Scene {
    let mut out = Scene::new(title);
    let mut x = 0.0;
    for sc in scenes {
        let Some((x0, y0, x1, y1)) = sc.bounds(true) else { continue };
        let dx = x - x0;
        let dy = -(y0 + y1) / 2.0;
        out.extend_mapped(sc, |p| Point::new(p.x + dx, p.y + dy));
        x += (x1 - x0) + 0.5;
    }
    out
}

pub fn polyarcs() -> Scene {
    row(
        "Polyarcs: concave 3-arc, convex 2-arc, ox-eye, concave 4-arc",
        vec![
            construction_scene(&unit(Family::Apusamikkum3, None)).expect("valid"),
            construction_scene(&unit(Family::BarleyField, None)).expect("valid"),
            construction_scene(&unit(Family::OxEye, None)).expect("valid"),
            construction_scene(&unit(Family::Apusamikkum4, None)).expect("valid"),
        ],
    )
}

pub fn regular_polyarcs() -> Scene {
    let mut scenes = Vec::new();
    for n in [3, 4, 5] {
        let c = disc_intersection(n, 1.0, FRAC_1_SQRT_2).expect("overlapping discs");
        scenes.push(base_scene(&format!("convex {n}-arc"), &c, false));
    }
    for n in [3, 5, 6] {
        let c = concave_chain(n, 1.0).expect("n >= 3");
        scenes.push(base_scene(&format!("concave {n}-arc"), &c, true));
    }
    row("Regular convex and concave polyarcs", scenes)
}

pub fn concave_construction() -> Scene {
    let c = concave_chain(8, 1.0).expect("n >= 3");
    let mut s = base_scene("Regular concave 8-arc from a chain of tangent circles", &c, true);
    s.note = Some(format!("centers on R = r/sin(\u{3c0}/8) = {:.6} r", chain_radius_f64(8, 1.0)));
    s
}

pub fn convex_construction() -> Scene {
    let c = disc_intersection(5, 1.0, FRAC_1_SQRT_2).expect("overlapping discs");
    let mut s = base_scene("Regular convex 5-arc: inscribed polygon plus circular segments", &c, false);
    for v in &c.polygon {
        s.add(Layer::Guide, Shape::Segment(Point::new(0.0, 0.0), *v));
    }
    s
}

/// Quarter-arc lenses rotated m times about their common center; their
/// intersection is the convex 2m-arc.
fn lens_overlap(title: &str, m: u32, spec: Option<&PolyarcSpec>) -> Result<Scene> {
    let mut s = match spec {
        Some(spec) => construction_scene(spec)?,
        None => base_scene(
            title,
            &disc_intersection(2 * m, 1.0, FRAC_1_SQRT_2).expect("overlapping discs"),
            false,
        ),
    };
    s.title = title.to_string();
    let lens = disc_intersection(2, 1.0, FRAC_1_SQRT_2).expect("overlapping discs");
    for k in 0..m {
        let mut outline = Scene::default();
        outline.add(Layer::Construction, Shape::Region(lens.boundary.clone()));
        s.extend_mapped(outline, rotate(PI * f64::from(k) / f64::from(m)));
    }
    Ok(s)
}

pub fn lens_rotation() -> Scene {
    lens_overlap("A quarter-arc lens rotated three times: convex 6-arc", 3, None).expect("valid")
}

pub fn two_lens_overlap() -> Scene {
    let mut s = lens_overlap("Two perpendicular lenses: convex 4-arc", 2, Some(&unit(Family::Convex4, None)))
        .expect("valid");
    s.note = Some("guides: the inner square of the four vertices".into());
    s
}

pub fn three_lens_overlap() -> Scene {
    let mut s = lens_overlap("Three lenses: convex 6-arc", 3, Some(&unit(Family::Convex6, None))).expect("valid");
    s.note = Some("guides: inscribed hexagon and its six triangles".into());
    s
}

/// Five unit circles chained around a central circle that touches all of
/// them; each gap between two neighbours and the center is a concave 3-arc.
pub fn sb23397() -> Scene {
    let n = 5;
    let big = chain_radius_f64(n, 1.0);
    let inner = big - 1.0;
    let chain = concave_chain(n, 1.0).expect("n >= 3");
    let mut s = Scene::new("Vase pattern: five tangent circles around one, with five concave 3-arcs");
    s.note = Some(format!(
        "Reconstruction: circle sizes are not recorded, so the tangency-forced layout is used \
         (five unit circles on R = 1/sin(\u{3c0}/5) = {big:.6}, central radius R - 1 = {inner:.6})."
    ));
    let o = Point::new(0.0, 0.0);
    s.add(Layer::Construction, Shape::Circle(Circle { center: o, radius: inner }));
    let centers = chain.polygon.clone();
    for c in &chain.circles {
        s.add(Layer::Construction, Shape::Circle(*c));
    }
    let m = centers.len();
    let touch_center = |k: usize| {
        let c = centers[k];
        let d = c.dist(o);
        Point::new(c.x * inner / d, c.y * inner / d)
    };
    for k in 0..m {
        let next = (k + 1) % m;
        let between = centers[k].midpoint(centers[next]);
        let arcs = vec![
            Arc::between(o, inner, touch_center(next), touch_center(k)),
            Arc::between(centers[k], 1.0, touch_center(k), between),
            Arc::between(centers[next], 1.0, between, touch_center(next)),
        ];
        s.add(Layer::Figure, Shape::Region(arcs));
    }
    s.add(Layer::Guide, Shape::Polygon(centers.clone()));
    for c in centers {
        s.add(Layer::Guide, Shape::Dot(c));
        s.add(Layer::Guide, Shape::Segment(o, c));
    }
    s
}
