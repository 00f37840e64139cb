//! A minimal drawing model in mathematical coordinates and its SVG writer.

use std::fmt::Write as _;

use crate::geometry::{Arc, Circle, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layer {
    /// Constructive circles.
    Construction,
    /// The figure itself, filled.
    Figure,
    /// Auxiliary lines, polygons and centers; only drawn with guides on.
    Guide,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Shape {
    Circle(Circle),
    /// Closed boundary made of arcs.
    Region(Vec<Arc>),
    Polygon(Vec<Point>),
    Segment(Point, Point),
    Dot(Point),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Item {
    pub layer: Layer,
    pub shape: Shape,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Scene {
    pub title: String,
    pub note: Option<String>,
    pub items: Vec<Item>,
}

impl Scene {
    pub fn new(title: impl Into<String>) -> Self {
        Self {
            title: title.into(),
            note: None,
            items: Vec::new(),
        }
    }

    pub fn add(&mut self, layer: Layer, shape: Shape) {
        self.items.push(Item { layer, shape });
    }

    /// Append `other` moved by a rigid motion `f` (rotation and/or
    /// translation, so arcs stay arcs with the same sweep).
    pub fn extend_mapped(&mut self, other: Scene, f: impl Fn(Point) -> Point) {
        for item in other.items {
            let shape = match item.shape {
                Shape::Circle(c) => Shape::Circle(Circle {
                    center: f(c.center),
                    radius: c.radius,
                }),
                Shape::Region(arcs) => Shape::Region(
                    arcs.into_iter()
                        .map(|a| Arc {
                            center: f(a.center),
                            start: f(a.start),
                            end: f(a.end),
                            ..a
                        })
                        .collect(),
                ),
                Shape::Polygon(ps) => Shape::Polygon(ps.into_iter().map(&f).collect()),
                Shape::Segment(a, b) => Shape::Segment(f(a), f(b)),
                Shape::Dot(p) => Shape::Dot(f(p)),
            };
            self.items.push(Item {
                layer: item.layer,
                shape,
            });
        }
    }

    /// (min x, min y, max x, max y) over the items drawn.
    pub fn bounds(&self, guides: bool) -> Option<(f64, f64, f64, f64)> {
        let mut b: Option<(f64, f64, f64, f64)> = None;
        let mut grow = |p: Point, pad: f64| {
            let (x0, y0, x1, y1) = b.unwrap_or((p.x, p.y, p.x, p.y));
            b = Some((x0.min(p.x - pad), y0.min(p.y - pad), x1.max(p.x + pad), y1.max(p.y + pad)));
        };
        for item in self.items.iter().filter(|i| guides || i.layer != Layer::Guide) {
            match &item.shape {
                Shape::Circle(c) => grow(c.center, c.radius),
                Shape::Region(arcs) => {
                    for a in arcs {
                        for p in a.sample(32) {
                            grow(p, 0.0);
                        }
                        grow(a.end, 0.0);
                    }
                }
                Shape::Polygon(ps) => ps.iter().for_each(|&p| grow(p, 0.0)),
                Shape::Segment(p, q) => {
                    grow(*p, 0.0);
                    grow(*q, 0.0);
                }
                Shape::Dot(p) => grow(*p, 0.0),
            }
        }
        b
    }
}

/// Fixed-point with trailing zeros removed; never "-0".
pub fn num(x: f64) -> String {
    let s = format!("{x:.12}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" || s.is_empty() {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub struct Style<'a> {
    pub stroke: &'a str,
    pub fill: &'a str,
    pub stroke_width: f64,
    pub guide_color: &'a str,
}

fn path_data(arcs: &[Arc]) -> String {
    let mut d = String::new();
    if let Some(first) = arcs.first() {
        let _ = write!(d, "M {} {}", num(first.start.x), num(first.start.y));
    }
    for a in arcs {
        let large = u8::from(a.sweep.abs() > std::f64::consts::PI);
        let sweep = u8::from(a.sweep > 0.0);
        let _ = write!(
            d,
            " A {r} {r} 0 {large} {sweep} {} {}",
            num(a.end.x),
            num(a.end.y),
            r = num(a.radius)
        );
    }
    d.push_str(" Z");
    d
}

/// Writes the scene into a `width × height` canvas, scene center at the
/// canvas center, with a 5% margin.
pub fn write_svg(scene: &Scene, width: f64, height: f64, guides: bool, style: &Style<'_>) -> String {
    let (x0, y0, x1, y1) = scene.bounds(guides).unwrap_or((-1.0, -1.0, 1.0, 1.0));
    let (w, h) = ((x1 - x0).max(1e-9), (y1 - y0).max(1e-9));
    let scale = (0.9 * width / w).min(0.9 * height / h);
    let (mx, my) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
    let line = style.stroke_width / scale;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        num(width),
        num(height),
        num(width),
        num(height)
    );
    out.push_str(
        "<!-- Coordinates inside the group are mathematical units: y points up, the scene's center \
         is placed at the canvas center, and the transform scales them onto the canvas. -->\n",
    );
    let _ = writeln!(out, "<title>{}</title>", escape(&scene.title));
    if let Some(note) = &scene.note {
        let _ = writeln!(out, "<desc>{}</desc>", escape(note));
    }
    let _ = writeln!(
        out,
        "<g transform=\"translate({} {}) scale({} {}) translate({} {})\" stroke-linejoin=\"round\">",
        num(width / 2.0),
        num(height / 2.0),
        num(scale),
        num(-scale),
        num(-mx),
        num(-my)
    );
    let draw = |out: &mut String, layer: Layer| {
        for item in scene.items.iter().filter(|i| i.layer == layer) {
            let (stroke, dash, fill) = match layer {
                Layer::Construction => (style.stroke, String::new(), "none"),
                Layer::Figure => (style.stroke, String::new(), style.fill),
                Layer::Guide => (style.guide_color, format!(" stroke-dasharray=\"{} {}\"", num(4.0 * line), num(3.0 * line)), "none"),
            };
            let width = if layer == Layer::Figure { 1.5 * line } else { line };
            let common = format!("stroke=\"{stroke}\" stroke-width=\"{}\"{dash}", num(width));
            let _ = match &item.shape {
                Shape::Circle(c) => writeln!(
                    out,
                    "<circle class=\"{}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{fill}\" {common}/>",
                    if layer == Layer::Guide { "guide" } else { "construction" },
                    num(c.center.x),
                    num(c.center.y),
                    num(c.radius)
                ),
                Shape::Region(arcs) => writeln!(
                    out,
                    "<path class=\"{}\" d=\"{}\" fill=\"{fill}\" {common}/>",
                    if layer == Layer::Figure { "figure" } else { "outline" },
                    path_data(arcs)
                ),
                Shape::Polygon(ps) => {
                    let pts: Vec<String> = ps.iter().map(|p| format!("{},{}", num(p.x), num(p.y))).collect();
                    writeln!(out, "<polygon class=\"guide\" points=\"{}\" fill=\"none\" {common}/>", pts.join(" "))
                }
                Shape::Segment(p, q) => writeln!(
                    out,
                    "<line class=\"guide\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" {common}/>",
                    num(p.x),
                    num(p.y),
                    num(q.x),
                    num(q.y)
                ),
                Shape::Dot(p) => writeln!(
                    out,
                    "<circle class=\"center\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\" stroke=\"none\"/>",
                    num(p.x),
                    num(p.y),
                    num(2.0 * line),
                    style.guide_color
                ),
            };
        }
    };
    draw(&mut out, Layer::Construction);
    draw(&mut out, Layer::Figure);
    if guides {
        draw(&mut out, Layer::Guide);
    }
    out.push_str("</g>\n</svg>\n");
    out
}
