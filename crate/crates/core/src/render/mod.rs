//! SVG drawings of the constructions and figures, including the vase-pattern
//! reconstruction.
//!
//! Arcs are written as SVG elliptical-arc commands, never as polylines.
//! Coordinates are printed with 12 decimals, so the output is stable across
//! runs and precise enough to check tangency at 1e-9.

mod figures;
mod scene;

use std::fmt;
use std::str::FromStr;

pub use figures::construction_scene;
pub use scene::{num, Item, Layer, Scene, Shape};

use crate::error::{Error, Result};
use crate::geometry::PolyarcSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FigureId {
    Polyarcs,
    RegularPolyarcs,
    ConcaveConstruction,
    ConvexConstruction,
    LensRotation,
    BarleyField,
    OxEye,
    TwoLensOverlap,
    ThreeLensOverlap,
    Apusamikkum,
    Apusamikkum3,
}

impl FigureId {
    pub const ALL: [FigureId; 11] = [
        Self::Polyarcs,
        Self::RegularPolyarcs,
        Self::ConcaveConstruction,
        Self::ConvexConstruction,
        Self::LensRotation,
        Self::BarleyField,
        Self::OxEye,
        Self::TwoLensOverlap,
        Self::ThreeLensOverlap,
        Self::Apusamikkum,
        Self::Apusamikkum3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Polyarcs => "polyarcs",
            Self::RegularPolyarcs => "regular-polyarcs",
            Self::ConcaveConstruction => "concave-construction",
            Self::ConvexConstruction => "convex-construction",
            Self::LensRotation => "lens-rotation",
            Self::BarleyField => "barley-field",
            Self::OxEye => "ox-eye",
            Self::TwoLensOverlap => "two-lens-overlap",
            Self::ThreeLensOverlap => "three-lens-overlap",
            Self::Apusamikkum => "apusamikkum",
            Self::Apusamikkum3 => "apusamikkum-3",
        }
    }

    fn scene(self) -> Scene {
        use crate::geometry::{Family, Size};
        use crate::numerics::Rational;
        let named = |family, title: &str| {
            let spec = PolyarcSpec::new(family, None, Size::ArcLength(Rational::one())).expect("valid figure");
            let mut s = construction_scene(&spec).expect("valid figure");
            s.title = title.to_string();
            s
        };
        match self {
            Self::Polyarcs => figures::polyarcs(),
            Self::RegularPolyarcs => figures::regular_polyarcs(),
            Self::ConcaveConstruction => figures::concave_construction(),
            Self::ConvexConstruction => figures::convex_construction(),
            Self::LensRotation => figures::lens_rotation(),
            Self::BarleyField => named(Family::BarleyField, "Barley-field: a lens of two quarter arcs"),
            Self::OxEye => named(Family::OxEye, "Ox-eye: a lens of two third arcs"),
            Self::TwoLensOverlap => figures::two_lens_overlap(),
            Self::ThreeLensOverlap => figures::three_lens_overlap(),
            Self::Apusamikkum => named(Family::Apusamikkum4, "Apusamikkum: the concave 4-arc"),
            Self::Apusamikkum3 => named(Family::Apusamikkum3, "Apusamikkum of three vertices: the concave 3-arc"),
        }
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FigureId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        Self::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| Error::UnsupportedFigureId(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Subject {
    Construction(PolyarcSpec),
    Figure(FigureId),
    Sb23397,
}

impl FromStr for Subject {
    type Err = Error;
    /// A figure id or `sb23397`; constructions are built from a spec.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().eq_ignore_ascii_case("sb23397") {
            return Ok(Self::Sb23397);
        }
        s.parse().map(Self::Figure)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderRequest {
    pub subject: Subject,
    pub width: f64,
    pub height: f64,
    pub stroke: String,
    pub fill: String,
    /// Stroke width in canvas units.
    pub stroke_width: f64,
    pub show_guides: bool,
}

impl RenderRequest {
    pub fn new(subject: Subject) -> Self {
        Self {
            subject,
            width: 480.0,
            height: 480.0,
            stroke: "#1f1f1f".into(),
            fill: "#d8c8a0".into(),
            stroke_width: 1.5,
            show_guides: false,
        }
    }

    fn validate(&self) -> Result<()> {
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if !positive(self.width) || !positive(self.height) {
            return Err(Error::InvalidRender(format!("canvas must be positive, got {}x{}", self.width, self.height)));
        }
        if !positive(self.stroke_width) {
            return Err(Error::InvalidRender("stroke width must be positive".into()));
        }
        for color in [&self.stroke, &self.fill] {
            let ok = !color.is_empty()
                && color
                    .chars()
                    .all(|c| c.is_ascii_alphanumeric() || "#(),.% -".contains(c));
            if !ok {
                return Err(Error::InvalidRender(format!("unsupported color {color:?}")));
            }
        }
        Ok(())
    }
}

pub fn scene_for(subject: &Subject) -> Result<Scene> {
    match subject {
        Subject::Construction(spec) => construction_scene(spec),
        Subject::Figure(id) => Ok(id.scene()),
        Subject::Sb23397 => Ok(figures::sb23397()),
    }
}

/// An SVG 1.1 document for the request.
pub fn render(req: &RenderRequest) -> Result<String> {
    req.validate()?;
    let scene = scene_for(&req.subject)?;
    let style = scene::Style {
        stroke: &req.stroke,
        fill: &req.fill,
        stroke_width: req.stroke_width,
        guide_color: "#7a7a7a",
    };
    Ok(scene::write_svg(&scene, req.width, req.height, req.show_guides, &style))
}
