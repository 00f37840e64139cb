use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polyarc_core::babylon::SurdSign;
use polyarc_core::geometry::Family;
use polyarc_core::render::Subject;
use polyarc_core::{Precision, Rational, RoundingMode, Sexagesimal};

#[derive(Debug, Parser)]
#[command(
    name = "polyarc",
    version,
    about = "Polyarc areas, Babylonian approximations and sexagesimal arithmetic for the circular figures of SMT No. 3"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Area and dimensions of a figure, exactly or under an approximation context.
    Compute(ComputeArgs),
    /// Recompute the tablet's circular-figure constants and compare them with the scribe's.
    Verify(VerifyArgs),
    /// Heron iterates, linear surd approximations and the built-in contexts.
    Approx(ApproxArgs),
    /// Reproduce the Heron tables and the √3/√21 candidate search.
    Tables(TablesArgs),
    /// Draw a construction or figure as SVG.
    Render(RenderArgs),
    /// Convert between sexagesimal and rational notation.
    Convert(ConvertArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Context,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// barley-field, ox-eye, convex-4, convex-6, apusamikkum-4, apusamikkum-3,
    /// regular-concave or regular-convex
    #[arg(value_parser = parse_family)]
    pub figure: Family,
    /// Arc count, for the regular families.
    #[arg(short, long)]
    pub n: Option<u32>,
    #[command(flatten)]
    pub size: SizeArgs,
    /// Defaults to exact, or to context when --context is given.
    #[arg(long, value_enum)]
    pub mode: Option<Mode>,
    /// A preset name, a JSON file, or inline JSON such as '{"PI": "3"}'.
    #[arg(long)]
    pub context: Option<String>,
    /// Significant decimal digits of exact values.
    #[arg(long, default_value = "30", value_parser = parse_precision)]
    pub precision: Precision,
    /// Sexagesimal places shown for rational values.
    #[arg(long, default_value_t = 5)]
    pub places: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct SizeArgs {
    /// Arc length a (a number, fraction or sexagesimal numeral).
    #[arg(short = 'a', long = "arc", visible_alias = "a", value_parser = parse_number, allow_hyphen_values = true)]
    pub arc: Option<Rational>,
    /// Quadrant (constructive circle) radius r.
    #[arg(short = 'r', long = "radius", visible_alias = "r", value_parser = parse_number, allow_hyphen_values = true)]
    pub radius: Option<Rational>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Every entry (the default).
    #[arg(long, conflicts_with_all = ["line", "id"])]
    pub all: bool,
    /// Only the entries of one tablet line.
    #[arg(long)]
    pub line: Option<u32>,
    /// A single entry, e.g. 5-total.
    #[arg(long)]
    pub id: Option<String>,
    /// Recompute under this context instead of each entry's own.
    #[arg(long)]
    pub context: Option<String>,
    /// Exit with status 3 when a match or mismatch is not the expected one.
    #[arg(long)]
    pub strict: bool,
    #[arg(long, default_value = "30", value_parser = parse_precision)]
    pub precision: Precision,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ApproxArgs {
    #[command(subcommand)]
    pub what: Approx,
}

#[derive(Debug, Subcommand)]
pub enum Approx {
    /// Iterates of x ↦ (x + N/x)/2.
    Heron {
        #[arg(value_parser = parse_number)]
        radicand: Rational,
        #[arg(value_parser = parse_number)]
        seed: Rational,
        steps: usize,
        #[arg(long, default_value_t = 5)]
        places: usize,
        #[arg(long)]
        json: bool,
    },
    /// √(a² ± b) ≈ a ± b/(2a).
    Surd {
        #[arg(value_parser = parse_number)]
        a: Rational,
        #[arg(value_parser = parse_number)]
        b: Rational,
        /// + or - (also plus or minus)
        #[arg(allow_hyphen_values = true)]
        sign: SurdSign,
        #[arg(long, default_value_t = 5)]
        places: usize,
        #[arg(long, default_value = "30", value_parser = parse_precision)]
        precision: Precision,
        #[arg(long)]
        json: bool,
    },
    /// The built-in approximation contexts.
    Contexts {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableId {
    #[value(name = "1")]
    Heron,
    #[value(name = "2")]
    Hexagon,
    #[value(name = "3")]
    Search,
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    #[arg(value_enum)]
    pub table: TableId,
    /// JSON file {"sqrt3": ["7/4", ...], "sqrt21": ["9/2", ...]} (table 3 only).
    #[arg(long)]
    pub candidates: Option<PathBuf>,
    /// Rows of table 3 to print.
    #[arg(long, default_value_t = 10)]
    pub top: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    /// A figure id or sb23397; see --list.
    #[arg(value_parser = parse_subject, required_unless_present_any = ["construction", "list"])]
    pub subject: Option<Subject>,
    /// Draw the construction of a figure family instead.
    #[arg(long, value_parser = parse_family, conflicts_with = "subject")]
    pub construction: Option<Family>,
    #[arg(short, long, requires = "construction")]
    pub n: Option<u32>,
    #[command(flatten)]
    pub size: SizeArgs,
    /// Print the figure ids and exit.
    #[arg(long, exclusive = true)]
    pub list: bool,
    /// Also draw centers, polygons and auxiliary lines.
    #[arg(long)]
    pub guides: bool,
    /// Canvas size, e.g. 640x480.
    #[arg(long = "size", value_name = "WxH", value_parser = parse_canvas)]
    pub canvas: Option<(f64, f64)>,
    #[arg(long)]
    pub stroke: Option<String>,
    #[arg(long)]
    pub fill: Option<String>,
    #[arg(long)]
    pub stroke_width: Option<f64>,
    /// Write to a file instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    /// A sexagesimal numeral (0;13,20) or a rational (2/9, 0.25, 7).
    #[arg(allow_hyphen_values = true)]
    pub value: String,
    /// Sexagesimal places when converting to sexagesimal.
    #[arg(long, default_value_t = 5)]
    pub places: usize,
    #[arg(long, visible_alias = "mode", value_enum, default_value = "truncate")]
    pub rounding: Rounding,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Rounding {
    Truncate,
    Round,
}

impl From<Rounding> for RoundingMode {
    fn from(r: Rounding) -> Self {
        match r {
            Rounding::Truncate => RoundingMode::Truncate,
            Rounding::Round => RoundingMode::Round,
        }
    }
}

pub fn is_sexagesimal(text: &str) -> bool {
    text.contains(';') || text.contains(',')
}

/// A rational, decimal or sexagesimal numeral.
pub fn parse_number(text: &str) -> Result<Rational, String> {
    if is_sexagesimal(text) {
        text.parse::<Sexagesimal>()
            .map(|s| s.to_rational())
            .map_err(|e| e.to_string())
    } else {
        text.parse::<Rational>().map_err(|e| e.to_string())
    }
}

fn parse_family(text: &str) -> Result<Family, String> {
    text.parse().map_err(|e: polyarc_core::Error| e.to_string())
}

fn parse_subject(text: &str) -> Result<Subject, String> {
    text.parse()
        .map_err(|e: polyarc_core::Error| format!("{e} (see `polyarc render --list`)"))
}

fn parse_precision(text: &str) -> Result<Precision, String> {
    let digits: u32 = text.parse().map_err(|_| format!("not a digit count: {text:?}"))?;
    Precision::new(digits).map_err(|e| e.to_string())
}

fn parse_canvas(text: &str) -> Result<(f64, f64), String> {
    let bad = || format!("expected WIDTHxHEIGHT with positive numbers, got {text:?}");
    let (w, h) = text.split_once(['x', 'X']).ok_or_else(bad)?;
    let w: f64 = w.trim().parse().map_err(|_| bad())?;
    let h: f64 = h.trim().parse().map_err(|_| bad())?;
    if !(w.is_finite() && h.is_finite() && w > 0.0 && h > 0.0) {
        return Err(bad());
    }
    Ok((w, h))
}
