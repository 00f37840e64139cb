use std::fs;
use std::io::Write;
use std::path::Path;

use polyarc_core::babylon::{
    context_presets, heron_sequence, surd_linear_approx, ApproximationContext, SurdSign, STANDARD,
};
use polyarc_core::geometry::{metrics, ContextEval, ExactEval, Family, FigureMetrics, PolyarcSpec, Size};
use polyarc_core::numerics::MAX_PLACES;
use polyarc_core::render::{render, scene_for, FigureId, RenderRequest, Subject};
use polyarc_core::tablet::{
    builtin_entries, default_table3_candidates, entries_for_line, entry, reproduce_table1, reproduce_table2,
    scribe_error_l6, scribe_hexagon_value, table3_search, verify_entry, verify_entry_in, Table3Row,
    VerificationReport, TABLE_PLACES,
};
use polyarc_core::{Error, ExactReal, Precision, Quantity, Rational, RoundingMode, Sexagesimal};
use serde::{Deserialize, Serialize};

use crate::args::{
    is_sexagesimal, Approx, ApproxArgs, Command, ComputeArgs, ConvertArgs, Mode, RenderArgs, SizeArgs, TableId,
    TablesArgs, VerifyArgs,
};
use crate::output::{write_pairs, Painter, Table};
use crate::CliError;

type Out<'a> = &'a mut dyn Write;

pub fn dispatch(command: Command, out: Out<'_>, p: Painter) -> Result<(), CliError> {
    match command {
        Command::Compute(a) => compute(a, out),
        Command::Verify(a) => verify(a, out, p),
        Command::Approx(a) => approx(a, out),
        Command::Tables(a) => tables(a, out, p),
        Command::Render(a) => render_cmd(a, out),
        Command::Convert(a) => convert(a, out),
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn json<T: Serialize + ?Sized>(out: Out<'_>, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn check_places(places: usize) -> Result<(), CliError> {
    if places > MAX_PLACES {
        return Err(usage(format!("at most {MAX_PLACES} sexagesimal places, got {places}")));
    }
    Ok(())
}

/// Truncated sexagesimal; a trailing "…" marks a value that does not end
/// within `places`.
fn sexa(q: &Rational, places: usize) -> Result<String, CliError> {
    let s = Sexagesimal::from_rational(q, places, RoundingMode::Truncate)?;
    let more = if s.to_rational() == *q { "" } else { "\u{2026}" };
    Ok(format!("{s}{more}"))
}

fn show(q: &Quantity, places: usize) -> Result<String, CliError> {
    Ok(match q {
        Quantity::Rational(r) => format!("{r} = {}", sexa(r, places)?),
        Quantity::Real(x) => x.to_string(),
    })
}

/// A preset name, inline JSON, or a JSON file.
fn load_context(arg: &str) -> Result<ApproximationContext, CliError> {
    if let Ok(ctx) = ApproximationContext::preset(arg) {
        return Ok(ctx);
    }
    let text = arg.trim();
    if text.starts_with('{') {
        return ApproximationContext::from_json("inline", text).map_err(|e| usage(e.to_string()));
    }
    let path = Path::new(arg);
    let contents = fs::read_to_string(path).map_err(|e| {
        let names: Vec<String> = context_presets().iter().map(|c| c.name().to_string()).collect();
        usage(format!(
            "context {arg:?} is neither a preset ({}) nor a readable JSON file: {e}",
            names.join(", ")
        ))
    })?;
    let name = path.file_stem().map_or("file".into(), |s| s.to_string_lossy().into_owned());
    ApproximationContext::from_json(name, &contents).map_err(|e| usage(e.to_string()))
}

fn default_size(family: Family) -> Size {
    match family {
        Family::Convex4 | Family::Convex6 | Family::Apusamikkum3 | Family::RegularConvex => {
            Size::QuadrantRadius(Rational::one())
        }
        _ => Size::ArcLength(Rational::one()),
    }
}

fn spec_from(family: Family, n: Option<u32>, size: SizeArgs) -> Result<PolyarcSpec, CliError> {
    let size = match (size.arc, size.radius) {
        (Some(a), _) => Size::ArcLength(a),
        (_, Some(r)) => Size::QuadrantRadius(r),
        _ => default_size(family),
    };
    PolyarcSpec::new(family, n, size).map_err(|e| usage(e.to_string()))
}

#[derive(Serialize)]
struct ComputeReport {
    spec: PolyarcSpec,
    metrics: FigureMetrics,
}

fn compute(a: ComputeArgs, out: Out<'_>) -> Result<(), CliError> {
    check_places(a.places)?;
    let spec = spec_from(a.figure, a.n, a.size)?;
    let mode = match (a.mode, &a.context) {
        (Some(Mode::Exact), Some(_)) => return Err(usage("--context needs --mode context")),
        (Some(m), _) => m,
        (None, Some(_)) => Mode::Context,
        (None, None) => Mode::Exact,
    };
    let m = match mode {
        Mode::Exact => metrics(&ExactEval::new(a.precision), &spec)?,
        Mode::Context => {
            let ctx = load_context(a.context.as_deref().unwrap_or(STANDARD))?;
            metrics(&ContextEval::new(&ctx), &spec)?
        }
    };
    if a.json {
        return json(out, &ComputeReport { spec, metrics: m });
    }
    let mut pairs = vec![("figure".to_string(), spec.family.to_string())];
    if let Some(n) = spec.n {
        pairs.push(("n".into(), n.to_string()));
    }
    pairs.push((
        "size".into(),
        match &spec.size {
            Size::ArcLength(v) => format!("a = {v}"),
            Size::QuadrantRadius(v) => format!("r = {v}"),
        },
    ));
    pairs.push((
        "mode".into(),
        match &m.mode {
            polyarc_core::geometry::ModeInfo::Exact { precision } => format!("exact, {precision} digits"),
            polyarc_core::geometry::ModeInfo::Context { context } => format!("context {context}"),
        },
    ));
    pairs.push(("area".into(), show(&m.area, a.places)?));
    for (key, value) in &m.lengths {
        pairs.push((key.to_string(), show(value, a.places)?));
    }
    write_pairs(out, &pairs)?;
    Ok(())
}

fn verify(a: VerifyArgs, out: Out<'_>, p: Painter) -> Result<(), CliError> {
    let entries = if let Some(id) = &a.id {
        vec![entry(id).ok_or_else(|| usage(format!("no entry with id {id:?}")))?]
    } else if let Some(line) = a.line {
        let found = entries_for_line(line);
        if found.is_empty() {
            return Err(usage(format!("line {line} has no circular-figure constant")));
        }
        found
    } else {
        builtin_entries()
    };
    let ctx = a.context.as_deref().map(load_context).transpose()?;
    let reports = entries
        .iter()
        .map(|e| match &ctx {
            Some(c) => verify_entry_in(e, c, a.precision),
            None => verify_entry(e, a.precision),
        })
        .collect::<Result<Vec<VerificationReport>, Error>>()?;
    let unexpected = reports.iter().filter(|r| r.is_unexpected()).count();

    if a.json {
        json(out, &reports)?;
    } else {
        let mut t = Table::new([
            "id", "line", "figure", "scribe", "recomputed", "context", "match", "exact", "error %",
        ]);
        for r in &reports {
            let verdict = match (r.matches_scribe, r.is_unexpected()) {
                (true, false) => p.good("yes"),
                (false, false) => format!("{} {}", p.bad("NO"), p.dim("(expected)")),
                (true, true) => format!("{} {}", p.bad("yes"), "(unexpected)"),
                (false, true) => format!("{} {}", p.bad("NO"), "(unexpected)"),
            };
            t.row(vec![
                r.entry.id.to_string(),
                r.entry.line.to_string(),
                r.entry.label.to_string(),
                r.entry.scribe_value.to_string(),
                sexa(&r.recomputed_rational, polyarc_core::tablet::REPORT_PLACES)?,
                r.context.clone(),
                verdict,
                r.exact_value.to_decimal_string(10),
                r.scribe_error_percent.to_decimal_string(4),
            ]);
        }
        t.write(out)?;
        let matched = reports.iter().filter(|r| r.matches_scribe).count();
        let expected = reports.iter().filter(|r| !r.matches_scribe && !r.is_unexpected()).count();
        writeln!(
            out,
            "\n{matched} of {} match the scribe; {expected} expected mismatch(es); {unexpected} unexpected.",
            reports.len()
        )?;
        if ctx.is_none() && reports.iter().any(|r| r.entry.id == "6") {
            writeln!(out)?;
            write_error_analysis(out, a.precision)?;
        }
    }
    if a.strict && unexpected > 0 {
        return Err(CliError::Strict(unexpected));
    }
    Ok(())
}

fn write_error_analysis(out: Out<'_>, precision: Precision) -> Result<(), CliError> {
    let e = scribe_error_l6(precision);
    writeln!(out, "line 6 error analysis ({} digits):", precision)?;
    let scribe = Sexagesimal::from_rational(&e.scribe_value, 8, RoundingMode::Truncate)?;
    let pairs = [
        (
            "  scribe value".to_string(),
            format!("{scribe} = {} = {}", e.scribe_value, e.scribe_value.to_decimal_string(9)),
        ),
        ("  exact 6-arc area".into(), e.exact_area.to_decimal_string(12)),
        ("  exact inscribed hexagon".into(), e.exact_hexagon.to_decimal_string(12)),
        (
            "  error, formula as printed".into(),
            format!("{}%", e.printed_formula_percent.to_decimal_string(2)),
        ),
        (
            "  error, hexagon as denominator".into(),
            format!("{}%", e.hexagon_denominator_percent.to_decimal_string(2)),
        ),
        (
            "  claimed error".into(),
            format!(
                "{}%{}",
                e.claimed_percent.to_decimal_string(1),
                if e.claim_reproduced { "" } else { " (not reproduced by either reading)" }
            ),
        ),
    ];
    write_pairs(out, &pairs)?;
    Ok(())
}

#[derive(Serialize)]
struct IterateRow {
    k: usize,
    value: Rational,
    sexagesimal: String,
}

#[derive(Serialize)]
struct HeronReport {
    radicand: Rational,
    seed: Rational,
    places: usize,
    iterates: Vec<IterateRow>,
}

#[derive(Serialize)]
struct SurdReport {
    a: Rational,
    b: Rational,
    sign: SurdSign,
    value: Rational,
    sexagesimal: String,
    exact: ExactReal,
}

#[derive(Serialize)]
struct ContextReport {
    name: String,
    values: serde_json::Value,
}

fn approx(a: ApproxArgs, out: Out<'_>) -> Result<(), CliError> {
    match a.what {
        Approx::Heron {
            radicand,
            seed,
            steps,
            places,
            json: as_json,
        } => {
            check_places(places)?;
            let trace = heron_sequence(&radicand, &seed, steps)?;
            let rows = trace
                .iterates
                .iter()
                .enumerate()
                .map(|(k, v)| {
                    Ok(IterateRow {
                        k,
                        value: v.clone(),
                        sexagesimal: sexa(v, places)?,
                    })
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            if as_json {
                return json(
                    out,
                    &HeronReport {
                        radicand,
                        seed,
                        places,
                        iterates: rows,
                    },
                );
            }
            writeln!(out, "Heron iterates of \u{221a}{radicand} from {seed}")?;
            let mut t = Table::new(["k", "value", "sexagesimal", "decimal"]);
            for r in rows {
                t.row(vec![
                    format!("x{}", r.k),
                    r.value.to_string(),
                    r.sexagesimal,
                    r.value.to_decimal_string(12),
                ]);
            }
            t.write(out)?;
        }
        Approx::Surd {
            a,
            b,
            sign,
            places,
            precision,
            json: as_json,
        } => {
            check_places(places)?;
            let value = surd_linear_approx(&a, &b, sign)?;
            let radicand = match sign {
                SurdSign::Plus => a.square() + b.clone(),
                SurdSign::Minus => a.square() - b.clone(),
            };
            let report = SurdReport {
                sexagesimal: sexa(&value, places)?,
                exact: ExactReal::sqrt_of(&radicand, precision)?,
                a,
                b,
                sign,
                value,
            };
            if as_json {
                return json(out, &report);
            }
            let op = match sign {
                SurdSign::Plus => '+',
                SurdSign::Minus => '-',
            };
            let pairs = [
                (
                    format!("\u{221a}({}\u{b2} {op} {})", report.a, report.b),
                    format!("\u{2248} {} = {}", report.value, report.sexagesimal),
                ),
                ("decimal".into(), report.value.to_decimal_string(12)),
                ("exact root".into(), report.exact.to_string()),
            ];
            write_pairs(out, &pairs)?;
        }
        Approx::Contexts { json: as_json } => {
            let presets = context_presets();
            if as_json {
                let reports: Vec<ContextReport> = presets
                    .iter()
                    .map(|c| ContextReport {
                        name: c.name().to_string(),
                        values: c.to_json(),
                    })
                    .collect();
                return json(out, &reports);
            }
            let mut t = Table::new(["context", "symbol", "value", "sexagesimal"]);
            for c in &presets {
                for (symbol, v) in c.entries() {
                    t.row(vec![c.name().to_string(), symbol.to_string(), v.to_string(), sexa(v, 5)?]);
                }
            }
            t.write(out)?;
        }
    }
    Ok(())
}

#[derive(Deserialize)]
struct Candidates {
    sqrt3: Vec<String>,
    sqrt21: Vec<String>,
}

#[derive(Serialize)]
struct Table3Report<'a> {
    target: Rational,
    sqrt3_candidates: &'a [Rational],
    sqrt21_candidates: &'a [Rational],
    rows: &'a [Table3Row],
}

fn read_candidates(path: &Path) -> Result<(Vec<Rational>, Vec<Rational>), CliError> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let raw: Candidates =
        serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let parse = |list: Vec<String>| {
        list.iter()
            .map(|s| crate::args::parse_number(s).map_err(|e| usage(format!("{}: {s:?}: {e}", path.display()))))
            .collect::<Result<Vec<_>, _>>()
    };
    Ok((parse(raw.sqrt3)?, parse(raw.sqrt21)?))
}

fn tables(a: TablesArgs, out: Out<'_>, p: Painter) -> Result<(), CliError> {
    if a.candidates.is_some() && a.table != TableId::Search {
        return Err(usage("--candidates only applies to table 3"));
    }
    match a.table {
        TableId::Heron => {
            let cells = reproduce_table1();
            if a.json {
                return json(out, &cells);
            }
            writeln!(out, "Heron iterates of \u{221a}21 ({TABLE_PLACES} places, truncated)")?;
            let mut t = Table::new(["seed", "step", "value", "printed", "sexagesimal", "printed", "match"]);
            for c in &cells {
                t.row(vec![
                    Sexagesimal::from_rational(&c.cell.seed, TABLE_PLACES, RoundingMode::Truncate)?.to_string(),
                    format!("x{}", c.cell.step),
                    c.cell.value.to_string(),
                    c.printed_fraction.to_string(),
                    c.cell.sexagesimal.to_string(),
                    c.cell.printed.to_string(),
                    p.verdict(c.fraction_matches && c.cell.matches_printed),
                ]);
            }
            t.write(out)?;
            let ok = cells.iter().filter(|c| c.fraction_matches && c.cell.matches_printed).count();
            writeln!(out, "\n{ok} of {} cells match the printed table.", cells.len())?;
        }
        TableId::Hexagon => {
            let cells = reproduce_table2();
            if a.json {
                return json(out, &cells);
            }
            writeln!(
                out,
                "(3\u{221a}3/8)(5 \u{2212} \u{221a}21) with \u{221a}3 = 7/4 and Heron iterates of \u{221a}21 ({TABLE_PLACES} places, truncated)"
            )?;
            let mut t = Table::new(["seed", "step", "value", "sexagesimal", "printed", "match"]);
            for c in &cells {
                t.row(vec![
                    Sexagesimal::from_rational(&c.seed, TABLE_PLACES, RoundingMode::Truncate)?.to_string(),
                    format!("x{}", c.step),
                    c.value.to_string(),
                    c.sexagesimal.to_string(),
                    c.printed.to_string(),
                    p.verdict(c.matches_printed),
                ]);
            }
            t.write(out)?;
            let ok = cells.iter().filter(|c| c.matches_printed).count();
            writeln!(out, "\n{ok} of {} cells match the printed table.", cells.len())?;
            for c in cells.iter().filter(|c| !c.matches_printed) {
                writeln!(
                    out,
                    "discrepancy: seed {}, x{}: recomputed {} vs printed {}",
                    Sexagesimal::from_rational(&c.seed, TABLE_PLACES, RoundingMode::Truncate)?,
                    c.step,
                    c.sexagesimal,
                    c.printed
                )?;
            }
        }
        TableId::Search => {
            let (s3, s21) = match &a.candidates {
                Some(path) => read_candidates(path)?,
                None => default_table3_candidates(),
            };
            let rows = table3_search(&s3, &s21)?;
            let top = &rows[..a.top.min(rows.len())];
            let target = scribe_hexagon_value();
            if a.json {
                return json(
                    out,
                    &Table3Report {
                        target,
                        sqrt3_candidates: &s3,
                        sqrt21_candidates: &s21,
                        rows: top,
                    },
                );
            }
            writeln!(
                out,
                "closest (3\u{221a}3/8)(5 \u{2212} \u{221a}21) to {} = {} \u{2248} {} over {} \u{d7} {} candidates",
                Sexagesimal::from_rational(&target, 8, RoundingMode::Truncate)?,
                target,
                target.to_decimal_string(10),
                s3.len(),
                s21.len()
            )?;
            let mut t = Table::new(["rank", "\u{221a}3", "\u{221a}21", "value", "decimal", "distance"]);
            for (i, r) in top.iter().enumerate() {
                t.row(vec![
                    (i + 1).to_string(),
                    r.sqrt3.to_string(),
                    r.sqrt21.to_string(),
                    r.value.to_string(),
                    r.value.to_decimal_string(10),
                    r.distance.to_decimal_string(10),
                ]);
            }
            t.write(out)?;
        }
    }
    Ok(())
}

fn render_cmd(a: RenderArgs, out: Out<'_>) -> Result<(), CliError> {
    if a.list {
        let mut t = Table::new(["id", "title"]);
        let subjects = FigureId::ALL
            .iter()
            .map(|&f| (f.name().to_string(), Subject::Figure(f)))
            .chain([("sb23397".to_string(), Subject::Sb23397)]);
        for (id, subject) in subjects {
            t.row(vec![id, scene_for(&subject)?.title]);
        }
        t.write(out)?;
        return Ok(());
    }
    let subject = match (a.subject, a.construction) {
        (Some(s), _) => {
            if a.size.arc.is_some() || a.size.radius.is_some() {
                return Err(usage("sizes apply to --construction only"));
            }
            s
        }
        (None, Some(family)) => Subject::Construction(spec_from(family, a.n, a.size)?),
        (None, None) => return Err(usage("give a figure id, sb23397, or --construction")),
    };
    let mut req = RenderRequest::new(subject);
    if let Some((w, h)) = a.canvas {
        req.width = w;
        req.height = h;
    }
    if let Some(s) = a.stroke {
        req.stroke = s;
    }
    if let Some(f) = a.fill {
        req.fill = f;
    }
    if let Some(w) = a.stroke_width {
        req.stroke_width = w;
    }
    req.show_guides = a.guides;
    let svg = render(&req).map_err(|e| match e {
        Error::InvalidRender(msg) => usage(msg),
        other => CliError::Compute(other),
    })?;
    match a.output {
        Some(path) => fs::write(path, svg)?,
        None => out.write_all(svg.as_bytes())?,
    }
    Ok(())
}

#[derive(Serialize)]
struct ConvertReport {
    rational: Rational,
    sexagesimal: String,
    /// Whether `sexagesimal` equals `rational` (no digits were cut).
    exact: bool,
}

fn convert(a: ConvertArgs, out: Out<'_>) -> Result<(), CliError> {
    check_places(a.places)?;
    let report = if is_sexagesimal(&a.value) {
        let s: Sexagesimal = a.value.parse().map_err(|e| usage(format!("{e}")))?;
        ConvertReport {
            rational: s.to_rational(),
            sexagesimal: s.to_string(),
            exact: true,
        }
    } else {
        let q: Rational = a.value.parse().map_err(|e: Error| usage(e.to_string()))?;
        let s = Sexagesimal::from_rational(&q, a.places, a.rounding.into())?;
        ConvertReport {
            exact: s.to_rational() == q,
            sexagesimal: s.to_string(),
            rational: q,
        }
    };
    if a.json {
        return json(out, &report);
    }
    if is_sexagesimal(&a.value) {
        writeln!(out, "{}", report.rational)?;
    } else {
        writeln!(out, "{}", report.sexagesimal)?;
    }
    Ok(())
}
