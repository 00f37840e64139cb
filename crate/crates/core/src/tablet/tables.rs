//! The √21 iterates, the hexagon approximations built on them, and the
//! search for the surrogate pair closest to the line-6 constant.

use std::cmp::Ordering;

use serde::Serialize;

use crate::babylon::{heron_sequence, heron_step, ApproximationContext, IrrationalSymbol};
use crate::error::{Error, Result};
use crate::geometry::{convex6_metrics, ContextEval};
use crate::numerics::{parse_sexagesimal, Rational, RoundingMode, Sexagesimal};

/// Sexagesimal places shown in the tables.
pub const TABLE_PLACES: usize = 5;

fn q(n: i64, d: i64) -> Rational {
    Rational::frac(n, d)
}

fn show(x: &Rational) -> Sexagesimal {
    Sexagesimal::from_rational(x, TABLE_PLACES, RoundingMode::Truncate).expect("few places")
}

fn printed(s: &str) -> Sexagesimal {
    parse_sexagesimal(s).expect("valid printed cell")
}

pub fn table_seeds() -> [Rational; 3] {
    [q(4, 1), q(5, 1), q(9, 2)]
}

// Cells as printed, rows x0 = 4, 5, 4;30 and columns x1..x3.
const TABLE1_FRACTIONS: [[(i64, i64); 3]; 3] = [
    [(37, 8), (2713, 592), (14720113, 3212192)],
    [(23, 5), (527, 115), (277727, 60605)],
    [(55, 12), (6049, 1320), (73180801, 15969360)],
];

const TABLE1_SEXAGESIMAL: [[&str; 3]; 3] = [
    ["4;37,30", "4;34,57,58,22,42", "4;34,57,16,21,3"],
    ["4;36", "4;34,57,23,28,41", "4;34,57,16,21,0"],
    ["4;35", "4;34,57,16,21,49", "4;34,57,16,21,0"],
];

const TABLE2_SEXAGESIMAL: [[&str; 3]; 3] = [
    ["0;14,45,56,13", "0;16,25,18,51,4", "0;16,26,9,53,40"],
    ["0;15,45", "0;16,26,5,13,2", "0;16,26,9,53,42"],
    ["0;16,24,22,30", "0;16,26,9,53,10", "0;16,26,9,53,42"],
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableCell {
    pub seed: Rational,
    /// Iterate index, 1..=3.
    pub step: usize,
    pub value: Rational,
    #[serde(serialize_with = "super::as_text")]
    pub sexagesimal: Sexagesimal,
    #[serde(serialize_with = "super::as_text")]
    pub printed: Sexagesimal,
    pub matches_printed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table1Cell {
    #[serde(flatten)]
    pub cell: TableCell,
    pub printed_fraction: Rational,
    pub fraction_matches: bool,
}

/// Heron iterates of √21 from 4, 5 and 4;30, three steps each.
pub fn reproduce_table1() -> Vec<Table1Cell> {
    let mut out = Vec::with_capacity(9);
    for (row, seed) in table_seeds().iter().enumerate() {
        let trace = heron_sequence(&Rational::integer(21), seed, 3).expect("positive inputs");
        for step in 1..=3 {
            let value = trace.iterate(step).expect("three steps").clone();
            let (n, d) = TABLE1_FRACTIONS[row][step - 1];
            let printed_fraction = q(n, d);
            let sexagesimal = show(&value);
            let printed = printed(TABLE1_SEXAGESIMAL[row][step - 1]);
            out.push(Table1Cell {
                fraction_matches: value == printed_fraction,
                printed_fraction,
                cell: TableCell {
                    seed: seed.clone(),
                    step,
                    matches_printed: sexagesimal == printed,
                    value,
                    sexagesimal,
                    printed,
                },
            });
        }
    }
    out
}

fn hexagon_area(sqrt3: &Rational, sqrt21: &Rational) -> Result<Rational> {
    let ctx = ApproximationContext::new(format!("\u{221a}3={sqrt3}, \u{221a}21={sqrt21}"))
        .with(IrrationalSymbol::Sqrt3, sqrt3.clone())?
        .with(IrrationalSymbol::Sqrt21, sqrt21.clone())?;
    let m = convex6_metrics(&ContextEval::new(&ctx), &Rational::one())?;
    Ok(m.area.as_rational().cloned().expect("context mode is rational"))
}

/// (3√3/8)(5 − x) with √3 ≈ 7/4 for every iterate x of the first table,
/// compared with the printed cells.
pub fn reproduce_table2() -> Vec<TableCell> {
    reproduce_table1()
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            let value = hexagon_area(&q(7, 4), &c.cell.value).expect("positive surrogates");
            let sexagesimal = show(&value);
            let printed = printed(TABLE2_SEXAGESIMAL[i / 3][i % 3]);
            TableCell {
                seed: c.cell.seed,
                step: c.cell.step,
                matches_printed: sexagesimal == printed,
                value,
                sexagesimal,
                printed,
            }
        })
        .collect()
}

/// The line-6 constant 0;16,26,46,40.
pub fn scribe_hexagon_value() -> Rational {
    q(8881, 32400)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table3Row {
    pub sqrt3: Rational,
    pub sqrt21: Rational,
    pub value: Rational,
    pub distance: Rational,
}

/// Every (√3, √21) pair ranked by distance of (3√3/8)(5 − √21) to the
/// line-6 constant; ties go to the smaller √3 denominator, then the smaller
/// √21 denominator.
pub fn table3_search(sqrt3: &[Rational], sqrt21: &[Rational]) -> Result<Vec<Table3Row>> {
    if sqrt3.is_empty() {
        return Err(Error::EmptyCandidates("\u{221a}3"));
    }
    if sqrt21.is_empty() {
        return Err(Error::EmptyCandidates("\u{221a}21"));
    }
    let target = scribe_hexagon_value();
    let mut rows = Vec::with_capacity(sqrt3.len() * sqrt21.len());
    for s3 in sqrt3 {
        for s21 in sqrt21 {
            let value = hexagon_area(s3, s21)?;
            rows.push(Table3Row {
                sqrt3: s3.clone(),
                sqrt21: s21.clone(),
                distance: (&value - &target).abs(),
                value,
            });
        }
    }
    rows.sort_by(|a, b| {
        a.distance
            .cmp(&b.distance)
            .then_with(|| a.sqrt3.denom().cmp(b.sqrt3.denom()))
            .then_with(|| a.sqrt21.denom().cmp(b.sqrt21.denom()))
            .then_with(|| a.sqrt3.cmp(&b.sqrt3))
            .then_with(|| a.sqrt21.cmp(&b.sqrt21))
            .then(Ordering::Equal)
    });
    Ok(rows)
}

/// Initial guesses of the default search grid: 13 for √3 (1.0, 1.1, …, 2.2)
/// and 11 for √21 (4.0, 4.1, …, 5.0).
pub fn default_table3_seeds() -> (Vec<Rational>, Vec<Rational>) {
    let tenths = |from: i64, to: i64| (from..=to).map(|k| q(k, 10)).collect::<Vec<_>>();
    (tenths(10, 22), tenths(40, 50))
}

/// The default grid: one Heron step from each seed, duplicates removed.
///
/// The published grid is only available as an image; this reconstruction
/// contains the pair the text singles out (√3 ≈ 62/35, √21 ≈ 367/80).
pub fn default_table3_candidates() -> (Vec<Rational>, Vec<Rational>) {
    let (s3, s21) = default_table3_seeds();
    let step = |n: i64, seeds: Vec<Rational>| {
        let mut out: Vec<Rational> = Vec::new();
        for s in seeds {
            let x = heron_step(&Rational::integer(n), &s);
            if !out.contains(&x) {
                out.push(x);
            }
        }
        out
    };
    (step(3, s3), step(21, s21))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table1_matches_in_full() {
        let t = reproduce_table1();
        assert_eq!(t.len(), 9);
        assert!(t.iter().all(|c| c.fraction_matches && c.cell.matches_printed));
        assert_eq!(t[3].cell.sexagesimal.to_string(), "4;36");
        assert_eq!(t[6].cell.value, q(55, 12));
    }

    #[test]
    fn table1_is_the_heron_sequence() {
        let t = reproduce_table1();
        let from5 = heron_sequence(&Rational::integer(21), &q(5, 1), 3).unwrap();
        assert_eq!(&t[5].cell.value, from5.last());
    }

    #[test]
    fn table2_cells() {
        let t = reproduce_table2();
        assert_eq!(t[3].value, q(21, 80));
        assert_eq!(t[3].sexagesimal.to_string(), "0;15,45");
        assert_eq!(t[6].value, q(35, 128));
        assert_eq!(t[0].value, q(63, 256));
        assert_eq!(t[0].sexagesimal.to_string(), "0;14,45,56,15");
        assert!(!t[0].matches_printed);
        // the second printed cell is off as well: 5187/18944 = 0;16,25,42,18,51,…
        assert_eq!(t[1].value, q(5187, 18944));
        assert_eq!(t[1].sexagesimal.to_string(), "0;16,25,42,18,51");
        assert!(!t[1].matches_printed);
        assert_eq!(t.iter().filter(|c| c.matches_printed).count(), 7);
    }

    #[test]
    fn default_search_finds_the_shaded_cell() {
        let (s3, s21) = default_table3_candidates();
        let (seeds3, seeds21) = default_table3_seeds();
        assert_eq!((seeds3.len(), seeds21.len()), (13, 11));
        let rows = table3_search(&s3, &s21).unwrap();
        let best = &rows[0];
        assert_eq!((best.sqrt3.clone(), best.sqrt21.clone()), (q(62, 35), q(367, 80)));
        assert_eq!(best.value, q(3069, 11200));
        assert_eq!(best.value.to_decimal_string(10), "0.2740178571");
        assert!(rows.windows(2).all(|w| w[0].distance <= w[1].distance));
    }

    #[test]
    fn single_pair_and_errors() {
        let rows = table3_search(&[q(7, 4)], &[q(23, 5)]).unwrap();
        assert_eq!(rows[0].value, q(21, 80));
        assert_eq!(rows[0].value.to_decimal_string(4), "0.2625");
        assert!(table3_search(&[], &[q(23, 5)]).is_err());
        assert!(table3_search(&[q(7, 4)], &[]).is_err());
    }

    #[test]
    fn ten_place_renderings_never_hit_the_scribe_value() {
        let s3 = Rational::from_decimal_str("1.7320508076").unwrap();
        let s21 = Rational::from_decimal_str("4.5825756950").unwrap();
        let rows = table3_search(&[s3], &[s21]).unwrap();
        assert!(rows[0].distance.is_positive());
    }

    #[test]
    fn scribe_decimal() {
        assert_eq!(scribe_hexagon_value().to_decimal_string(9), "0.274104938");
        assert_eq!(parse_sexagesimal("0;16,26,46,40").unwrap().to_rational(), scribe_hexagon_value());
    }
}
