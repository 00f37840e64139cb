//! The circular-figure constants of the tablet and their recomputation.
//!
//! Mismatches are results, not failures: line 6 and two cells of the
//! hexagon table are reported as they fall.

mod entries;
mod error_analysis;
mod tables;
mod verify;

pub use entries::{builtin_entries, entries_for_line, entry, Recipe, TabletEntry, TabletQuantity};
pub use error_analysis::{scribe_error_l6, ScribeError};
pub use tables::{
    default_table3_candidates, default_table3_seeds, reproduce_table1, reproduce_table2, scribe_hexagon_value,
    table3_search, table_seeds, Table1Cell, Table3Row, TableCell, TABLE_PLACES,
};
pub use verify::{verify_all, verify_entry, verify_entry_in, VerificationReport, REPORT_PLACES};

fn as_text<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}
