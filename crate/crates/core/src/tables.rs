//! TSV renderings of the single-fault syndrome tables for the built-in codes.
//!
//! Rows follow the fault enumeration order: no error, X on each qubit, Y on
//! each qubit, Z on each qubit, then one flip per syndrome bit. Syndrome
//! bits are comma-joined inside a cell.

use std::fmt;
use std::str::FromStr;

use crate::code::{five_qubit, steane_alternative, steane_css, CheckSet};
use crate::error::{Error, Result};
use crate::redundancy::parity_augment;
use crate::symplectic::{Pauli, PauliString};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TableId {
    /// Five-qubit code, bare generators.
    I,
    /// Five-qubit code with the redundant product of all generators.
    II,
    /// Steane code, CSS generators against the alternative generating set.
    III,
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "I" | "1" => Ok(TableId::I),
            "II" | "2" => Ok(TableId::II),
            "III" | "3" => Ok(TableId::III),
            other => Err(Error::Domain(format!(
                "unknown table {other:?}, expected I, II or III"
            ))),
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableId::I => "I",
            TableId::II => "II",
            TableId::III => "III",
        })
    }
}

/// Row label and one cell per column; `None` renders as `N/A`.
pub type Row = (String, Vec<Option<String>>);

fn bit_header(prefix: &str, m: usize) -> String {
    (0..m)
        .map(|i| format!("{prefix}{i}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn single_errors(n: usize) -> impl Iterator<Item = PauliString> {
    Pauli::NONTRIVIAL
        .into_iter()
        .flat_map(move |p| (0..n).map(move |q| PauliString::single(n, q, p)))
}

fn unit_cell(m: usize, bit: usize) -> String {
    (0..m)
        .map(|i| if i == bit { "1" } else { "0" })
        .collect::<Vec<_>>()
        .join(",")
}

/// Rows for the data errors of weight at most one, one column per check set.
fn data_rows(sets: &[&CheckSet]) -> Vec<Row> {
    let n = sets[0].n();
    let mut rows = vec![(
        "No error".to_string(),
        sets.iter()
            .map(|c| Some(unit_cell(c.m(), usize::MAX)))
            .collect(),
    )];
    for e in single_errors(n) {
        let v = e.error_vector();
        let cells = sets
            .iter()
            .map(|c| Some(c.syndrome_unchecked(&v).to_tuple_string()))
            .collect();
        rows.push((e.to_string(), cells));
    }
    rows
}

fn flip_rows(prefix: &str, m: usize, column: usize, columns: usize) -> Vec<Row> {
    (0..m)
        .map(|bit| {
            let cells = (0..columns)
                .map(|c| (c == column).then(|| unit_cell(m, bit)))
                .collect();
            (format!("{prefix}{bit} flip"), cells)
        })
        .collect()
}

/// Header cells and rows of a table.
pub fn table_rows(which: TableId) -> (Vec<String>, Vec<Row>) {
    match which {
        TableId::I => {
            let c = CheckSet::from_generators(&five_qubit());
            (
                vec!["Error".into(), bit_header("s", c.m())],
                data_rows(&[&c]),
            )
        }
        TableId::II => {
            let c = parity_augment(&five_qubit());
            let mut rows = data_rows(&[&c]);
            rows.extend(flip_rows("s", c.m(), 0, 1));
            (vec!["Error".into(), bit_header("s", c.m())], rows)
        }
        TableId::III => {
            let css = CheckSet::from_generators(&steane_css());
            let alt = CheckSet::from_generators(&steane_alternative());
            let mut rows = data_rows(&[&css, &alt]);
            rows.extend(flip_rows("s", css.m(), 0, 2));
            rows.extend(flip_rows("s'", alt.m(), 1, 2));
            (
                vec![
                    "Error".into(),
                    bit_header("s", css.m()),
                    bit_header("s'", alt.m()),
                ],
                rows,
            )
        }
    }
}

/// The table as TSV text, header first, newline-terminated.
pub fn render_table(which: TableId) -> String {
    let (header, rows) = table_rows(which);
    let mut out = header.join("\t");
    out.push('\n');
    for (label, cells) in rows {
        out.push_str(&label);
        for cell in cells {
            out.push('\t');
            out.push_str(cell.as_deref().unwrap_or("N/A"));
        }
        out.push('\n');
    }
    out
}
