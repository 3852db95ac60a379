//! Tabular form of a bipolar soft set: one row per object, one column per
//! positive parameter, each cell an `(a, b)` indicator pair.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::objects::ObjectSet;
use crate::set::BipolarSoftSet;
use crate::space::ParameterSpace;

/// One `(a_ij, b_ij)` entry. `(1, 1)` has no representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CellValue {
    /// `(0,1)`: the object is in `G(f(e))`.
    Negative,
    /// `(0,0)`
    Neutral,
    /// `(1,0)`: the object is in `F(e)`.
    Positive,
}

impl CellValue {
    pub const ALL: [CellValue; 3] = [CellValue::Positive, CellValue::Negative, CellValue::Neutral];

    pub fn from_pair(a: u8, b: u8) -> Result<Self> {
        match (a, b) {
            (1, 0) => Ok(CellValue::Positive),
            (0, 1) => Ok(CellValue::Negative),
            (0, 0) => Ok(CellValue::Neutral),
            _ => Err(Error::InvalidCell(a, b)),
        }
    }

    pub fn pair(self) -> (u8, u8) {
        match self {
            CellValue::Positive => (1, 0),
            CellValue::Negative => (0, 1),
            CellValue::Neutral => (0, 0),
        }
    }

    /// Bare `a,b` text, as used in CSV fields.
    pub fn bare(self) -> &'static str {
        match self {
            CellValue::Positive => "1,0",
            CellValue::Negative => "0,1",
            CellValue::Neutral => "0,0",
        }
    }

    pub fn parse_bare(text: &str) -> Result<Self> {
        let bad = || Error::InvalidCellText(text.to_string());
        let trimmed = text.trim().trim_start_matches('(').trim_end_matches(')');
        let (a, b) = trimmed.split_once(',').ok_or_else(bad)?;
        let a: u8 = a.trim().parse().map_err(|_| bad())?;
        let b: u8 = b.trim().parse().map_err(|_| bad())?;
        Self::from_pair(a, b)
    }
}

impl fmt::Display for CellValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.bare())
    }
}

impl Serialize for CellValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.bare())
    }
}

impl<'de> Deserialize<'de> for CellValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        CellValue::parse_bare(&text).map_err(serde::de::Error::custom)
    }
}

/// A column header: a positive parameter and its negation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnLabel {
    pub pos: String,
    pub neg: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TabularForm {
    rows: Vec<String>,
    columns: Vec<ColumnLabel>,
    cells: Vec<Vec<CellValue>>,
}

impl TabularForm {
    pub fn new(
        rows: Vec<String>,
        columns: Vec<ColumnLabel>,
        cells: Vec<Vec<CellValue>>,
    ) -> Result<Self> {
        if cells.len() != rows.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} row labels but {} rows",
                rows.len(),
                cells.len()
            )));
        }
        if let Some((i, row)) = cells.iter().enumerate().find(|(_, r)| r.len() != columns.len()) {
            return Err(Error::DimensionMismatch(format!(
                "row {} has {} cells, expected {}",
                rows[i],
                row.len(),
                columns.len()
            )));
        }
        Ok(TabularForm {
            rows,
            columns,
            cells,
        })
    }

    pub fn rows(&self) -> &[String] {
        &self.rows
    }

    pub fn columns(&self) -> &[ColumnLabel] {
        &self.columns
    }

    pub fn cells(&self) -> &[Vec<CellValue>] {
        &self.cells
    }

    pub fn cell(&self, i: usize, j: usize) -> CellValue {
        self.cells[i][j]
    }

    /// Aligned plain-text rendering with `(1,0)`-style cells.
    pub fn render_text(&self) -> String {
        let headers: Vec<String> = self
            .columns
            .iter()
            .map(|c| format!("({},{})", c.pos, c.neg))
            .collect();
        let label_width = self.rows.iter().map(String::len).max().unwrap_or(0);
        let widths: Vec<usize> = headers.iter().map(|h| h.len().max(5)).collect();

        let mut out = String::new();
        out.push_str(&" ".repeat(label_width));
        for (h, w) in headers.iter().zip(&widths) {
            out.push_str(&format!("  {h:<w$}"));
        }
        out = out.trim_end().to_string();
        out.push('\n');
        for (label, row) in self.rows.iter().zip(&self.cells) {
            let mut line = format!("{label:<label_width$}");
            for (cell, w) in row.iter().zip(&widths) {
                line.push_str(&format!("  {:<w$}", cell.to_string()));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    /// CSV rendering. Cells are `a,b` pairs, which always end up quoted.
    pub fn render_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["object".to_string()];
        header.extend(self.columns.iter().map(|c| format!("({},{})", c.pos, c.neg)));
        // Writing into a Vec cannot fail.
        writer.write_record(&header).expect("in-memory csv");
        for (label, row) in self.rows.iter().zip(&self.cells) {
            let mut record = vec![label.as_str()];
            record.extend(row.iter().map(|c| c.bare()));
            writer.write_record(&record).expect("in-memory csv");
        }
        String::from_utf8(writer.into_inner().expect("in-memory csv")).expect("utf-8 csv")
    }
}

/// Encodes a set as its tabular form, rows and columns in space order.
pub fn to_table(set: &BipolarSoftSet) -> TabularForm {
    let space = set.space();
    let rows = space.universe().to_vec();
    let columns = space
        .pairs()
        .map(|(pos, neg)| ColumnLabel {
            pos: pos.to_string(),
            neg: neg.to_string(),
        })
        .collect();
    let cells = (0..space.num_objects())
        .map(|i| (0..space.num_params()).map(|k| set.cell(i, k)).collect())
        .collect();
    TabularForm {
        rows,
        columns,
        cells,
    }
}

/// Decodes a table over `space`. Labels must match the space exactly.
pub fn from_table(table: &TabularForm, space: Arc<ParameterSpace>) -> Result<BipolarSoftSet> {
    let (m, n) = (space.num_objects(), space.num_params());
    if table.rows.len() != m || table.columns.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "table is {}x{}, space is {m}x{n}",
            table.rows.len(),
            table.columns.len()
        )));
    }
    if let Some((i, label)) = table
        .rows
        .iter()
        .enumerate()
        .find(|(i, label)| label.as_str() != space.object(*i))
    {
        return Err(Error::LabelMismatch(format!(
            "row {i} is `{label}`, expected `{}`",
            space.object(i)
        )));
    }
    for (k, (col, (pos, neg))) in table.columns.iter().zip(space.pairs()).enumerate() {
        if col.pos != pos || col.neg != neg {
            return Err(Error::LabelMismatch(format!(
                "column {k} is ({},{}), expected ({pos},{neg})",
                col.pos, col.neg
            )));
        }
    }

    let mut pos = vec![ObjectSet::empty(m); n];
    let mut neg = vec![ObjectSet::empty(m); n];
    for (i, row) in table.cells.iter().enumerate() {
        for (k, cell) in row.iter().enumerate() {
            match cell {
                CellValue::Positive => pos[k].insert(i),
                CellValue::Negative => neg[k].insert(i),
                CellValue::Neutral => {}
            }
        }
    }
    BipolarSoftSet::from_parts(space, pos, neg)
}
