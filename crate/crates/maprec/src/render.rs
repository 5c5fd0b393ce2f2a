//! Markdown, JSON and CSV renderings of a [`Table`].

use std::fmt;
use std::str::FromStr;

use maprec_core::exactnum::{format_rational, parse_rational};
use serde::{Deserialize, Serialize};

use crate::table::{Row, Table, TableFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Md,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "md" => Ok(Format::Md),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown format `{}` (expected md, json or csv)", s)),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Md => "md",
            Format::Json => "json",
            Format::Csv => "csv",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientJson {
    pub q: usize,
    pub value: String,
}

/// One row: `{"family","genus","lengths","truncation","coefficients":[{"q","value"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowJson {
    pub family: String,
    pub genus: usize,
    pub lengths: Vec<usize>,
    pub truncation: usize,
    pub coefficients: Vec<CoefficientJson>,
}

impl RowJson {
    pub fn new(family: TableFamily, genus: usize, row: &Row) -> Self {
        RowJson {
            family: family.name().to_string(),
            genus,
            lengths: row.lengths.clone(),
            truncation: row.coefficients.len() - 1,
            coefficients: row
                .coefficients
                .iter()
                .enumerate()
                .map(|(q, v)| CoefficientJson { q, value: format_rational(v) })
                .collect(),
        }
    }

    pub fn to_row(&self) -> Result<Row, ParseError> {
        let mut coefficients = Vec::with_capacity(self.coefficients.len());
        for (i, c) in self.coefficients.iter().enumerate() {
            if c.q != i {
                return Err(ParseError(format!("coefficient {} has q = {}", i, c.q)));
            }
            coefficients.push(parse_rational(&c.value).ok_or_else(|| ParseError(format!("bad value `{}`", c.value)))?);
        }
        if coefficients.len() != self.truncation + 1 {
            return Err(ParseError(format!("{} coefficients for truncation {}", coefficients.len(), self.truncation)));
        }
        Ok(Row { lengths: self.lengths.clone(), coefficients })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseError {}

pub fn render(table: &Table, format: Format) -> String {
    match format {
        Format::Md => to_markdown(table),
        Format::Json => to_json(table),
        Format::Csv => to_csv(table),
    }
}

/// Rows are lengths, columns are `Q = 0..=q_max`.
pub fn to_markdown(table: &Table) -> String {
    let mut out = format!("| {} | Q = 0 |", table.family.row_label());
    for q in 1..=table.q_max {
        out.push_str(&format!(" {} |", q));
    }
    out.push('\n');
    out.push_str(&"|---".repeat(table.q_max + 2));
    out.push_str("|\n");
    for row in &table.rows {
        out.push_str(&format!("| **{}** |", row.label()));
        for v in row.values() {
            out.push_str(&format!(" {} |", v));
        }
        out.push('\n');
    }
    out
}

/// A JSON array with one object per row.
pub fn to_json(table: &Table) -> String {
    let rows: Vec<RowJson> = table.rows.iter().map(|r| RowJson::new(table.family, table.genus, r)).collect();
    let mut s = serde_json::to_string_pretty(&rows).expect("plain data serializes");
    s.push('\n');
    s
}

/// Inverse of [`to_json`].
pub fn from_json(s: &str) -> Result<Table, ParseError> {
    let rows: Vec<RowJson> = serde_json::from_str(s).map_err(|e| ParseError(e.to_string()))?;
    let first = rows.first().ok_or_else(|| ParseError("empty table".into()))?;
    let family = TableFamily::parse(&first.family).ok_or_else(|| ParseError(format!("unknown family `{}`", first.family)))?;
    let (genus, q_max) = (first.genus, first.truncation);
    let mut out = Vec::new();
    for r in &rows {
        if r.family != first.family || r.genus != genus || r.truncation != q_max {
            return Err(ParseError("rows disagree on family, genus or truncation".into()));
        }
        out.push(r.to_row()?);
    }
    Ok(Table { family, genus, q_max, rows: out })
}

/// Long format: `family,genus,lengths,q,value`.
pub fn to_csv(table: &Table) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["family", "genus", "lengths", "q", "value"]).expect("writes to memory");
    for row in &table.rows {
        let lengths: Vec<String> = row.lengths.iter().map(|l| l.to_string()).collect();
        let lengths = lengths.join(" ");
        for (q, v) in row.values().enumerate() {
            let genus = table.genus.to_string();
            let q = q.to_string();
            w.write_record([table.family.name(), &genus, &lengths, &q, &v]).expect("writes to memory");
        }
    }
    String::from_utf8(w.into_inner().expect("flushes to memory")).expect("utf-8 input")
}
