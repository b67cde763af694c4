//! Machine-readable command output.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Ordered field-name to value pairs. Serialized as a JSON object that keeps
/// insertion order, so CSV columns and JSON keys line up.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Row(pub Vec<(String, String)>);

impl Row {
    pub fn new() -> Self {
        Row(Vec::new())
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.push(key, value);
        self
    }

    pub fn push(&mut self, key: &str, value: impl ToString) {
        self.0.push((key.to_string(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(|(k, _)| k.as_str())
    }
}

impl Serialize for Row {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Row {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct RowVisitor;

        impl<'de> Visitor<'de> for RowVisitor {
            type Value = Row;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an object of string values")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Row, A::Error> {
                let mut row = Row::new();
                while let Some((k, v)) = access.next_entry::<String, String>()? {
                    row.0.push((k, v));
                }
                Ok(row)
            }
        }

        deserializer.deserialize_map(RowVisitor)
    }
}

/// The JSON document every command can emit. Exact numbers are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub params: Row,
    pub rows: Vec<Row>,
    pub version: String,
}

impl OutputRecord {
    pub fn new(command: &str, params: Row) -> Self {
        OutputRecord {
            command: command.to_string(),
            params,
            rows: Vec::new(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?} (expected text, csv or json)")),
        }
    }
}

/// A finished command: the record plus format-specific renderings.
#[derive(Debug, Clone)]
pub struct Report {
    pub record: OutputRecord,
    /// CSV header, used even when there are no rows.
    pub columns: Vec<String>,
    /// Text rendering; defaults to an aligned table of the rows.
    pub text: Option<String>,
    /// CSV cells overriding the row layout (printed tables keep their orientation).
    pub grid: Option<Vec<Vec<String>>>,
    pub exit_code: i32,
}

impl Report {
    pub fn new(record: OutputRecord, columns: &[&str]) -> Self {
        Report {
            record,
            columns: columns.iter().map(|c| c.to_string()).collect(),
            text: None,
            grid: None,
            exit_code: 0,
        }
    }

    pub fn render(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.record)?;
                writeln!(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                match &self.grid {
                    Some(grid) => {
                        for line in grid {
                            w.write_record(line)?;
                        }
                    }
                    None => {
                        w.write_record(&self.columns)?;
                        for row in &self.record.rows {
                            w.write_record(self.columns.iter().map(|c| row.get(c).unwrap_or("")))?;
                        }
                    }
                }
                w.flush()
            }
            Format::Text => match &self.text {
                Some(t) => out.write_all(t.as_bytes()),
                None => out.write_all(aligned(&self.cells()).as_bytes()),
            },
        }
    }

    /// Header plus one line per row, in column order.
    pub fn cells(&self) -> Vec<Vec<String>> {
        let mut cells = vec![self.columns.clone()];
        for row in &self.record.rows {
            cells.push(self.columns.iter().map(|c| row.get(c).unwrap_or("").to_string()).collect());
        }
        cells
    }
}

/// Left-aligned columns separated by two spaces.
pub fn aligned(cells: &[Vec<String>]) -> String {
    let width = cells.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; width];
    for line in cells {
        for (i, cell) in line.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let mut s = String::new();
    for line in cells {
        let mut text = String::new();
        for (i, cell) in line.iter().enumerate() {
            if i > 0 {
                text.push_str("  ");
            }
            text.push_str(cell);
            text.extend(std::iter::repeat_n(' ', widths[i] - cell.chars().count()));
        }
        s.push_str(text.trim_end());
        s.push('\n');
    }
    s
}
