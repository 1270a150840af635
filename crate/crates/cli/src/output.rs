//! Rendering of result rows and the run manifest.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::{Map, Number, Value};

use ludo_lab::montecarlo::{write_records_csv, Cell, TableRecord};
use ludo_lab::GameConfig;

use crate::Format;

/// Metadata written next to every `--out` file.
#[derive(Debug, Serialize, Deserialize)]
pub struct Manifest {
    pub command: String,
    pub config: GameConfig,
    pub profile: Option<String>,
    pub games: u64,
    pub seed: u64,
    pub workers: usize,
    pub version: String,
    pub duration_ms: u128,
}

pub fn manifest_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".manifest.json");
    PathBuf::from(name)
}

/// The manifest next to `table`, if one was written.
pub fn read_manifest(table: &Path) -> Option<Manifest> {
    let text = fs::read_to_string(manifest_path(table)).ok()?;
    serde_json::from_str(&text).ok()
}

pub fn write_manifest(out: &Path, manifest: &Manifest) -> std::io::Result<()> {
    let json = serde_json::to_string_pretty(manifest).map_err(std::io::Error::other)?;
    fs::write(manifest_path(out), json + "\n")
}

fn cell_json(cell: &Cell) -> Value {
    match cell {
        Cell::Text(s) => Value::String(s.clone()),
        Cell::Int(n) => Value::from(*n),
        Cell::Fixed2(x) => {
            let rounded: f64 = cell.render().parse().unwrap_or(*x);
            Number::from_f64(rounded).map_or(Value::Null, Value::Number)
        }
    }
}

pub fn records_json(records: &[TableRecord]) -> Value {
    Value::Array(
        records
            .iter()
            .map(|r| Value::Object(r.iter().map(|(k, c)| (k.clone(), cell_json(c))).collect::<Map<_, _>>()))
            .collect(),
    )
}

/// Space-aligned columns with a header line.
pub fn records_text(header: &[String], records: &[TableRecord]) -> String {
    let rows: Vec<Vec<String>> = records.iter().map(|r| r.iter().map(|(_, c)| c.render()).collect()).collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|i| rows.iter().map(|r| r[i].len()).chain([header[i].len()]).max().unwrap_or(0))
        .collect();
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header);
    for r in &rows {
        out += &line(r);
    }
    out
}

pub fn render_records(format: Format, seats: usize, records: &[TableRecord]) -> Result<String, String> {
    match format {
        Format::Csv => {
            let mut buf = Vec::new();
            write_records_csv(&mut buf, seats, records).map_err(|e| e.to_string())?;
            String::from_utf8(buf).map_err(|e| e.to_string())
        }
        Format::Json => serde_json::to_string_pretty(&records_json(records))
            .map(|s| s + "\n")
            .map_err(|e| e.to_string()),
        Format::Text => Ok(records_text(&ludo_lab::montecarlo::header(seats), records)),
    }
}
