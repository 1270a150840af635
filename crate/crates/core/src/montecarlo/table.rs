use std::io::Write;

use super::{MatchStats, Profile};
use crate::engine::GameConfig;
use crate::equilibrium::WinTable;
use crate::error::Result;

/// Full sweep result: one row per profile in lexicographic order.
#[derive(Debug, Clone, PartialEq)]
pub struct PayoffTable {
    pub config: GameConfig,
    pub games: u64,
    pub master_seed: u64,
    pub rows: Vec<(Profile, MatchStats)>,
}

/// A typed value in an output row. Percentages, means and SDs are rounded to
/// two decimals on output.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(u64),
    Fixed2(f64),
}

impl Cell {
    pub fn render(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(n) => n.to_string(),
            Cell::Fixed2(x) => format!("{x:.2}"),
        }
    }
}

/// Named cells of one output row, in column order.
pub type TableRecord = Vec<(String, Cell)>;

/// Two-decimal rounding exactly as printed.
pub(crate) fn round2(x: f64) -> f64 {
    format!("{x:.2}").parse().expect("formatted float")
}

/// Column names for a table of `seats` players.
pub fn header(seats: usize) -> Vec<String> {
    if seats == 2 {
        [
            "strategy_p1",
            "strategy_p2",
            "games",
            "win_pct_p1",
            "win_pct_p2",
            "draw_pct",
            "mean_p1",
            "sd_p1",
            "mean_p2",
            "sd_p2",
        ]
        .map(String::from)
        .to_vec()
    } else {
        let mut h = vec!["sl_no".to_string()];
        h.extend((1..=seats).map(|i| format!("s{i}")));
        h.push("games".into());
        h.extend((1..=seats).map(|i| format!("win_pct_{i}")));
        h.push("draw_pct".into());
        for i in 1..=seats {
            h.push(format!("mean_{i}"));
            h.push(format!("sd_{i}"));
        }
        h
    }
}

/// One row in the schema for `profile.seats()` players. `sl_no` is 1-based.
pub fn record(sl_no: usize, profile: &Profile, stats: &MatchStats) -> TableRecord {
    let seats = profile.seats();
    let mut cells = Vec::new();
    if seats != 2 {
        cells.push(Cell::Int(sl_no as u64));
    }
    cells.extend(profile.kinds().iter().map(|k| Cell::Text(k.code().into())));
    cells.push(Cell::Int(stats.games));
    cells.extend((0..seats).map(|s| Cell::Fixed2(stats.win_pct(s))));
    cells.push(Cell::Fixed2(stats.draw_pct()));
    for s in 0..seats {
        cells.push(Cell::Fixed2(stats.mean(s)));
        cells.push(Cell::Fixed2(stats.sd(s)));
    }
    header(seats).into_iter().zip(cells).collect()
}

impl PayoffTable {
    pub fn seats(&self) -> usize {
        self.config.seats()
    }

    pub fn records(&self) -> Vec<TableRecord> {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, (p, st))| record(i + 1, p, st))
            .collect()
    }

    /// CSV with LF line endings.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        write_records_csv(out, self.seats(), &self.records())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("ascii output")
    }

    /// Win percentages as printed (two decimals), so that an equilibrium
    /// computed here matches one computed from the written CSV.
    pub fn win_table(&self) -> WinTable {
        let mut t = WinTable::new(self.seats());
        for (p, st) in &self.rows {
            t.insert(p.clone(), (0..self.seats()).map(|s| round2(st.win_pct(s))).collect());
        }
        t
    }
}

pub fn write_records_csv<W: Write>(out: W, seats: usize, records: &[TableRecord]) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(header(seats))?;
    for r in records {
        w.write_record(r.iter().map(|(_, c)| c.render()))?;
    }
    w.flush()?;
    Ok(())
}
