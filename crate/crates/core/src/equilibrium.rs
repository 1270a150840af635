//! Empirical ε-Nash equilibria over win-percentage tables, plus the embedded
//! reference tables.
//!
//! A profile survives at tolerance ε when no seat can raise its own win
//! percentage by strictly more than ε through a unilateral switch.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Read;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::engine::Variant;
use crate::error::{Error, Result};
use crate::montecarlo::Profile;
use crate::strategies::StrategyKind;

/// Slack allowed when per-seat win percentages of a row sum past 100 through
/// rounding.
const ROW_SUM_SLACK: f64 = 0.05;

/// Worst-case binomial standard error of a win percentage from `games`
/// games, in percentage points: `100·sqrt(0.25/n)`.
pub fn std_error(games: u64) -> f64 {
    100.0 * (0.25 / games as f64).sqrt()
}

/// Tolerance for an equilibrium query, either absolute or a multiple of the
/// table's standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Epsilon {
    Value(f64),
    StdErrors(u32),
}

impl Epsilon {
    pub fn resolve(self, games: Option<u64>) -> Result<f64> {
        match self {
            Epsilon::Value(v) => Ok(v),
            Epsilon::StdErrors(k) => games
                .map(|n| k as f64 * std_error(n))
                .ok_or_else(|| Error::MalformedTable("standard error needs the games count".into())),
        }
    }
}

impl FromStr for Epsilon {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "se" => Ok(Epsilon::StdErrors(1)),
            "2se" => Ok(Epsilon::StdErrors(2)),
            other => other
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite() && *v >= 0.0)
                .map(Epsilon::Value)
                .ok_or_else(|| Error::MalformedTable(format!("bad epsilon {s:?}"))),
        }
    }
}

/// Per-seat win percentage for each profile.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct WinTable {
    pub seats: usize,
    pub variant: Option<Variant>,
    pub turns: Option<u32>,
    pub games: Option<u64>,
    values: BTreeMap<Profile, Vec<f64>>,
}

impl WinTable {
    pub fn new(seats: usize) -> Self {
        WinTable {
            seats,
            ..Default::default()
        }
    }

    pub fn insert(&mut self, profile: Profile, wins: Vec<f64>) {
        assert_eq!(profile.seats(), self.seats);
        assert_eq!(wins.len(), self.seats);
        self.values.insert(profile, wins);
    }

    pub fn get(&self, profile: &Profile) -> Option<&[f64]> {
        self.values.get(profile).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn check_complete(&self) -> Result<()> {
        Profile::all(self.seats)
            .into_iter()
            .find(|p| !self.values.contains_key(p))
            .map_or(Ok(()), |p| Err(Error::MissingProfile(p.to_string())))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquilibriumReport {
    pub variant: Option<Variant>,
    pub turns: Option<u32>,
    pub n: Option<u64>,
    pub epsilon: f64,
    pub profiles: Vec<Profile>,
}

/// Profiles where no seat gains strictly more than `epsilon` by deviating.
pub fn epsilon_ne(table: &WinTable, epsilon: f64) -> Result<EquilibriumReport> {
    table.check_complete()?;
    let profiles = table
        .values
        .iter()
        .filter(|(profile, wins)| {
            (0..table.seats).all(|seat| {
                StrategyKind::ALL.iter().all(|&alt| {
                    let deviated = &table.values[&profile.with_seat(seat, alt)];
                    deviated[seat] - wins[seat] <= epsilon
                })
            })
        })
        .map(|(p, _)| p.clone())
        .collect();
    Ok(EquilibriumReport {
        variant: table.variant,
        turns: table.turns,
        n: table.games,
        epsilon,
        profiles,
    })
}

/// Pure-strategy Nash equilibria of a 3×3 bimatrix game, as (row, column)
/// index pairs in row-major order.
pub fn pure_ne_bimatrix(payoffs: &[[(f64, f64); 3]; 3]) -> Vec<(usize, usize)> {
    let mut table = WinTable::new(2);
    for (r, row) in payoffs.iter().enumerate() {
        for (c, &(a, b)) in row.iter().enumerate() {
            table.insert(Profile(vec![StrategyKind::ALL[r], StrategyKind::ALL[c]]), vec![a, b]);
        }
    }
    epsilon_ne(&table, 0.0)
        .expect("complete by construction")
        .profiles
        .iter()
        .map(|p| (p.0[0].rank(), p.0[1].rank()))
        .collect()
}

/// Embedded reference tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FixtureId {
    TwoPlayer16,
    TwoPlayer20,
    TwoPlayer24,
    FourPlayer8,
    FourPlayer12,
    FourPlayer16,
}

impl FixtureId {
    pub const ALL: [FixtureId; 6] = [
        FixtureId::TwoPlayer16,
        FixtureId::TwoPlayer20,
        FixtureId::TwoPlayer24,
        FixtureId::FourPlayer8,
        FixtureId::FourPlayer12,
        FixtureId::FourPlayer16,
    ];

    pub fn id(self) -> &'static str {
        match self {
            FixtureId::TwoPlayer16 => "2p16",
            FixtureId::TwoPlayer20 => "2p20",
            FixtureId::TwoPlayer24 => "2p24",
            FixtureId::FourPlayer8 => "4p8",
            FixtureId::FourPlayer12 => "4p12",
            FixtureId::FourPlayer16 => "4p16",
        }
    }

    pub fn variant(self) -> Variant {
        match self {
            FixtureId::TwoPlayer16 | FixtureId::TwoPlayer20 | FixtureId::TwoPlayer24 => {
                Variant::TwoPlayerThreeDice
            }
            _ => Variant::FourPlayerFiveDice,
        }
    }

    pub fn turns(self) -> u32 {
        match self {
            FixtureId::TwoPlayer16 | FixtureId::FourPlayer16 => 16,
            FixtureId::TwoPlayer20 => 20,
            FixtureId::TwoPlayer24 => 24,
            FixtureId::FourPlayer8 => 8,
            FixtureId::FourPlayer12 => 12,
        }
    }

    /// Raw CSV text. Two-player tables carry only seat 1's win percentage;
    /// the seat 2 and draw columns are blank.
    pub fn csv(self) -> &'static str {
        match self {
            FixtureId::TwoPlayer16 => include_str!("../fixtures/2p16.csv"),
            FixtureId::TwoPlayer20 => include_str!("../fixtures/2p20.csv"),
            FixtureId::TwoPlayer24 => include_str!("../fixtures/2p24.csv"),
            FixtureId::FourPlayer8 => include_str!("../fixtures/4p8.csv"),
            FixtureId::FourPlayer12 => include_str!("../fixtures/4p12.csv"),
            FixtureId::FourPlayer16 => include_str!("../fixtures/4p16.csv"),
        }
    }
}

impl fmt::Display for FixtureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for FixtureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        FixtureId::ALL
            .into_iter()
            .find(|f| f.id() == s)
            .ok_or(Error::UnknownFixture(s))
    }
}

/// Reference win table. Seat 2 of a two-player table is credited
/// `100 − w₁` (no draws recorded).
pub fn load_fixture(id: FixtureId) -> WinTable {
    let mut t = read_win_table(id.csv().as_bytes()).expect("embedded fixture parses");
    t.variant = Some(id.variant());
    t.turns = Some(id.turns());
    t
}

fn column(headers: &csv::StringRecord, name: &str) -> Result<usize> {
    headers
        .iter()
        .position(|h| h == name)
        .ok_or_else(|| Error::MalformedTable(format!("missing column {name:?}")))
}

fn number(rec: &csv::StringRecord, idx: usize, line: usize) -> Result<Option<f64>> {
    let raw = rec.get(idx).unwrap_or("").trim();
    if raw.is_empty() {
        return Ok(None);
    }
    raw.parse::<f64>()
        .map(Some)
        .map_err(|_| Error::MalformedTable(format!("row {line}: {raw:?} is not a number")))
}

/// Read a win table from CSV in either the two- or four-player schema.
pub fn read_win_table<R: Read>(reader: R) -> Result<WinTable> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers()?.clone();
    let seats = if headers.iter().any(|h| h == "strategy_p1") { 2 } else { 4 };
    let (strategy_cols, win_cols): (Vec<usize>, Vec<usize>) = if seats == 2 {
        (
            vec![column(&headers, "strategy_p1")?, column(&headers, "strategy_p2")?],
            vec![column(&headers, "win_pct_p1")?, column(&headers, "win_pct_p2")?],
        )
    } else {
        (
            (1..=4).map(|i| column(&headers, &format!("s{i}"))).collect::<Result<_>>()?,
            (1..=4).map(|i| column(&headers, &format!("win_pct_{i}"))).collect::<Result<_>>()?,
        )
    };
    let games_col = column(&headers, "games").ok();

    let mut table = WinTable::new(seats);
    let mut games: Option<u64> = None;
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec?;
        let line = i + 2;
        let profile = Profile(
            strategy_cols
                .iter()
                .map(|&c| rec.get(c).unwrap_or("").parse())
                .collect::<Result<_>>()?,
        );
        let mut wins = Vec::with_capacity(seats);
        for &c in &win_cols {
            wins.push(number(&rec, c, line)?);
        }
        let wins: Vec<f64> = match (seats, &wins[..]) {
            (2, &[Some(a), None]) => vec![a, 100.0 - a],
            _ => wins
                .into_iter()
                .map(|w| w.ok_or_else(|| Error::MalformedTable(format!("row {line}: blank win percentage"))))
                .collect::<Result<_>>()?,
        };
        if wins.iter().any(|w| !(0.0..=100.0).contains(w)) {
            return Err(Error::MalformedTable(format!("row {line}: win percentage outside 0..=100")));
        }
        if wins.iter().sum::<f64>() > 100.0 + ROW_SUM_SLACK {
            return Err(Error::MalformedTable(format!("row {line}: win percentages sum past 100")));
        }
        if let Some(g) = games_col.map(|c| number(&rec, c, line)).transpose()?.flatten() {
            let g = g as u64;
            games = Some(games.map_or(g, |prev: u64| prev.min(g)));
        }
        if table.values.insert(profile.clone(), wins).is_some() {
            return Err(Error::MalformedTable(format!("row {line}: duplicate profile {profile}")));
        }
    }
    table.games = games;
    Ok(table)
}
