//! Expected-path payoff model: closed-form expected points, the two-player
//! PP/S/M point and win tables, and the four-player PP/S case values.
//!
//! The printed point table is treated as authoritative. The per-cell
//! arithmetic behind it is evaluated separately by [`rederive_payoff_2p`],
//! which flags cells whose own arithmetic disagrees with the printed value.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Mean of one die.
pub const DIE_MEAN: f64 = 3.5;
/// Mean of a die after a double six, when a third six would be void.
pub const SPOILED_SIX_MEAN: f64 = 2.5;
/// A re-derived value further than this from the printed one is flagged.
pub const DISCREPANCY_TOLERANCE: f64 = 0.5;

/// Analytic strategies of the expected-path model. These are not bots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum AnalyticStrategy {
    /// Promotion priority.
    PP,
    /// Safe progress priority.
    S,
    /// Mix of PP and S.
    M,
}

impl AnalyticStrategy {
    pub const ALL: [AnalyticStrategy; 3] = [AnalyticStrategy::PP, AnalyticStrategy::S, AnalyticStrategy::M];

    pub fn code(self) -> &'static str {
        match self {
            AnalyticStrategy::PP => "PP",
            AnalyticStrategy::S => "S",
            AnalyticStrategy::M => "M",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for AnalyticStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for AnalyticStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "PP" => Ok(AnalyticStrategy::PP),
            "S" => Ok(AnalyticStrategy::S),
            "M" => Ok(AnalyticStrategy::M),
            _ => Err(Error::UnknownAnalyticStrategy(s.to_string())),
        }
    }
}

/// Expected points from `m` pool moves: each six adds a move (m/6 of them)
/// and each double six adds a move whose die cannot be a six (m/36 of them).
pub fn expected_total_points(m: u32) -> f64 {
    let m = m as f64;
    (m + m / 6.0) * DIE_MEAN + (m / 36.0) * SPOILED_SIX_MEAN
}

/// (row player, column player) payoffs, indexed by [`AnalyticStrategy::index`].
pub type Bimatrix = [[(f64, f64); 3]; 3];

/// Printed expected-path points for the two-player 16-turn game.
pub fn expected_payoff_table_2p() -> Bimatrix {
    let upper = [
        [(159.17, 159.17), (73.0, 90.5), (120.0, 126.0)],
        [(0.0, 0.0), (99.67, 99.67), (93.0, 80.25)],
        [(0.0, 0.0), (0.0, 0.0), (103.0, 103.0)],
    ];
    mirror(upper)
}

fn mirror(mut t: Bimatrix) -> Bimatrix {
    for r in 0..3 {
        for c in 0..r {
            let (a, b) = t[c][r];
            t[r][c] = (b, a);
        }
    }
    t
}

/// Win/loss table derived from the point table: the higher expected total
/// wins, equal totals split.
pub fn win_table_2p() -> Bimatrix {
    expected_payoff_table_2p().map(|row| {
        row.map(|(a, b)| match a.partial_cmp(&b) {
            Some(std::cmp::Ordering::Greater) => (1.0, 0.0),
            Some(std::cmp::Ordering::Less) => (0.0, 1.0),
            _ => (0.5, 0.5),
        })
    })
}

/// One cell of the point table re-evaluated from its case arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rederived {
    pub row: AnalyticStrategy,
    pub col: AnalyticStrategy,
    pub value: (f64, f64),
    pub printed: (f64, f64),
    pub flagged: bool,
}

/// Case arithmetic for `strategy` facing `opponent`, as written for each
/// pairing. 99.67 is the 24-move expected total used throughout.
fn case_value(strategy: AnalyticStrategy, opponent: AnalyticStrategy) -> f64 {
    use AnalyticStrategy::*;
    let e = 99.67;
    match (strategy, opponent) {
        (PP, PP) => e + 56.0 + 3.5,
        (S, S) => e,
        (PP, S) => 0.25 * (e + 56.0 + 7.0) + 0.5 * (37.0 + 12.5 + 3.5) + 0.25 * (12.0 + 12.0),
        (S, PP) => 50.0 + 0.25 * (12.0 + 12.0) + 0.5 * (37.0 + 3.5) + 0.25 * (50.0 + 7.0),
        (M, M) => {
            0.25 * (56.0 + 56.0 + 19.0)
                + 0.25 * (12.5 + 12.5)
                + 0.25 * (56.0 + 56.0 + 9.5)
                + 0.25 * (12.5 + 25.0)
        }
        (M, S) => 25.0 + 0.75 * (12.5 + 25.0) + 0.25 * (30.0 + 56.0 + 19.0 + 3.5),
        (S, M) => 50.0 + 0.75 * (50.0 + 3.5) + 0.25 * 12.0,
        (M, PP) => 25.0 + 30.0 + 56.0 + 0.75 * (10.0 + 3.5) + 0.25 * 19.0,
        (PP, M) => 0.75 * (e + 56.0) + 0.25 * 12.0,
    }
}

/// Re-evaluate one cell and compare with the printed table.
pub fn rederive_payoff_2p(row: AnalyticStrategy, col: AnalyticStrategy) -> Rederived {
    let value = (case_value(row, col), case_value(col, row));
    let printed = expected_payoff_table_2p()[row.index()][col.index()];
    let flagged = (value.0 - printed.0).abs() > DISCREPANCY_TOLERANCE
        || (value.1 - printed.1).abs() > DISCREPANCY_TOLERANCE;
    Rederived {
        row,
        col,
        value,
        printed,
        flagged,
    }
}

/// All nine cells in row-major order.
pub fn rederive_all_2p() -> Vec<Rederived> {
    AnalyticStrategy::ALL
        .iter()
        .flat_map(|&r| AnalyticStrategy::ALL.iter().map(move |&c| rederive_payoff_2p(r, c)))
        .collect()
}

/// Expected total from 20 pool moves, rounded as printed.
const FOUR_PLAYER_BASE: f64 = 83.06;
/// A PP seat that never meets an S seat promotes one token.
const FOUR_PLAYER_ALL_PP: f64 = FOUR_PLAYER_BASE + 56.0 + 3.5;
const FOUR_PLAYER_ALL_PP_PRINTED: f64 = 132.56;

/// Capture correction `x` for an interacting PP seat, by seat position.
pub const SEAT_CORRECTION: [f64; 4] = [0.4 * DIE_MEAN, 0.2 * DIE_MEAN, 0.0, 0.8 * DIE_MEAN];

fn interacting_pp_base() -> f64 {
    let e = FOUR_PLAYER_BASE;
    (e + 56.0 + 3.5) / 16.0 + (e + 56.0 + 7.0) / 16.0 + 7.0 / 16.0 * (32.5 + 13.0 + 3.5) + 7.0 / 16.0 * 26.0
}

fn interacting_s_base() -> f64 {
    52.0 + 0.25 * (6.0 * DIE_MEAN + DIE_MEAN) + 0.25 * (3.0 * DIE_MEAN) + 0.5 * (3.0 * DIE_MEAN + DIE_MEAN)
}

/// Expected points of one seat in a four-player PP/S profile.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeatPayoff {
    pub strategy: AnalyticStrategy,
    /// Whether this seat is in an adjacent PP then S pair.
    pub interacting: bool,
    /// Capture correction included in `value` (x for PP, −x for S).
    pub correction: f64,
    pub value: f64,
    /// The printed figure, where one exists for this profile.
    pub printed: Option<f64>,
    pub flagged: bool,
}

/// Per-seat expected points for a four-player profile over {PP, S}.
///
/// Only a PP seat followed directly by an S seat interacts. That PP seat gets
/// `50.85 + x` and the S seat after it `67.75 − x`, with `x` from
/// [`SEAT_CORRECTION`] for the PP seat's position. Every other seat keeps its
/// uncontested value.
pub fn expected_payoffs_4p(profile: &[AnalyticStrategy; 4]) -> Result<Vec<SeatPayoff>> {
    use AnalyticStrategy::*;
    if profile.contains(&M) {
        let codes: Vec<&str> = profile.iter().map(|s| s.code()).collect();
        return Err(Error::MixedStrategyIn4p(codes.join(",")));
    }
    let all_same = profile.iter().all(|&s| s == profile[0]);
    let mut seats: Vec<SeatPayoff> = profile
        .iter()
        .map(|&strategy| {
            let value = if strategy == PP { FOUR_PLAYER_ALL_PP } else { FOUR_PLAYER_BASE };
            let printed = all_same.then_some(if strategy == PP {
                FOUR_PLAYER_ALL_PP_PRINTED
            } else {
                FOUR_PLAYER_BASE
            });
            SeatPayoff {
                strategy,
                interacting: false,
                correction: 0.0,
                value,
                printed,
                flagged: false,
            }
        })
        .collect();
    for seat in 0..4 {
        let next = (seat + 1) % 4;
        if profile[seat] == PP && profile[next] == S {
            let x = SEAT_CORRECTION[seat];
            seats[seat].interacting = true;
            seats[seat].correction = x;
            seats[seat].value = interacting_pp_base() + x;
            seats[next].interacting = true;
            seats[next].correction = -x;
            seats[next].value = interacting_s_base() - x;
        }
    }
    for s in &mut seats {
        s.flagged = s.printed.is_some_and(|p| (s.value - p).abs() > DISCREPANCY_TOLERANCE);
    }
    Ok(seats)
}

/// All 16 PP/S profiles with seat 1 most significant, PP before S.
pub fn all_profiles_4p() -> Vec<[AnalyticStrategy; 4]> {
    use AnalyticStrategy::*;
    (0..16u32)
        .map(|bits| std::array::from_fn(|i| if bits >> (3 - i) & 1 == 0 { PP } else { S }))
        .collect()
}
