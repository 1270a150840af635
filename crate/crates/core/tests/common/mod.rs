//! Oracles shared by the integration suites. Everything here is written
//! independently of the library internals it checks.

#![allow(dead_code)]

pub mod props;

use std::collections::BTreeMap;

use ludo_lab::dice::ScriptedDice;
use ludo_lab::engine::Game;
use ludo_lab::equilibrium::{std_error, FixtureId};
use ludo_lab::{GameConfig, Profile, StrategyKind, Variant};

/// Joint score histogram of a one-turn game: (seat 0 points, seat 1 points)
/// to the number of pool outcomes producing it.
pub type Histogram = BTreeMap<(u32, u32), u32>;

pub const EXTRA_FACE: u8 = 1;

/// Closed form for the one-turn two-player game with every extra roll
/// scripted to 1. Seat 0 picks, seat 1 picks, seat 0 takes the last die.
/// With all tokens starting at path 0 nothing can be captured, stacked on or
/// promoted, so a Naive picker takes the first die left and the other two
/// take the biggest (earliest on ties). Each six taken earns one extra move
/// worth `EXTRA_FACE`.
pub fn minigame_oracle(profile: [StrategyKind; 2]) -> Histogram {
    let mut hist = Histogram::new();
    for a in 1..=6u8 {
        for b in 1..=6u8 {
            for c in 1..=6u8 {
                let mut left = vec![a, b, c];
                let mut points = [0u32; 2];
                for seat in [0usize, 1, 0] {
                    let i = match profile[seat] {
                        StrategyKind::Naive => 0,
                        _ => {
                            let best = *left.iter().max().unwrap();
                            left.iter().position(|&d| d == best).unwrap()
                        }
                    };
                    let d = left.remove(i);
                    points[seat] += d as u32 + if d == 6 { EXTRA_FACE as u32 } else { 0 };
                }
                *hist.entry((points[0], points[1])).or_default() += 1;
            }
        }
    }
    hist
}

/// The same histogram produced by running the engine on every pool.
pub fn minigame_engine(profile: [StrategyKind; 2]) -> Histogram {
    let cfg = GameConfig::new(Variant::TwoPlayerThreeDice, 1).unwrap();
    let mut hist = Histogram::new();
    for a in 1..=6u8 {
        for b in 1..=6u8 {
            for c in 1..=6u8 {
                let dice = ScriptedDice::new(vec![a, b, c], EXTRA_FACE);
                let mut game = Game::new(cfg, &profile, dice).unwrap();
                let r = game.play_to_end();
                *hist.entry((r.points[0], r.points[1])).or_default() += 1;
            }
        }
    }
    hist
}

pub fn all_pairs() -> Vec<[StrategyKind; 2]> {
    StrategyKind::ALL
        .iter()
        .flat_map(|&a| StrategyKind::ALL.iter().map(move |&b| [a, b]))
        .collect()
}

/// Pure equilibria of a 3x3 bimatrix by checking every cell against every
/// unilateral deviation.
pub fn brute_force_pure_ne(t: &[[(f64, f64); 3]; 3]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for r in 0..3 {
        for c in 0..3 {
            let row_ok = (0..3).all(|r2| t[r2][c].0 <= t[r][c].0);
            let col_ok = (0..3).all(|c2| t[r][c2].1 <= t[r][c].1);
            if row_ok && col_ok {
                out.push((r, c));
            }
        }
    }
    out
}

/// The three tolerances of the published ladder for a fixture: exact, one
/// standard error and two.
pub fn epsilon_ladder(games: u64) -> [f64; 3] {
    [0.0, std_error(games), 2.0 * std_error(games)]
}

/// Published equilibrium sets, one list per tolerance of the ladder.
pub fn published_equilibria() -> Vec<(FixtureId, [Vec<&'static str>; 3])> {
    vec![
        (
            FixtureId::TwoPlayer16,
            [vec!["RP,RP"], vec!["RP,A", "RP,RP"], vec!["RP,A", "RP,RP"]],
        ),
        (FixtureId::TwoPlayer20, [vec!["A,A"], vec!["A,A"], vec!["A,A"]]),
        (FixtureId::TwoPlayer24, [vec!["A,A"], vec!["A,A"], vec!["A,A"]]),
        (
            FixtureId::FourPlayer16,
            [
                vec!["RP,RP,RP,A", "RP,A,RP,RP"],
                vec!["RP,RP,RP,A", "RP,RP,A,RP", "RP,A,RP,RP"],
                vec![
                    "RP,A,A,RP",
                    "RP,A,RP,A",
                    "RP,A,RP,RP",
                    "A,RP,RP,A",
                    "RP,RP,A,A",
                    "RP,RP,A,RP",
                    "RP,RP,RP,A",
                    "RP,RP,RP,RP",
                ],
            ],
        ),
        (
            FixtureId::FourPlayer12,
            [
                vec!["RP,RP,RP,A"],
                vec!["RP,RP,RP,A", "RP,RP,RP,RP"],
                vec!["RP,RP,RP,A", "A,RP,RP,RP", "RP,RP,RP,RP"],
            ],
        ),
        (
            FixtureId::FourPlayer8,
            [
                vec!["RP,RP,RP,A"],
                vec!["RP,RP,RP,A", "RP,RP,RP,RP"],
                vec!["RP,RP,RP,A", "RP,RP,RP,RP"],
            ],
        ),
    ]
}

pub fn profile_set(codes: &[&str]) -> std::collections::BTreeSet<Profile> {
    codes.iter().map(|c| c.parse().unwrap()).collect()
}
