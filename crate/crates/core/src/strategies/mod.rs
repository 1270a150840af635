//! Rule-based bots. Each policy is a pure function of what the mover can see
//! (plus, for Responsible Pair, a small per-game memory) and returns the die
//! and token to play, or `None` when nothing is legal.
//!
//! Tie-breaks, unless a tier says otherwise: lowest token index, then lowest
//! die index.

mod aggressive;
mod naive;
mod responsible_pair;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::board::{BoardView, LandingOutcome, PathPosition, TokenRef, TOKENS_PER_SEAT};
use crate::engine::{is_legal, Action, PoolDie};
use crate::error::Error;

pub use aggressive::choose_aggressive;
pub use naive::choose_naive;
pub use responsible_pair::{capture_tier as rp_capture_tier, choose_rp, RpMemory, RP_PIVOT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum StrategyKind {
    #[serde(rename = "N")]
    Naive,
    #[serde(rename = "A")]
    Aggressive,
    #[serde(rename = "RP")]
    ResponsiblePair,
}

impl StrategyKind {
    /// Lexicographic order used for sweeps: N < A < RP.
    pub const ALL: [StrategyKind; 3] = [
        StrategyKind::Naive,
        StrategyKind::Aggressive,
        StrategyKind::ResponsiblePair,
    ];

    pub fn code(self) -> &'static str {
        match self {
            StrategyKind::Naive => "N",
            StrategyKind::Aggressive => "A",
            StrategyKind::ResponsiblePair => "RP",
        }
    }

    pub fn rank(self) -> usize {
        self as usize
    }
}

impl fmt::Display for StrategyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for StrategyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_uppercase().as_str() {
            "N" | "NAIVE" => Ok(StrategyKind::Naive),
            "A" | "AGGRESSIVE" => Ok(StrategyKind::Aggressive),
            "RP" | "RESPONSIBLEPAIR" | "RESPONSIBLE PAIR" => Ok(StrategyKind::ResponsiblePair),
            _ => Err(Error::UnknownStrategy(s.to_string())),
        }
    }
}

/// Everything the mover sees when picking. The game has no hidden state.
#[derive(Debug, Clone, Copy)]
pub struct Observation<'a> {
    pub mover: usize,
    pub board: &'a BoardView,
    /// Untaken dice in rolled order.
    pub dice: &'a [PoolDie],
    pub turn_index: usize,
}

impl<'a> Observation<'a> {
    pub(crate) fn pos(&self, token: usize) -> PathPosition {
        self.board.tokens(self.mover)[token]
    }

    pub(crate) fn legal(&self, die: PoolDie, token: usize) -> bool {
        is_legal(self.board, self.mover, token, die.value)
    }

    /// Target position of a legal move.
    pub(crate) fn target(&self, die: PoolDie, token: usize) -> PathPosition {
        self.pos(token).advanced(die.value).expect("legal move")
    }

    pub(crate) fn landing(&self, die: PoolDie, token: usize) -> LandingOutcome {
        self.board
            .resolve_landing(self.board.seat(self.mover), self.target(die, token))
    }

    /// All legal moves, token-major then die order.
    pub(crate) fn moves(&self) -> impl Iterator<Item = (usize, PoolDie)> + '_ {
        (0..TOKENS_PER_SEAT)
            .flat_map(move |t| self.dice.iter().map(move |&d| (t, d)))
            .filter(move |&(t, d)| self.legal(d, t))
    }

    /// Highest-valued legal die for `token`; ties go to the earlier die.
    pub(crate) fn max_die_for(&self, token: usize) -> Option<PoolDie> {
        self.dice
            .iter()
            .copied()
            .filter(|&d| self.legal(d, token))
            .fold(None, |best: Option<PoolDie>, d| match best {
                Some(b) if b.value >= d.value => Some(b),
                _ => Some(d),
            })
    }

    pub(crate) fn promotion(&self) -> Option<Action> {
        self.moves()
            .find(|&(t, d)| self.target(d, t).is_home())
            .map(|(t, d)| Action::new(d.index, t))
    }

    pub(crate) fn victim_points(&self, victims: &[TokenRef]) -> u32 {
        victims.iter().map(|v| self.board.position(*v).value() as u32).sum()
    }
}

/// Dispatch to the policy for `kind`. Naive and Aggressive ignore `memory`.
pub fn decide(kind: StrategyKind, obs: &Observation<'_>, memory: &mut RpMemory) -> Option<Action> {
    match kind {
        StrategyKind::Naive => choose_naive(obs),
        StrategyKind::Aggressive => choose_aggressive(obs),
        StrategyKind::ResponsiblePair => choose_rp(obs, memory),
    }
}
