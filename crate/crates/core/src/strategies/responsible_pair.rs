//! Responsible Pair: move tokens in rotating pairs up to the pivot square
//! (path position 27, roughly the diagonally opposite start), hold back from
//! captures that would drag a token past the pivot early, chase with the
//! reserve tokens and race the leader home once an opponent is about to
//! promote.

use std::collections::VecDeque;

use super::Observation;
use crate::board::{to_loop_cell, LandingOutcome, HOME_COLUMN_START, LOOP_CELLS, TOKENS_PER_SEAT};
use crate::engine::{Action, PoolDie};

/// Path position the opening rotation works towards.
pub const RP_PIVOT: u8 = 27;

/// Reserve tokens used for chasing.
const CHASERS: [usize; 2] = [2, 3];

/// Which of two members moves. The choice holds for the rest of a game turn
/// and flips at the next turn in which the member is used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
struct Alternation {
    current: usize,
    used_in: Option<usize>,
}

impl Alternation {
    fn preferred(&mut self, turn: usize) -> usize {
        if self.used_in.is_some_and(|t| t != turn) {
            self.current = 1 - self.current;
            self.used_in = None;
        }
        self.current
    }

    fn used(&mut self, member: usize, turn: usize) {
        self.current = member;
        self.used_in = Some(turn);
    }
}

/// Per-game state of the rotation. Fresh at game start.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RpMemory {
    rotation: [Option<usize>; 2],
    opening: Alternation,
    reserves: VecDeque<usize>,
    late: Alternation,
}

impl Default for RpMemory {
    fn default() -> Self {
        RpMemory {
            rotation: [Some(0), Some(1)],
            opening: Alternation::default(),
            reserves: VecDeque::from([2, 3]),
            late: Alternation::default(),
        }
    }
}

impl RpMemory {
    /// Tokens currently in the opening rotation.
    pub fn rotation(&self) -> [Option<usize>; 2] {
        self.rotation
    }

    /// Swap out rotation members that reached the pivot. Reserves are drawn in
    /// order; once they run out, any token still short of the pivot (for
    /// example one sent back by a capture) is drafted, lowest index first.
    fn refresh(&mut self, obs: &Observation<'_>) {
        for slot in 0..2 {
            let stale = self.rotation[slot].is_none_or(|t| obs.pos(t).value() >= RP_PIVOT);
            if !stale {
                continue;
            }
            let other = self.rotation[1 - slot];
            let mut replacement = None;
            while let Some(t) = self.reserves.pop_front() {
                if obs.pos(t).value() < RP_PIVOT && Some(t) != other {
                    replacement = Some(t);
                    break;
                }
            }
            if replacement.is_none() {
                replacement = (0..TOKENS_PER_SEAT)
                    .find(|&t| obs.pos(t).value() < RP_PIVOT && Some(t) != other);
            }
            self.rotation[slot] = replacement;
        }
    }
}

pub fn choose_rp(obs: &Observation<'_>, memory: &mut RpMemory) -> Option<Action> {
    if let Some(a) = obs.promotion() {
        return Some(a);
    }
    if let Some(a) = capture_tier(obs) {
        return Some(a);
    }
    if let Some(a) = to_safe_cell(obs) {
        return Some(a);
    }
    if let Some(a) = race_leader(obs) {
        return Some(a);
    }
    if let Some(a) = chase(obs) {
        return Some(a);
    }
    if (0..TOKENS_PER_SEAT).any(|t| obs.pos(t).value() < RP_PIVOT) {
        if let Some(a) = opening_rotation(obs, memory) {
            return Some(a);
        }
    } else if let Some(a) = late_alternation(obs, memory) {
        return Some(a);
    }
    (0..TOKENS_PER_SEAT).find_map(|t| obs.max_die_for(t).map(|d| Action::new(d.index, t)))
}

/// A token short of the pivot may not jump past it.
fn respects_pivot(obs: &Observation<'_>, token: usize, die: PoolDie) -> bool {
    let from = obs.pos(token).value();
    from >= RP_PIVOT || from + die.value <= RP_PIVOT
}

/// The capture tier on its own: the first capturing move, except that a token
/// short of the pivot may not jump past it.
pub fn capture_tier(obs: &Observation<'_>) -> Option<Action> {
    obs.moves()
        .filter(|&(t, d)| respects_pivot(obs, t, d))
        .find(|&(t, d)| matches!(obs.landing(d, t), LandingOutcome::Capture(_)))
        .map(|(t, d)| Action::new(d.index, t))
}

/// Start cells, a cell shared with another own token, or the home column.
fn to_safe_cell(obs: &Observation<'_>) -> Option<Action> {
    let seat = obs.board.seat(obs.mover);
    obs.moves()
        .find(|&(t, d)| {
            let target = obs.target(d, t);
            if target.in_home_column() {
                return true;
            }
            match to_loop_cell(seat, target) {
                Some(cell) => {
                    obs.board.is_start_cell(cell)
                        || obs.board.tokens_on_cell(obs.mover, cell).any(|other| other != t)
                }
                None => false,
            }
        })
        .map(|(t, d)| Action::new(d.index, t))
}

/// Once an opponent token has entered its home column or finished, push the most advanced
/// own token with the biggest die.
fn race_leader(obs: &Observation<'_>) -> Option<Action> {
    let threatened = obs
        .board
        .seats()
        .filter(|s| s.index != obs.mover)
        .any(|s| obs.board.tokens(s.index).iter().any(|p| p.value() >= HOME_COLUMN_START));
    if !threatened {
        return None;
    }
    let mut order: Vec<usize> = (0..TOKENS_PER_SEAT).filter(|&t| !obs.pos(t).is_home()).collect();
    order.sort_by_key(|&t| std::cmp::Reverse(obs.pos(t)));
    order
        .into_iter()
        .find_map(|t| obs.max_die_for(t).map(|d| Action::new(d.index, t)))
}

/// A reserve token with a capturable opponent 1..=6 steps ahead on the loop
/// closes in with the largest die not exceeding the gap.
fn chase(obs: &Observation<'_>) -> Option<Action> {
    let board = obs.board;
    let me = board.seat(obs.mover);
    for t in CHASERS {
        let pos = obs.pos(t);
        let Some(my_cell) = to_loop_cell(me, pos) else {
            continue;
        };
        let gap = board
            .seats()
            .filter(|s| s.index != obs.mover)
            .flat_map(|s| (0..TOKENS_PER_SEAT).map(move |v| (s, v)))
            .filter_map(|(s, v)| {
                let cell = to_loop_cell(s, board.tokens(s.index)[v])?;
                let gap = (cell + LOOP_CELLS - my_cell) % LOOP_CELLS;
                (1..=6).contains(&gap).then_some(gap)
            })
            .min();
        let Some(gap) = gap else {
            continue;
        };
        let die = obs
            .dice
            .iter()
            .copied()
            .filter(|&d| d.value <= gap && obs.legal(d, t))
            .fold(None, |best: Option<PoolDie>, d| match best {
                Some(b) if b.value >= d.value => Some(b),
                _ => Some(d),
            });
        if let Some(d) = die {
            return Some(Action::new(d.index, t));
        }
    }
    None
}

/// The two rotation tokens take alternate turns, preferring the largest die
/// that stops at or before the pivot, else the smallest die.
fn opening_rotation(obs: &Observation<'_>, memory: &mut RpMemory) -> Option<Action> {
    memory.refresh(obs);
    let preferred = memory.opening.preferred(obs.turn_index);
    let slot = match memory.rotation[preferred] {
        Some(_) => preferred,
        None => 1 - preferred,
    };
    let token = memory.rotation[slot]?;
    let legal: Vec<PoolDie> = obs.dice.iter().copied().filter(|&d| obs.legal(d, token)).collect();
    let within = legal
        .iter()
        .copied()
        .filter(|d| obs.pos(token).value() + d.value <= RP_PIVOT)
        .fold(None, |best: Option<PoolDie>, d| match best {
            Some(b) if b.value >= d.value => Some(b),
            _ => Some(d),
        });
    let die = within.or_else(|| {
        legal.iter().copied().fold(None, |best: Option<PoolDie>, d| match best {
            Some(b) if b.value <= d.value => Some(b),
            _ => Some(d),
        })
    })?;
    memory.opening.used(slot, obs.turn_index);
    Some(Action::new(die.index, token))
}

/// Every token is past the pivot: tokens 0 and 1 take alternate turns with
/// their biggest legal die.
fn late_alternation(obs: &Observation<'_>, memory: &mut RpMemory) -> Option<Action> {
    let preferred = memory.late.preferred(obs.turn_index);
    for k in 0..2 {
        let token = (preferred + k) % 2;
        if let Some(d) = obs.max_die_for(token) {
            memory.late.used(token, obs.turn_index);
            return Some(Action::new(d.index, token));
        }
    }
    None
}
