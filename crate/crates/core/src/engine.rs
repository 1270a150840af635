//! Game orchestration for both variants.
//!
//! A turn: the owner rolls the whole pool, then movers pick one die each in
//! a fixed rotation that the owner opens and closes. Using a six, capturing
//! or promoting grants one private extra die; a third consecutive six in the
//! same mover's chain is void and ends it.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::board::{BoardView, LandingOutcome, PathPosition, TokenRef, HOME, TOKENS_PER_SEAT};
use crate::dice::{DiceSource, RollKind, SeededDice};
use crate::error::{Error, Result};
use crate::strategies::{decide, Observation, RpMemory, StrategyKind};
use crate::transcript::{RollSource, TranscriptEntry};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    #[serde(rename = "2p3d")]
    TwoPlayerThreeDice,
    #[serde(rename = "4p5d")]
    FourPlayerFiveDice,
}

impl Variant {
    pub fn seats(self) -> usize {
        match self {
            Variant::TwoPlayerThreeDice => 2,
            Variant::FourPlayerFiveDice => 4,
        }
    }

    pub fn dice_per_turn(self) -> usize {
        match self {
            Variant::TwoPlayerThreeDice => 3,
            Variant::FourPlayerFiveDice => 5,
        }
    }

    pub fn canonical_turns(self) -> &'static [u32] {
        match self {
            Variant::TwoPlayerThreeDice => &[16, 20, 24],
            Variant::FourPlayerFiveDice => &[8, 12, 16],
        }
    }

    pub fn id(self) -> &'static str {
        match self {
            Variant::TwoPlayerThreeDice => "2p3d",
            Variant::FourPlayerFiveDice => "4p5d",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "2p3d" | "2p" => Ok(Variant::TwoPlayerThreeDice),
            "4p5d" | "4p" => Ok(Variant::FourPlayerFiveDice),
            _ => Err(Error::UnknownVariant(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GameConfig {
    pub variant: Variant,
    pub total_turns: u32,
}

impl GameConfig {
    pub fn new(variant: Variant, total_turns: u32) -> Result<Self> {
        if total_turns == 0 {
            return Err(Error::ZeroTurns);
        }
        Ok(GameConfig {
            variant,
            total_turns,
        })
    }

    pub fn seats(&self) -> usize {
        self.variant.seats()
    }

    pub fn dice_per_turn(&self) -> usize {
        self.variant.dice_per_turn()
    }

    /// Whether the length is one of the variant's standard game lengths.
    pub fn is_canonical(&self) -> bool {
        self.variant.canonical_turns().contains(&self.total_turns)
    }

    /// Pool picks each seat makes over a whole game, extras excluded.
    pub fn picks_per_seat(&self) -> u32 {
        self.total_turns * self.dice_per_turn() as u32 / self.seats() as u32
    }
}

/// Seats picking from the pool in `turn_index`, in order. The turn owner
/// rotates with the turn and both opens and closes the sequence.
pub fn pick_sequence(variant: Variant, turn_index: usize) -> Vec<usize> {
    let seats = variant.seats();
    let owner = turn_index % seats;
    (0..seats).map(|k| (owner + k) % seats).chain([owner]).collect()
}

/// One die of a turn's pool, identified by its position in rolled order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PoolDie {
    pub index: usize,
    pub value: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Action {
    pub die_index: usize,
    pub token: usize,
}

impl Action {
    pub fn new(die_index: usize, token: usize) -> Self {
        Action { die_index, token }
    }
}

/// A token may move by `die` unless it is home or would overshoot home.
pub fn is_legal(board: &BoardView, mover: usize, token: usize, die: u8) -> bool {
    let pos = board.tokens(mover)[token];
    !pos.is_home() && pos.value() + die <= HOME
}

/// Every legal (die, token) pair for `mover`. Empty means the pick is forfeit.
pub fn legal_actions(board: &BoardView, mover: usize, dice: &[PoolDie]) -> Vec<Action> {
    dice.iter()
        .flat_map(|d| (0..TOKENS_PER_SEAT).map(move |t| (d, t)))
        .filter(|(d, t)| is_legal(board, mover, *t, d.value))
        .map(|(d, t)| Action::new(d.index, t))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Event {
    Moved {
        seat: usize,
        token: usize,
        from: PathPosition,
        to: PathPosition,
    },
    /// Victims with the positions they were sent back from.
    Captured(Vec<(TokenRef, PathPosition)>),
    Promoted { seat: usize, token: usize },
    ExtraGranted { seat: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Winner(usize),
    Draw,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameResult {
    pub points: Vec<u32>,
    pub outcome: Outcome,
}

impl GameResult {
    fn from_points(points: Vec<u32>) -> Self {
        let best = *points.iter().max().expect("at least two seats");
        let leaders: Vec<usize> = (0..points.len()).filter(|&s| points[s] == best).collect();
        let outcome = match leaders[..] {
            [winner] => Outcome::Winner(winner),
            _ => Outcome::Draw,
        };
        GameResult { points, outcome }
    }
}

/// Mutable state of one game in progress.
pub struct Game<D> {
    config: GameConfig,
    profile: Vec<StrategyKind>,
    board: BoardView,
    scores: Vec<u32>,
    bonuses: Vec<u32>,
    pool_picks: Vec<u32>,
    memories: Vec<RpMemory>,
    dice: D,
    turn_index: usize,
    transcript: Option<Vec<TranscriptEntry>>,
    audit: Option<Audit>,
}

/// Score-conservation bookkeeping, enabled for tests.
#[derive(Debug, Default, Clone)]
pub struct Audit {
    pub checks: u64,
    pub failures: Vec<String>,
}

impl Game<SeededDice> {
    pub fn seeded(config: GameConfig, profile: &[StrategyKind], seed: u64) -> Result<Self> {
        Game::new(config, profile, SeededDice::new(seed))
    }
}

impl<D: DiceSource> Game<D> {
    pub fn new(config: GameConfig, profile: &[StrategyKind], dice: D) -> Result<Self> {
        let seats = config.seats();
        if profile.len() != seats {
            return Err(Error::ProfileLength {
                expected: seats,
                got: profile.len(),
            });
        }
        Ok(Game {
            config,
            profile: profile.to_vec(),
            board: BoardView::new(seats),
            scores: vec![0; seats],
            bonuses: vec![0; seats],
            pool_picks: vec![0; seats],
            memories: vec![RpMemory::default(); seats],
            dice,
            turn_index: 0,
            transcript: None,
            audit: None,
        })
    }

    pub fn record_transcript(mut self) -> Self {
        self.transcript = Some(Vec::new());
        self
    }

    /// Recompute every seat's score from token positions after each event
    /// and compare with the running totals.
    pub fn enable_audit(mut self) -> Self {
        self.audit = Some(Audit::default());
        self
    }

    pub fn audit(&self) -> Option<&Audit> {
        self.audit.as_ref()
    }

    pub fn board(&self) -> &BoardView {
        &self.board
    }

    pub fn config(&self) -> &GameConfig {
        &self.config
    }

    pub fn turn_index(&self) -> usize {
        self.turn_index
    }

    pub fn is_over(&self) -> bool {
        self.turn_index >= self.config.total_turns as usize
    }

    /// Score recomputed from the board.
    pub fn score(&self, seat: usize) -> u32 {
        self.board.score(seat)
    }

    /// Incrementally maintained score.
    pub fn tracked_score(&self, seat: usize) -> u32 {
        self.scores[seat]
    }

    pub fn pool_picks(&self) -> &[u32] {
        &self.pool_picks
    }

    /// Promotions per seat.
    pub fn bonuses(&self) -> &[u32] {
        &self.bonuses
    }

    pub fn transcript(&self) -> Option<&[TranscriptEntry]> {
        self.transcript.as_deref()
    }

    fn observe_event(&mut self, _event: &Event) {
        if let Some(audit) = self.audit.as_mut() {
            audit.checks += 1;
            for seat in 0..self.scores.len() {
                let fresh = self.board.score(seat);
                if fresh != self.scores[seat] {
                    audit.failures.push(format!(
                        "turn {}: seat {seat} tracked {} but board says {fresh}",
                        self.turn_index, self.scores[seat]
                    ));
                }
            }
        }
    }

    /// Move `token` of `mover` by `die`, resolving captures and promotion.
    /// At most one `ExtraGranted` is emitted, however many triggers fire.
    pub fn apply_action(&mut self, mover: usize, token: usize, die: u8) -> Result<Vec<Event>> {
        if token >= TOKENS_PER_SEAT || !(1..=6).contains(&die) {
            return Err(Error::IllegalAction {
                seat: mover,
                token,
                die,
                reason: "token or die out of range",
            });
        }
        if !is_legal(&self.board, mover, token, die) {
            return Err(Error::IllegalAction {
                seat: mover,
                token,
                die,
                reason: "token is home or would overshoot",
            });
        }
        let me = TokenRef { seat: mover, token };
        let from = self.board.position(me);
        let to = from.advanced(die).expect("checked legal");
        let landing = self.board.resolve_landing(self.board.seat(mover), to);

        let mut events = Vec::with_capacity(3);
        self.board.set_position(me, to);
        // the bonus belongs to the same step, so scores agree with the board
        // at every event boundary
        let bonus = if to.is_home() { HOME as u32 } else { 0 };
        self.scores[mover] += die as u32 + bonus;
        let moved = Event::Moved {
            seat: mover,
            token,
            from,
            to,
        };
        self.observe_event(&moved);
        events.push(moved);

        let mut extra = die == 6;
        match landing {
            LandingOutcome::Capture(victims) => {
                let mut lost = Vec::with_capacity(victims.len());
                for v in victims {
                    let was = self.board.position(v);
                    self.board.set_position(v, PathPosition::START);
                    self.scores[v.seat] -= was.value() as u32;
                    lost.push((v, was));
                }
                let captured = Event::Captured(lost);
                self.observe_event(&captured);
                events.push(captured);
                extra = true;
            }
            LandingOutcome::Promoted => {
                self.bonuses[mover] += 1;
                let promoted = Event::Promoted { seat: mover, token };
                self.observe_event(&promoted);
                events.push(promoted);
                extra = true;
            }
            LandingOutcome::Plain | LandingOutcome::HomeColumn => {}
        }
        if extra {
            let granted = Event::ExtraGranted { seat: mover };
            self.observe_event(&granted);
            events.push(granted);
        }
        Ok(events)
    }

    fn decide(&mut self, mover: usize, dice: &[PoolDie]) -> Option<Action> {
        let obs = Observation {
            mover,
            board: &self.board,
            dice,
            turn_index: self.turn_index,
        };
        decide(self.profile[mover], &obs, &mut self.memories[mover])
    }

    fn log(&mut self, entry: TranscriptEntry) {
        if let Some(t) = self.transcript.as_mut() {
            t.push(entry);
        }
    }

    fn log_action(&mut self, mover: usize, source: RollSource, die: u8, token: usize, events: &[Event]) {
        if self.transcript.is_none() {
            return;
        }
        let mut entry = TranscriptEntry::new(self.turn_index, mover, source, die);
        for e in events {
            match e {
                Event::Moved { from, to, .. } => {
                    entry.token = Some(token);
                    entry.from = Some(*from);
                    entry.to = Some(*to);
                }
                Event::Captured(_) => entry.capture = true,
                Event::Promoted { .. } => entry.promote = true,
                Event::ExtraGranted { .. } => entry.extra = true,
            }
        }
        self.log(entry);
    }

    /// Extra-move chain after an `ExtraGranted`. `six_count` is the number of
    /// consecutive sixes the mover has used so far in this chain.
    pub fn run_extra_chain(&mut self, mover: usize, mut six_count: u32) -> Vec<Event> {
        let mut all = Vec::new();
        for link in 1.. {
            let face = self.dice.roll(RollKind::Extra { link });
            if face == 6 {
                six_count += 1;
                if six_count >= 3 {
                    let mut entry =
                        TranscriptEntry::new(self.turn_index, mover, RollSource::Extra(link), face);
                    entry.void = true;
                    self.log(entry);
                    break;
                }
            } else {
                six_count = 0;
            }
            let die = [PoolDie {
                index: 0,
                value: face,
            }];
            let Some(action) = self.decide(mover, &die) else {
                self.log(TranscriptEntry::new(self.turn_index, mover, RollSource::Extra(link), face));
                break;
            };
            let events = self
                .apply_action(mover, action.token, face)
                .expect("strategy returned an illegal extra move");
            self.log_action(mover, RollSource::Extra(link), face, action.token, &events);
            let again = events.iter().any(|e| matches!(e, Event::ExtraGranted { .. }));
            all.extend(events);
            if !again {
                break;
            }
        }
        all
    }

    /// Play one full turn: roll the pool and let every mover in the pick
    /// sequence take a die.
    pub fn play_turn(&mut self) {
        let variant = self.config.variant;
        let mut pool: Vec<PoolDie> = (0..self.config.dice_per_turn())
            .map(|index| PoolDie {
                index,
                value: self.dice.roll(RollKind::Pool { index }),
            })
            .collect();
        for mover in pick_sequence(variant, self.turn_index) {
            self.pool_picks[mover] += 1;
            match self.decide(mover, &pool) {
                Some(action) => {
                    let slot = pool
                        .iter()
                        .position(|d| d.index == action.die_index)
                        .expect("strategy picked a die outside the pool");
                    let die = pool.remove(slot);
                    let events = self
                        .apply_action(mover, action.token, die.value)
                        .expect("strategy returned an illegal pool move");
                    self.log_action(mover, RollSource::Pool(die.index), die.value, action.token, &events);
                    if events.iter().any(|e| matches!(e, Event::ExtraGranted { .. })) {
                        self.run_extra_chain(mover, u32::from(die.value == 6));
                    }
                }
                None => {
                    // forfeit: the earliest untaken die is consumed unused
                    let die = pool.remove(0);
                    self.log(TranscriptEntry::new(
                        self.turn_index,
                        mover,
                        RollSource::Pool(die.index),
                        die.value,
                    ));
                }
            }
        }
        self.turn_index += 1;
    }

    pub fn result(&self) -> GameResult {
        GameResult::from_points(self.scores.clone())
    }

    /// Play the remaining turns and return the final result.
    pub fn play_to_end(&mut self) -> GameResult {
        while !self.is_over() {
            self.play_turn();
        }
        self.result()
    }
}

/// Play one seeded game. Deterministic in `(config, profile, seed)`.
pub fn play_game(config: GameConfig, profile: &[StrategyKind], seed: u64) -> Result<GameResult> {
    Ok(Game::seeded(config, profile, seed)?.play_to_end())
}

/// As [`play_game`], also returning the event transcript.
pub fn play_game_with_transcript(
    config: GameConfig,
    profile: &[StrategyKind],
    seed: u64,
) -> Result<(GameResult, Vec<TranscriptEntry>)> {
    let mut game = Game::seeded(config, profile, seed)?.record_transcript();
    let result = game.play_to_end();
    let transcript = game.transcript.take().unwrap_or_default();
    Ok((result, transcript))
}
