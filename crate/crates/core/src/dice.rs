//! Dice sources. Games draw every die through [`DiceSource`] so tests can
//! script exact rolls while simulations use a seeded generator.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

/// Which roll the engine is asking for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RollKind {
    /// The `index`-th die of a turn's shared pool.
    Pool { index: usize },
    /// The `link`-th private die of an extra-move chain (1-based).
    Extra { link: usize },
}

pub trait DiceSource {
    /// A face value in `1..=6`.
    fn roll(&mut self, kind: RollKind) -> u8;
}

/// Maps a uniform 64-bit word to a die face without modulo bias beyond
/// 2^-61: `1 + floor(word * 6 / 2^64)`.
pub fn face_from_u64(word: u64) -> u8 {
    1 + ((word as u128 * 6) >> 64) as u8
}

/// xoshiro256** stream seeded from a 64-bit game seed (splitmix64 expansion).
#[derive(Debug, Clone)]
pub struct SeededDice {
    rng: Xoshiro256StarStar,
}

impl SeededDice {
    pub fn new(seed: u64) -> Self {
        SeededDice {
            rng: Xoshiro256StarStar::seed_from_u64(seed),
        }
    }
}

impl DiceSource for SeededDice {
    fn roll(&mut self, _kind: RollKind) -> u8 {
        face_from_u64(self.rng.next_u64())
    }
}

/// Replays fixed pool dice in order; every extra-move die comes from
/// `extra_face`.
#[derive(Debug, Clone)]
pub struct ScriptedDice {
    pool: Vec<u8>,
    next: usize,
    extra_face: u8,
}

impl ScriptedDice {
    pub fn new(pool: Vec<u8>, extra_face: u8) -> Self {
        assert!(pool.iter().chain([&extra_face]).all(|f| (1..=6).contains(f)));
        ScriptedDice {
            pool,
            next: 0,
            extra_face,
        }
    }
}

impl DiceSource for ScriptedDice {
    fn roll(&mut self, kind: RollKind) -> u8 {
        match kind {
            RollKind::Pool { .. } => {
                let face = *self.pool.get(self.next).expect("scripted pool exhausted");
                self.next += 1;
                face
            }
            RollKind::Extra { .. } => self.extra_face,
        }
    }
}
