use std::ops::Range;

use super::{derive_game_seed, MatchStats};
use crate::engine::{play_game, GameConfig};
use crate::strategies::StrategyKind;

/// Play games `range` of a run in index order on the calling thread.
pub fn run_range(
    config: GameConfig,
    profile: &[StrategyKind],
    master_seed: u64,
    range: Range<u64>,
) -> MatchStats {
    let mut stats = MatchStats::empty(config.seats());
    for i in range {
        let result = play_game(config, profile, derive_game_seed(master_seed, i)).expect("profile length checked by caller");
        stats.record(&result);
    }
    stats
}
