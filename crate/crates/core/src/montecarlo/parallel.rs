use rayon::prelude::*;
use rayon::ThreadPool;

use super::{sequential, MatchStats};
use crate::engine::GameConfig;
use crate::strategies::StrategyKind;

/// Games per work item. Each chunk is played sequentially and the integer
/// partials are summed, so the result does not depend on the thread count.
const CHUNK: u64 = 64;

pub fn build_pool(workers: usize) -> ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .thread_name(|i| format!("ludo-sim-{i}"))
        .build()
        .expect("failed to build simulation thread pool")
}

pub fn run_games(
    pool: &ThreadPool,
    config: GameConfig,
    profile: &[StrategyKind],
    n: u64,
    master_seed: u64,
) -> MatchStats {
    let chunks = n.div_ceil(CHUNK);
    pool.install(|| {
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let start = c * CHUNK;
                sequential::run_range(config, profile, master_seed, start..(start + CHUNK).min(n))
            })
            .reduce(|| MatchStats::empty(config.seats()), |a, b| a.merge(&b))
    })
}
