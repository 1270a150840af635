//! Reproducible batch simulation and the full strategy-profile sweep.
//!
//! Game `i` of a run with master seed `m` is seeded with
//! `derive_game_seed(m, i)`; a sweep gives profile number `r` the master seed
//! `derive_game_seed(m, r)`. Results are exact integer tallies, identical for
//! any worker count.

#[cfg(feature = "parallel")]
mod parallel;
mod sequential;
mod stats;
mod table;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::engine::GameConfig;
use crate::error::{Error, Result};
use crate::strategies::StrategyKind;

pub use sequential::run_range;
pub use stats::MatchStats;
pub use table::{header, record, write_records_csv, Cell, PayoffTable, TableRecord};

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// splitmix64 output mix.
pub fn avalanche(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for game `game_index` of a run.
pub fn derive_game_seed(master_seed: u64, game_index: u64) -> u64 {
    avalanche(master_seed ^ game_index.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA))
}

/// One strategy per seat, in turn order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Profile(pub Vec<StrategyKind>);

impl Profile {
    pub fn seats(&self) -> usize {
        self.0.len()
    }

    pub fn kinds(&self) -> &[StrategyKind] {
        &self.0
    }

    /// Position in the lexicographic enumeration (seat 1 most significant).
    pub fn rank(&self) -> usize {
        self.0.iter().fold(0, |acc, k| acc * 3 + k.rank())
    }

    /// Inverse of [`Profile::rank`].
    pub fn from_rank(seats: usize, mut rank: usize) -> Profile {
        let mut kinds = vec![StrategyKind::Naive; seats];
        for slot in kinds.iter_mut().rev() {
            *slot = StrategyKind::ALL[rank % 3];
            rank /= 3;
        }
        Profile(kinds)
    }

    /// All `3^seats` profiles, lexicographic with N < A < RP.
    pub fn all(seats: usize) -> Vec<Profile> {
        (0..3usize.pow(seats as u32)).map(|r| Profile::from_rank(seats, r)).collect()
    }

    /// The same profile with `seat` switched to `kind`.
    pub fn with_seat(&self, seat: usize, kind: StrategyKind) -> Profile {
        let mut p = self.clone();
        p.0[seat] = kind;
        p
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let codes: Vec<&str> = self.0.iter().map(|k| k.code()).collect();
        f.write_str(&codes.join(","))
    }
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split(',').map(str::parse).collect::<Result<Vec<_>>>().map(Profile)
    }
}

/// Requested parallelism. Never affects results.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Workers {
    /// One worker per available core.
    Auto,
    Fixed(usize),
}

impl Workers {
    pub fn count(self) -> usize {
        match self {
            Workers::Auto => std::thread::available_parallelism().map_or(1, |n| n.get()),
            Workers::Fixed(n) => n.max(1),
        }
    }
}

/// Runs simulations with a fixed worker count. Without the `parallel`
/// feature every run is sequential.
pub struct Simulator {
    #[cfg(feature = "parallel")]
    pool: Option<rayon::ThreadPool>,
}

impl Simulator {
    pub fn new(workers: Workers) -> Self {
        let count = workers.count();
        #[cfg(feature = "parallel")]
        {
            Simulator {
                pool: (count > 1).then(|| parallel::build_pool(count)),
            }
        }
        #[cfg(not(feature = "parallel"))]
        {
            let _ = count;
            Simulator {}
        }
    }

    pub fn sequential() -> Self {
        Simulator::new(Workers::Fixed(1))
    }

    /// Play `n` games of `profile` seeded from `master_seed`.
    pub fn simulate(&self, config: GameConfig, profile: &Profile, n: u64, master_seed: u64) -> Result<MatchStats> {
        if profile.seats() != config.seats() {
            return Err(Error::ProfileLength {
                expected: config.seats(),
                got: profile.seats(),
            });
        }
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.pool {
            return Ok(parallel::run_games(pool, config, profile.kinds(), n, master_seed));
        }
        Ok(run_range(config, profile.kinds(), master_seed, 0..n))
    }

    /// Simulate every profile, `n` games each.
    pub fn sweep(&self, config: GameConfig, n: u64, master_seed: u64) -> PayoffTable {
        let rows = Profile::all(config.seats())
            .into_iter()
            .map(|p| {
                let seed = derive_game_seed(master_seed, p.rank() as u64);
                let stats = self.simulate(config, &p, n, seed).expect("profile matches variant");
                (p, stats)
            })
            .collect();
        PayoffTable {
            config,
            games: n,
            master_seed,
            rows,
        }
    }
}

/// [`Simulator::simulate`] on all available cores.
pub fn simulate(config: GameConfig, profile: &Profile, n: u64, master_seed: u64) -> Result<MatchStats> {
    Simulator::new(Workers::Auto).simulate(config, profile, n, master_seed)
}

/// [`Simulator::sweep`] on all available cores.
pub fn sweep(config: GameConfig, n: u64, master_seed: u64) -> PayoffTable {
    Simulator::new(Workers::Auto).sweep(config, n, master_seed)
}

/// Default games per profile: 10,000 for two players, 1,000 for four.
pub fn default_games(config: &GameConfig) -> u64 {
    match config.seats() {
        2 => 10_000,
        _ => 1_000,
    }
}
