//! Fixed-length multi-dice Ludo: rules engine, bot strategies, reproducible
//! Monte Carlo sweeps, empirical ε-Nash equilibria and the expected-path
//! payoff model.

pub mod analytics;
pub mod board;
pub mod dice;
pub mod engine;
pub mod equilibrium;
pub mod error;
pub mod montecarlo;
pub mod strategies;
pub mod transcript;

pub use engine::{play_game, GameConfig, GameResult, Outcome, Variant};
pub use equilibrium::{epsilon_ne, load_fixture, std_error, Epsilon, EquilibriumReport, FixtureId, WinTable};
pub use error::{Error, Result};
pub use montecarlo::{derive_game_seed, MatchStats, PayoffTable, Profile, Simulator, Workers};
pub use strategies::StrategyKind;
