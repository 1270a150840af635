//! `ludo-lab`: run simulations and sweeps, find ε-equilibria, print the
//! expected-path tables and replay single games.
//!
//! Exit codes: 0 success, 1 runtime failure, 2 usage error.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ludo_lab::equilibrium::{Epsilon, FixtureId};
use ludo_lab::{Profile, Variant};

#[derive(Debug, Parser)]
#[command(name = "ludo-lab", version, about = "Fixed-length multi-dice Ludo simulator and equilibrium toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Play many games of one strategy profile and print its statistics row.
    Simulate(SimulateArgs),
    /// Play every strategy profile and print the full payoff table.
    Sweep(SweepArgs),
    /// List the ε-Nash equilibria of a win table.
    Ne(NeArgs),
    /// Print the expected-path point and win tables.
    Expected(ExpectedArgs),
    /// List the embedded reference tables, or print one as CSV.
    Fixtures(FixturesArgs),
    /// Replay one seeded game move by move.
    Replay(ReplayArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct GameArgs {
    /// Game variant: 2p3d or 4p5d.
    #[arg(long, default_value = "2p3d", value_parser = parse_variant)]
    pub variant: Variant,
    /// Total turns; defaults to the variant's standard length of 16.
    #[arg(long, default_value_t = 16)]
    pub turns: u32,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Games per profile; defaults to 10000 (two players) or 1000 (four).
    #[arg(long)]
    pub games: Option<u64>,
    /// Master seed.
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Worker threads; results do not depend on this.
    #[arg(long, env = "LUDO_LAB_WORKERS")]
    pub workers: Option<usize>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this file (plus a `.manifest.json` sidecar) instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub game: GameArgs,
    /// Strategies in seat order, e.g. `A,N` or `RP,A,N,N`.
    #[arg(long, value_parser = parse_profile)]
    pub profile: Profile,
    #[command(flatten)]
    pub run: RunArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub game: GameArgs,
    #[command(flatten)]
    pub run: RunArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct NeArgs {
    /// Embedded reference table.
    #[arg(long, value_parser = parse_fixture, conflicts_with = "table", required_unless_present = "table")]
    pub fixture: Option<FixtureId>,
    /// CSV table written by `sweep`.
    #[arg(long)]
    pub table: Option<PathBuf>,
    /// Tolerance in win-percentage points, or `se` / `2se`.
    #[arg(long, default_value = "0", value_parser = parse_epsilon)]
    pub epsilon: Epsilon,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    pub format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct ExpectedArgs {
    /// Limit output to one variant.
    #[arg(long, value_parser = parse_variant)]
    pub variant: Option<Variant>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct FixturesArgs {
    /// Print this table as CSV instead of listing.
    #[arg(long, value_parser = parse_fixture)]
    pub show: Option<FixtureId>,
}

#[derive(Debug, Args)]
pub struct ReplayArgs {
    #[command(flatten)]
    pub game: GameArgs,
    #[arg(long, value_parser = parse_profile)]
    pub profile: Profile,
    /// Master seed of the run the game belongs to.
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Index of the game within that run.
    #[arg(long, default_value_t = 0)]
    pub game_index: u64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse().map_err(|e: ludo_lab::Error| e.to_string())
}

fn parse_profile(s: &str) -> Result<Profile, String> {
    s.parse().map_err(|e: ludo_lab::Error| e.to_string())
}

fn parse_fixture(s: &str) -> Result<FixtureId, String> {
    s.parse().map_err(|e: ludo_lab::Error| e.to_string())
}

fn parse_epsilon(s: &str) -> Result<Epsilon, String> {
    s.parse().map_err(|e: ludo_lab::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(commands::Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(commands::Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
