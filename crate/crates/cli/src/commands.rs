//! Subcommand implementations.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::time::Instant;

use serde_json::json;

use ludo_lab::analytics::{
    all_profiles_4p, expected_payoffs_4p, expected_payoff_table_2p, rederive_all_2p, win_table_2p, AnalyticStrategy,
    Bimatrix,
};
use ludo_lab::engine::play_game_with_transcript;
use ludo_lab::equilibrium::{epsilon_ne, load_fixture, read_win_table, FixtureId};
use ludo_lab::montecarlo::{default_games, record};
use ludo_lab::{derive_game_seed, Error, GameConfig, Outcome, Simulator, Variant, Workers};

use crate::output::{read_manifest, render_records, write_manifest, Manifest};
use crate::{Command, ExpectedArgs, FixturesArgs, GameArgs, NeArgs, ReplayArgs, ReportFormat, RunArgs, SimulateArgs, SweepArgs};

/// A failed command. Usage failures exit with 2, runtime failures with 1.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ProfileLength { .. } | Error::ZeroTurns | Error::MixedStrategyIn4p(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

pub fn run(command: Command) -> CmdResult {
    match command {
        Command::Simulate(args) => simulate(args),
        Command::Sweep(args) => sweep(args),
        Command::Ne(args) => ne(args),
        Command::Expected(args) => expected(args),
        Command::Fixtures(args) => fixtures(args),
        Command::Replay(args) => replay(args),
    }
}

fn config(game: &GameArgs) -> Result<GameConfig, Failure> {
    Ok(GameConfig::new(game.variant, game.turns)?)
}

fn workers(run: &RunArgs) -> Result<Workers, Failure> {
    match run.workers {
        Some(0) => Err(Failure::Usage("--workers must be at least 1".into())),
        Some(n) => Ok(Workers::Fixed(n)),
        None => Ok(Workers::Auto),
    }
}

fn emit(text: &str, out: Option<&Path>) -> CmdResult {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn simulate(args: SimulateArgs) -> CmdResult {
    let cfg = config(&args.game)?;
    let workers = workers(&args.run)?;
    let games = args.run.games.unwrap_or_else(|| default_games(&cfg));
    let start = Instant::now();
    let stats = Simulator::new(workers).simulate(cfg, &args.profile, games, args.run.seed)?;
    let duration = start.elapsed();
    let records = [record(1, &args.profile, &stats)];
    let text = render_records(args.output.format, cfg.seats(), &records).map_err(Failure::Runtime)?;
    emit(&text, args.output.out.as_deref())?;
    if let Some(out) = &args.output.out {
        write_manifest(
            out,
            &Manifest {
                command: "simulate".into(),
                config: cfg,
                profile: Some(args.profile.to_string()),
                games,
                seed: args.run.seed,
                workers: workers.count(),
                version: env!("CARGO_PKG_VERSION").into(),
                duration_ms: duration.as_millis(),
            },
        )?;
    }
    Ok(())
}

fn sweep(args: SweepArgs) -> CmdResult {
    let cfg = config(&args.game)?;
    let workers = workers(&args.run)?;
    let games = args.run.games.unwrap_or_else(|| default_games(&cfg));
    let start = Instant::now();
    let table = Simulator::new(workers).sweep(cfg, games, args.run.seed);
    let duration = start.elapsed();
    let text = render_records(args.output.format, cfg.seats(), &table.records()).map_err(Failure::Runtime)?;
    emit(&text, args.output.out.as_deref())?;
    if let Some(out) = &args.output.out {
        write_manifest(
            out,
            &Manifest {
                command: "sweep".into(),
                config: cfg,
                profile: None,
                games,
                seed: args.run.seed,
                workers: workers.count(),
                version: env!("CARGO_PKG_VERSION").into(),
                duration_ms: duration.as_millis(),
            },
        )?;
    }
    Ok(())
}

fn ne(args: NeArgs) -> CmdResult {
    let table = match (args.fixture, &args.table) {
        (Some(id), _) => load_fixture(id),
        (None, Some(path)) => {
            let file = fs::File::open(path).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))?;
            let mut table = read_win_table(file)?;
            if let Some(m) = read_manifest(path) {
                table.variant = Some(m.config.variant);
                table.turns = Some(m.config.total_turns);
                table.games = Some(m.games);
            }
            table
        }
        (None, None) => return Err(Failure::Usage("one of --fixture or --table is required".into())),
    };
    let epsilon = args.epsilon.resolve(table.games)?;
    let report = epsilon_ne(&table, epsilon)?;
    let text = match args.format {
        ReportFormat::Json => serde_json::to_string_pretty(&report).map_err(|e| Failure::Runtime(e.to_string()))? + "\n",
        ReportFormat::Text => {
            let mut s = String::new();
            let show = |v: Option<String>| v.unwrap_or_else(|| "?".into());
            writeln!(
                s,
                "variant {}  turns {}  games {}  epsilon {:.4}",
                show(report.variant.map(|v| v.to_string())),
                show(report.turns.map(|t| t.to_string())),
                show(report.n.map(|n| n.to_string())),
                report.epsilon
            )
            .unwrap();
            writeln!(s, "{} equilibria", report.profiles.len()).unwrap();
            for p in &report.profiles {
                writeln!(s, "  {p}").unwrap();
            }
            s
        }
    };
    emit(&text, None)
}

fn bimatrix_text(title: &str, m: &Bimatrix) -> String {
    let mut s = format!("{title}\n");
    let cells: Vec<Vec<String>> = m
        .iter()
        .map(|row| row.iter().map(|(a, b)| format!("({a}, {b})")).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(0);
    write!(s, "{:<4}", "").unwrap();
    for c in AnalyticStrategy::ALL {
        write!(s, "  {:<width$}", c.code()).unwrap();
    }
    s.push('\n');
    for (r, row) in AnalyticStrategy::ALL.iter().zip(&cells) {
        write!(s, "{:<4}", r.code()).unwrap();
        for cell in row {
            write!(s, "  {cell:<width$}").unwrap();
        }
        s.truncate(s.trim_end().len());
        s.push('\n');
    }
    s
}

fn expected(args: ExpectedArgs) -> CmdResult {
    let two = args.variant.is_none_or(|v| v == Variant::TwoPlayerThreeDice);
    let four = args.variant.is_none_or(|v| v == Variant::FourPlayerFiveDice);
    let four_rows = all_profiles_4p()
        .into_iter()
        .map(|p| expected_payoffs_4p(&p).map(|seats| (p, seats)))
        .collect::<Result<Vec<_>, _>>()?;
    let text = match args.format {
        ReportFormat::Json => {
            let mut doc = serde_json::Map::new();
            if two {
                doc.insert(
                    "two_player".into(),
                    json!({
                        "points": expected_payoff_table_2p(),
                        "wins": win_table_2p(),
                        "rederived": rederive_all_2p(),
                    }),
                );
            }
            if four {
                let rows: Vec<_> = four_rows
                    .iter()
                    .map(|(p, seats)| {
                        let codes: Vec<&str> = p.iter().map(|s| s.code()).collect();
                        json!({ "profile": codes.join(","), "seats": seats })
                    })
                    .collect();
                doc.insert("four_player".into(), rows.into());
            }
            serde_json::to_string_pretty(&doc).map_err(|e| Failure::Runtime(e.to_string()))? + "\n"
        }
        ReportFormat::Text => {
            let mut s = String::new();
            if two {
                s += &bimatrix_text("Two players, 16 turns: expected points (row, column)", &expected_payoff_table_2p());
                s.push('\n');
                s += &bimatrix_text("Two players, 16 turns: win probability (row, column)", &win_table_2p());
                s.push('\n');
                s += "Re-derived cells (! = differs from the printed value by more than 0.5)\n";
                for c in rederive_all_2p() {
                    let mark = if c.flagged { "!" } else { " " };
                    writeln!(
                        s,
                        "{mark} {:<2} vs {:<2}  computed ({:.2}, {:.2})  printed ({}, {})",
                        c.row.code(),
                        c.col.code(),
                        c.value.0,
                        c.value.1,
                        c.printed.0,
                        c.printed.1
                    )
                    .unwrap();
                }
            }
            if four {
                if two {
                    s.push('\n');
                }
                s += "Four players, 16 turns: expected points per seat (* = interacting, ! = differs from printed)\n";
                for (p, seats) in &four_rows {
                    let codes: Vec<&str> = p.iter().map(|s| s.code()).collect();
                    write!(s, "{:<12}", codes.join(",")).unwrap();
                    for seat in seats {
                        let star = if seat.interacting { "*" } else { " " };
                        let bang = if seat.flagged { "!" } else { " " };
                        write!(s, "  {:>7.2}{star}{bang}", seat.value).unwrap();
                    }
                    if let Some(printed) = seats.iter().find_map(|x| x.printed.filter(|_| x.flagged)) {
                        write!(s, "  printed {printed}").unwrap();
                    }
                    s.truncate(s.trim_end().len());
                    s.push('\n');
                }
            }
            s
        }
    };
    emit(&text, None)
}

fn fixtures(args: FixturesArgs) -> CmdResult {
    match args.show {
        Some(id) => emit(id.csv(), None),
        None => {
            let mut s = format!("{:<6}  {:<7}  {:>5}  {:>6}  {:>8}\n", "id", "variant", "turns", "games", "profiles");
            for id in FixtureId::ALL {
                let t = load_fixture(id);
                let games = t.games.map_or_else(|| "-".into(), |g| g.to_string());
                writeln!(s, "{:<6}  {:<7}  {:>5}  {:>6}  {:>8}", id.id(), id.variant().id(), id.turns(), games, t.len())
                    .unwrap();
            }
            emit(&s, None)
        }
    }
}

fn replay(args: ReplayArgs) -> CmdResult {
    let cfg = config(&args.game)?;
    let seed = derive_game_seed(args.seed, args.game_index);
    let (result, transcript) = play_game_with_transcript(cfg, args.profile.kinds(), seed)?;
    let text = match args.format {
        ReportFormat::Json => {
            let entries: Vec<_> = transcript
                .iter()
                .map(|e| {
                    json!({
                        "turn": e.turn,
                        "mover": e.mover,
                        "source": e.source.to_string(),
                        "die": e.die,
                        "token": e.token,
                        "from": e.from.map(|p| p.value()),
                        "to": e.to.map(|p| p.value()),
                        "flags": e.flags(),
                    })
                })
                .collect();
            let doc = json!({
                "config": cfg,
                "profile": args.profile.to_string(),
                "master_seed": args.seed,
                "game_index": args.game_index,
                "game_seed": seed,
                "result": result,
                "transcript": entries,
            });
            serde_json::to_string_pretty(&doc).map_err(|e| Failure::Runtime(e.to_string()))? + "\n"
        }
        ReportFormat::Text => {
            let mut s = format!(
                "# {} {} turns, profile {}, game {} of seed {} (game seed {seed})\n",
                cfg.variant, cfg.total_turns, args.profile, args.game_index, args.seed
            );
            s += "turn\tmover\tsource\tdie\ttoken\tfrom\tto\tflags\n";
            s += &ludo_lab::transcript::render(&transcript);
            let points: Vec<String> = result.points.iter().map(u32::to_string).collect();
            let outcome = match result.outcome {
                Outcome::Winner(w) => format!("seat {} wins", w + 1),
                Outcome::Draw => "draw".into(),
            };
            writeln!(s, "# points {}; {outcome}", points.join(" ")).unwrap();
            s
        }
    };
    emit(&text, None)
}
