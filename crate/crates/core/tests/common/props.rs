//! Property bodies and input generators, shared by the proptest suite and
//! the acceptance run. Each check returns a description of the first
//! violation it finds.

use std::collections::BTreeSet;

use proptest::prelude::*;

use ludo_lab::board::{BoardView, LandingOutcome, PathPosition};
use ludo_lab::engine::{is_legal, legal_actions, pick_sequence, Game, PoolDie};
use ludo_lab::equilibrium::{epsilon_ne, WinTable};
use ludo_lab::strategies::{choose_aggressive, choose_naive, decide, rp_capture_tier, Observation, RpMemory, RP_PIVOT};
use ludo_lab::{GameConfig, Profile, StrategyKind, Variant};

pub type Check = Result<(), String>;

/// Token positions, untaken dice, mover and turn index.
pub type State = (Vec<[u8; 4]>, Vec<PoolDie>, usize, usize);

pub fn state() -> impl Strategy<Value = State> {
    prop_oneof![Just(2usize), Just(4usize)].prop_flat_map(|seats| {
        let max_dice = if seats == 2 { 3 } else { 5 };
        (
            prop::collection::vec(prop::array::uniform4(0u8..=56), seats),
            prop::collection::vec(1u8..=6, 1..=max_dice).prop_map(|v| {
                v.into_iter()
                    .enumerate()
                    .map(|(index, value)| PoolDie { index, value })
                    .collect()
            }),
            0..seats,
            0usize..32,
        )
    })
}

/// Seed, four-player flag, strategy per seat and game length.
pub type GameCase = (u64, bool, [usize; 4], u32);

pub fn game_case() -> impl Strategy<Value = GameCase> {
    (any::<u64>(), any::<bool>(), prop::array::uniform4(0usize..3), 1u32..=24)
}

/// Two- or four-player flag, raw win numbers, base tolerance and increment.
pub type TableCase = (bool, Vec<u16>, f64, f64);

pub fn table_case() -> impl Strategy<Value = TableCase> {
    (
        any::<bool>(),
        prop::collection::vec(0u16..=10_000, 81 * 4),
        0.0f64..5.0,
        0.0f64..5.0,
    )
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn target(board: &BoardView, mover: usize, token: usize, die: u8) -> PathPosition {
    board.tokens(mover)[token].advanced(die).expect("legal move")
}

pub fn every_decision_is_legal((positions, dice, mover, turn): &State) -> Check {
    let board = BoardView::from_positions(positions).unwrap();
    let legal = legal_actions(&board, *mover, dice);
    let obs = Observation { mover: *mover, board: &board, dice, turn_index: *turn };
    for kind in StrategyKind::ALL {
        match decide(kind, &obs, &mut RpMemory::default()) {
            Some(a) => ensure(legal.contains(&a), || format!("{kind} chose {a:?}, legal {legal:?}"))?,
            None => ensure(legal.is_empty(), || format!("{kind} passed with {legal:?} available"))?,
        }
    }
    Ok(())
}

pub fn naive_uses_lowest_usable_die((positions, dice, mover, turn): &State) -> Check {
    let board = BoardView::from_positions(positions).unwrap();
    let obs = Observation { mover: *mover, board: &board, dice, turn_index: *turn };
    let usable = |d: &PoolDie| (0..4).any(|t| is_legal(&board, *mover, t, d.value));
    let first_usable = dice.iter().find(|d| usable(d)).map(|d| d.index);
    let choice = choose_naive(&obs);
    ensure(choice.map(|a| a.die_index) == first_usable, || {
        format!("naive chose {choice:?}, first usable die {first_usable:?}")
    })
}

pub fn aggressive_promotes_first((positions, dice, mover, turn): &State) -> Check {
    let board = BoardView::from_positions(positions).unwrap();
    let obs = Observation { mover: *mover, board: &board, dice, turn_index: *turn };
    let promotes = |token: usize, die_index: usize| target(&board, *mover, token, dice[die_index].value).is_home();
    let can_promote = legal_actions(&board, *mover, dice).iter().any(|a| promotes(a.token, a.die_index));
    if !can_promote {
        return Ok(());
    }
    let a = choose_aggressive(&obs).ok_or("aggressive passed with a promotion available")?;
    ensure(promotes(a.token, a.die_index), || format!("aggressive chose {a:?} over a promotion"))
}

pub fn rp_capture_respects_pivot((positions, dice, mover, turn): &State) -> Check {
    let board = BoardView::from_positions(positions).unwrap();
    let obs = Observation { mover: *mover, board: &board, dice, turn_index: *turn };
    let Some(a) = rp_capture_tier(&obs) else {
        return Ok(());
    };
    let from = board.tokens(*mover)[a.token].value();
    let to = target(&board, *mover, a.token, dice[a.die_index].value);
    ensure(from >= RP_PIVOT || to.value() <= RP_PIVOT, || format!("capture from {from} to {}", to.value()))?;
    let landing = board.resolve_landing(board.seat(*mover), to);
    ensure(matches!(landing, LandingOutcome::Capture(_)), || format!("capture tier chose {landing:?}"))
}

pub fn scores_conserved(&(seed, four, kinds, turns): &GameCase) -> Check {
    let variant = if four { Variant::FourPlayerFiveDice } else { Variant::TwoPlayerThreeDice };
    let cfg = GameConfig::new(variant, turns).unwrap();
    let profile: Vec<_> = kinds[..cfg.seats()].iter().map(|&k| StrategyKind::ALL[k]).collect();
    let mut game = Game::seeded(cfg, &profile, seed).unwrap().enable_audit();
    let result = game.play_to_end();
    let audit = game.audit().unwrap();
    ensure(audit.failures.is_empty(), || format!("{:?}", audit.failures))?;
    ensure(audit.checks > 0, || "audit never ran".into())?;
    for seat in 0..cfg.seats() {
        let recount: u32 = game
            .board()
            .tokens(seat)
            .iter()
            .map(|p| p.value() as u32 + if p.is_home() { 56 } else { 0 })
            .sum();
        ensure(result.points[seat] == recount, || {
            format!("seat {seat}: result {} but tokens sum to {recount}", result.points[seat])
        })?;
    }
    let mut picks = vec![0u32; cfg.seats()];
    for turn in 0..turns as usize {
        for seat in pick_sequence(variant, turn) {
            picks[seat] += 1;
        }
    }
    ensure(game.pool_picks() == &picks[..], || format!("picks {:?}, expected {picks:?}", game.pool_picks()))
}

pub fn epsilon_monotone((four, raw, e1, bump): &TableCase) -> Check {
    let seats = if *four { 4 } else { 2 };
    let mut t = WinTable::new(seats);
    for (i, p) in Profile::all(seats).into_iter().enumerate() {
        let w = (0..seats).map(|s| raw[i * 4 + s] as f64 / 100.0 / seats as f64).collect();
        t.insert(p, w);
    }
    let small: BTreeSet<_> = epsilon_ne(&t, *e1).unwrap().profiles.into_iter().collect();
    let large: BTreeSet<_> = epsilon_ne(&t, e1 + bump).unwrap().profiles.into_iter().collect();
    ensure(small.is_subset(&large), || format!("{:?} lost at epsilon {}", small.difference(&large), e1 + bump))
}
