//! One-turn two-player game over all 216 pools, engine against closed form.

mod common;

use common::{all_pairs, minigame_engine, minigame_oracle};

#[test]
fn one_turn_histograms_match_closed_form() {
    for profile in all_pairs() {
        let engine = minigame_engine(profile);
        let oracle = minigame_oracle(profile);
        assert_eq!(engine.values().sum::<u32>(), 216);
        assert_eq!(engine, oracle, "profile {profile:?}");
    }
}

#[test]
fn oracle_sanity() {
    use ludo_lab::StrategyKind::*;
    // pool 6,6,6 with two max-pickers: seat 0 gets 6+1 twice, seat 1 once
    let h = minigame_oracle([Aggressive, Aggressive]);
    assert_eq!(h.get(&(14, 7)), Some(&1));
    // the naive opener always plays the first die it sees
    let h = minigame_oracle([Naive, Naive]);
    assert_eq!(h.values().sum::<u32>(), 216);
    assert_eq!(h.keys().map(|k| k.0).max(), Some(14));
    assert_eq!(h.keys().map(|k| k.0).min(), Some(2));
}
