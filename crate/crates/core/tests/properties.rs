//! Property suites: score conservation, legality of every strategy decision
//! on random states, strategy tier rules, and equilibrium monotonicity.

mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use ludo_lab::analytics::win_table_2p;
use ludo_lab::equilibrium::{epsilon_ne, pure_ne_bimatrix};
use ludo_lab::{load_fixture, FixtureId, Profile};

use common::brute_force_pure_ne;
use common::props::{self, game_case, state, table_case};

fn check(r: props::Check) -> Result<(), TestCaseError> {
    r.map_err(TestCaseError::fail)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn every_decision_is_legal(s in state()) {
        check(props::every_decision_is_legal(&s))?;
    }

    #[test]
    fn naive_uses_lowest_usable_die(s in state()) {
        check(props::naive_uses_lowest_usable_die(&s))?;
    }

    #[test]
    fn aggressive_promotes_before_anything(s in state()) {
        check(props::aggressive_promotes_first(&s))?;
    }

    #[test]
    fn rp_capture_tier_never_jumps_the_pivot(s in state()) {
        check(props::rp_capture_respects_pivot(&s))?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn scores_conserved_through_whole_games(g in game_case()) {
        check(props::scores_conserved(&g))?;
    }

    #[test]
    fn larger_epsilon_never_loses_equilibria(t in table_case()) {
        check(props::epsilon_monotone(&t))?;
    }

    #[test]
    fn bimatrix_matches_brute_force(cells in prop::array::uniform9((0u8..5, 0u8..5))) {
        // small integer payoffs make ties common
        let mut t = [[(0.0, 0.0); 3]; 3];
        for (i, (a, b)) in cells.into_iter().enumerate() {
            t[i / 3][i % 3] = (a as f64, b as f64);
        }
        prop_assert_eq!(pure_ne_bimatrix(&t), brute_force_pure_ne(&t));
    }
}

#[test]
fn analytic_win_table_has_single_safe_equilibrium() {
    let ne = pure_ne_bimatrix(&win_table_2p());
    assert_eq!(ne, vec![(1, 1)]);
    assert_eq!(ne, brute_force_pure_ne(&win_table_2p()));
}

#[test]
fn fixture_equilibria_grow_with_epsilon() {
    for id in FixtureId::ALL {
        let t = load_fixture(id);
        let mut prev: BTreeSet<Profile> = BTreeSet::new();
        for k in 0..=8 {
            let cur: BTreeSet<_> = epsilon_ne(&t, k as f64 * 0.5).unwrap().profiles.into_iter().collect();
            assert!(prev.is_subset(&cur), "{id} at step {k}");
            prev = cur;
        }
    }
}
