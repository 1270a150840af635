use super::Observation;
use crate::board::{LandingOutcome, TOKENS_PER_SEAT};
use crate::engine::Action;

/// Priority order: promote, capture (richest victims first), step into the home
/// column, then the first active token with the highest die it can use.
pub fn choose_aggressive(obs: &Observation<'_>) -> Option<Action> {
    if let Some(a) = obs.promotion() {
        return Some(a);
    }
    if let Some(a) = best_capture(obs) {
        return Some(a);
    }
    if let Some((t, d)) = obs.moves().find(|&(t, d)| obs.target(d, t).in_home_column()) {
        return Some(Action::new(d.index, t));
    }
    (0..TOKENS_PER_SEAT)
        .filter(|&t| !obs.pos(t).is_home())
        .find_map(|t| obs.max_die_for(t).map(|d| Action::new(d.index, t)))
}

fn best_capture(obs: &Observation<'_>) -> Option<Action> {
    let mut best: Option<(u32, Action)> = None;
    for (t, d) in obs.moves() {
        if let LandingOutcome::Capture(victims) = obs.landing(d, t) {
            let points = obs.victim_points(&victims);
            if best.as_ref().is_none_or(|(p, _)| points > *p) {
                best = Some((points, Action::new(d.index, t)));
            }
        }
    }
    best.map(|(_, a)| a)
}

#[cfg(test)]
mod tests {
    use super::super::test_support::*;
    use super::*;

    fn run(raw: &[[u8; 4]], dice: &[u8]) -> Option<Action> {
        let b = board(raw);
        let p = pool(dice);
        choose_aggressive(&Observation {
            mover: 0,
            board: &b,
            dice: &p,
            turn_index: 0,
        })
    }

    #[test]
    fn promotion_beats_capture() {
        // token 0 at 30 + 4 = cell 34 = seat 1 path 8; token 1 at 52 + 4 = home
        assert_eq!(run(&[[30, 52, 0, 0], [8, 0, 0, 0]], &[4]), Some(Action::new(0, 1)));
    }

    #[test]
    fn captures_with_the_matching_die() {
        // third token (index 2) at 10, opponent 4 ahead at cell 14 = seat 1 path 40
        assert_eq!(
            run(&[[0, 0, 10, 0], [40, 0, 0, 0]], &[2, 4, 1]),
            Some(Action::new(1, 2))
        );
    }

    #[test]
    fn prefers_richest_victim() {
        // token 0 at 5: +1 -> cell 6 (seat 1 path 32), +3 -> cell 8 (seat 1 path 34)
        assert_eq!(
            run(&[[5, 0, 0, 0], [32, 34, 0, 0]], &[1, 3]),
            Some(Action::new(1, 0))
        );
    }

    #[test]
    fn home_column_before_plain_advance() {
        assert_eq!(run(&[[10, 47, 0, 0], [0; 4]], &[6, 5]), Some(Action::new(0, 1)));
    }

    #[test]
    fn otherwise_first_token_with_highest_roll() {
        assert_eq!(run(&[[0; 4], [0; 4]], &[2, 6]), Some(Action::new(1, 0)));
        // equal values: earlier die
        assert_eq!(run(&[[0; 4], [0; 4]], &[5, 5, 1]), Some(Action::new(0, 0)));
    }

    #[test]
    fn skips_home_tokens_and_blocked_tokens() {
        // token 0 home, token 1 at 54 cannot use either die
        assert_eq!(run(&[[56, 54, 3, 0], [0; 4]], &[6, 4]), Some(Action::new(0, 2)));
    }

    #[test]
    fn nothing_legal() {
        assert_eq!(run(&[[56, 56, 56, 55], [0; 4]], &[3]), None);
    }
}
