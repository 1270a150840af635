use super::Observation;
use crate::board::TOKENS_PER_SEAT;
use crate::engine::Action;

/// First untaken die, first token that can legally use it. Captures suffered
/// never change the token order.
pub fn choose_naive(obs: &Observation<'_>) -> Option<Action> {
    obs.dice.iter().find_map(|&die| {
        (0..TOKENS_PER_SEAT)
            .find(|&t| obs.legal(die, t))
            .map(|t| Action::new(die.index, t))
    })
}
