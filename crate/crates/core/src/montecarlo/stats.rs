use serde::{Deserialize, Serialize};

use crate::engine::{GameResult, Outcome};

/// Exact integer tallies over a batch of games. Merging is associative and
/// commutative, so any split of the work produces the same totals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchStats {
    pub games: u64,
    pub wins: Vec<u64>,
    pub draws: u64,
    pub point_sum: Vec<u64>,
    pub point_sq_sum: Vec<u64>,
}

impl MatchStats {
    pub fn empty(seats: usize) -> Self {
        MatchStats {
            games: 0,
            wins: vec![0; seats],
            draws: 0,
            point_sum: vec![0; seats],
            point_sq_sum: vec![0; seats],
        }
    }

    pub fn seats(&self) -> usize {
        self.wins.len()
    }

    pub fn record(&mut self, result: &GameResult) {
        self.games += 1;
        match result.outcome {
            Outcome::Winner(s) => self.wins[s] += 1,
            Outcome::Draw => self.draws += 1,
        }
        for (seat, &p) in result.points.iter().enumerate() {
            let p = p as u64;
            self.point_sum[seat] += p;
            self.point_sq_sum[seat] += p * p;
        }
    }

    pub fn merge(mut self, other: &MatchStats) -> MatchStats {
        self.games += other.games;
        self.draws += other.draws;
        for s in 0..self.seats() {
            self.wins[s] += other.wins[s];
            self.point_sum[s] += other.point_sum[s];
            self.point_sq_sum[s] += other.point_sq_sum[s];
        }
        self
    }

    pub fn win_pct(&self, seat: usize) -> f64 {
        pct(self.wins[seat], self.games)
    }

    pub fn draw_pct(&self) -> f64 {
        pct(self.draws, self.games)
    }

    pub fn mean(&self, seat: usize) -> f64 {
        if self.games == 0 {
            return 0.0;
        }
        self.point_sum[seat] as f64 / self.games as f64
    }

    /// Population standard deviation, `sqrt((n·Σx² − (Σx)²) / n²)`, with the
    /// numerator formed exactly in integers.
    pub fn sd(&self, seat: usize) -> f64 {
        if self.games == 0 {
            return 0.0;
        }
        let n = self.games as u128;
        let s = self.point_sum[seat] as u128;
        let q = self.point_sq_sum[seat] as u128;
        let num = n * q - s * s;
        (num as f64).sqrt() / self.games as f64
    }
}

fn pct(count: u64, games: u64) -> f64 {
    if games == 0 {
        0.0
    } else {
        count as f64 * 100.0 / games as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn result(points: Vec<u32>) -> GameResult {
        let best = *points.iter().max().unwrap();
        let leaders: Vec<_> = (0..points.len()).filter(|&i| points[i] == best).collect();
        GameResult {
            outcome: if leaders.len() == 1 {
                Outcome::Winner(leaders[0])
            } else {
                Outcome::Draw
            },
            points,
        }
    }

    #[test]
    fn moments_match_direct_formulas() {
        let games = [vec![10, 4], vec![2, 8], vec![6, 6], vec![0, 12]];
        let mut st = MatchStats::empty(2);
        for g in &games {
            st.record(&result(g.clone()));
        }
        assert_eq!(st.wins, vec![1, 2]);
        assert_eq!(st.draws, 1);
        assert_eq!(st.wins.iter().sum::<u64>() + st.draws, st.games);
        // seat 0: 10, 2, 6, 0 -> mean 4.5, population variance 14.75
        assert!((st.mean(0) - 4.5).abs() < 1e-12);
        assert!((st.sd(0) - 14.75f64.sqrt()).abs() < 1e-12);
        assert!((st.win_pct(1) - 50.0).abs() < 1e-12);
        assert!((st.draw_pct() - 25.0).abs() < 1e-12);
    }

    #[test]
    fn merge_is_order_free() {
        let a = {
            let mut s = MatchStats::empty(2);
            s.record(&result(vec![3, 1]));
            s
        };
        let b = {
            let mut s = MatchStats::empty(2);
            s.record(&result(vec![1, 9]));
            s.record(&result(vec![2, 2]));
            s
        };
        assert_eq!(a.clone().merge(&b), b.clone().merge(&a));
    }
}
