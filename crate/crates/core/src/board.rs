//! Board geometry: a 52-cell shared loop, a private five-cell home column per
//! seat, and the capture rules that hang off it.
//!
//! Tokens are tracked by [`PathPosition`], the number of steps travelled from
//! their own start cell. Positions `0..=50` lie on the shared loop, `51..=55`
//! are the seat's home column and `56` is home.

use std::fmt;

/// Cells on the shared loop.
pub const LOOP_CELLS: u8 = 52;
/// Last path position that is still on the shared loop.
pub const LAST_LOOP_POS: u8 = 50;
/// First home-column position.
pub const HOME_COLUMN_START: u8 = 51;
/// Home. A token here is promoted and never moves again.
pub const HOME: u8 = 56;
/// Tokens per seat.
pub const TOKENS_PER_SEAT: usize = 4;

/// Steps travelled by a token from its own start cell, `0..=56`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PathPosition(u8);

impl PathPosition {
    pub const START: PathPosition = PathPosition(0);
    pub const HOME: PathPosition = PathPosition(HOME);

    /// Returns `None` when `value > 56`.
    pub fn new(value: u8) -> Option<Self> {
        (value <= HOME).then_some(PathPosition(value))
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn is_home(self) -> bool {
        self.0 == HOME
    }

    pub fn on_loop(self) -> bool {
        self.0 <= LAST_LOOP_POS
    }

    pub fn in_home_column(self) -> bool {
        (HOME_COLUMN_START..HOME).contains(&self.0)
    }

    /// Position after advancing `steps`, or `None` if that would overshoot home.
    pub fn advanced(self, steps: u8) -> Option<Self> {
        self.0.checked_add(steps).and_then(PathPosition::new)
    }
}

impl fmt::Display for PathPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A seat at the table: its turn-order index and where its path joins the loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Seat {
    pub index: usize,
    pub loop_offset: u8,
}

/// Start offsets for a table of `seats` players, in turn order.
///
/// Two players start diagonally opposite each other; four players are spaced a
/// quarter loop apart.
pub fn seat_offsets(seats: usize) -> &'static [u8] {
    match seats {
        2 => &[0, 26],
        4 => &[0, 13, 26, 39],
        _ => panic!("unsupported seat count {seats}"),
    }
}

/// Loop cell under a token, or `None` once it has left the shared loop.
pub fn to_loop_cell(seat: Seat, pos: PathPosition) -> Option<u8> {
    pos.on_loop()
        .then(|| ((seat.loop_offset as u16 + pos.0 as u16) % LOOP_CELLS as u16) as u8)
}

/// A token belonging to some seat.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TokenRef {
    pub seat: usize,
    pub token: usize,
}

/// What happens when a token lands on `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LandingOutcome {
    Plain,
    Capture(Vec<TokenRef>),
    HomeColumn,
    Promoted,
}

/// Immutable snapshot of every token on the table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoardView {
    positions: Vec<[PathPosition; TOKENS_PER_SEAT]>,
}

impl BoardView {
    /// All tokens on their start cells.
    pub fn new(seats: usize) -> Self {
        seat_offsets(seats);
        BoardView {
            positions: vec![[PathPosition::START; TOKENS_PER_SEAT]; seats],
        }
    }

    /// Build from raw positions; `None` if any value exceeds 56 or the seat count
    /// is not 2 or 4.
    pub fn from_positions(raw: &[[u8; TOKENS_PER_SEAT]]) -> Option<Self> {
        if raw.len() != 2 && raw.len() != 4 {
            return None;
        }
        let mut positions = Vec::with_capacity(raw.len());
        for seat in raw {
            let mut row = [PathPosition::START; TOKENS_PER_SEAT];
            for (slot, &v) in row.iter_mut().zip(seat) {
                *slot = PathPosition::new(v)?;
            }
            positions.push(row);
        }
        Some(BoardView { positions })
    }

    pub fn seat_count(&self) -> usize {
        self.positions.len()
    }

    pub fn seat(&self, index: usize) -> Seat {
        Seat {
            index,
            loop_offset: seat_offsets(self.seat_count())[index],
        }
    }

    pub fn seats(&self) -> impl Iterator<Item = Seat> + '_ {
        (0..self.seat_count()).map(|i| self.seat(i))
    }

    pub fn tokens(&self, seat: usize) -> &[PathPosition; TOKENS_PER_SEAT] {
        &self.positions[seat]
    }

    pub fn position(&self, token: TokenRef) -> PathPosition {
        self.positions[token.seat][token.token]
    }

    pub(crate) fn set_position(&mut self, token: TokenRef, pos: PathPosition) {
        self.positions[token.seat][token.token] = pos;
    }

    /// Loop cell of a token, if it is on the shared loop.
    pub fn cell_of(&self, token: TokenRef) -> Option<u8> {
        to_loop_cell(self.seat(token.seat), self.position(token))
    }

    /// Whether `cell` is a start cell of any seat at this table.
    pub fn is_start_cell(&self, cell: u8) -> bool {
        seat_offsets(self.seat_count()).contains(&cell)
    }

    /// Tokens of `seat` standing on loop cell `cell`.
    pub fn tokens_on_cell(&self, seat: usize, cell: u8) -> impl Iterator<Item = usize> + '_ {
        let s = self.seat(seat);
        (0..TOKENS_PER_SEAT).filter(move |&t| to_loop_cell(s, self.positions[seat][t]) == Some(cell))
    }

    /// A defender's token on `cell` is safe if the cell is a start cell or the
    /// defender holds at least two tokens there.
    pub fn is_capture_protected(&self, cell: u8, defender: Seat) -> bool {
        self.is_start_cell(cell) || self.tokens_on_cell(defender.index, cell).count() >= 2
    }

    /// Outcome of a `mover` token landing on path position `target`.
    pub fn resolve_landing(&self, mover: Seat, target: PathPosition) -> LandingOutcome {
        if target.is_home() {
            return LandingOutcome::Promoted;
        }
        if target.in_home_column() {
            return LandingOutcome::HomeColumn;
        }
        let cell = to_loop_cell(mover, target).expect("loop position");
        let victims = self.capturable_on_cell(mover.index, cell);
        if victims.is_empty() {
            LandingOutcome::Plain
        } else {
            LandingOutcome::Capture(victims)
        }
    }

    fn capturable_on_cell(&self, mover: usize, cell: u8) -> Vec<TokenRef> {
        if self.is_start_cell(cell) {
            return Vec::new();
        }
        let mut victims = Vec::new();
        for defender in self.seats().filter(|s| s.index != mover) {
            let here: Vec<usize> = self.tokens_on_cell(defender.index, cell).collect();
            // a lone token is capturable; two or more form a block
            if here.len() == 1 {
                victims.push(TokenRef {
                    seat: defender.index,
                    token: here[0],
                });
            }
        }
        victims
    }

    /// Points currently held by `seat`: one per step travelled plus 56 per
    /// promoted token.
    pub fn score(&self, seat: usize) -> u32 {
        self.positions[seat]
            .iter()
            .map(|p| p.0 as u32 + if p.is_home() { HOME as u32 } else { 0 })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seat(offset: u8) -> Seat {
        Seat {
            index: 0,
            loop_offset: offset,
        }
    }

    fn pos(v: u8) -> PathPosition {
        PathPosition::new(v).unwrap()
    }

    #[test]
    fn loop_cell_examples() {
        assert_eq!(to_loop_cell(seat(0), pos(0)), Some(0));
        assert_eq!(to_loop_cell(seat(26), pos(0)), Some(26));
        assert_eq!(to_loop_cell(seat(0), pos(51)), None);
        assert_eq!(to_loop_cell(seat(39), pos(13)), Some(0));
        assert_eq!(to_loop_cell(seat(26), pos(50)), Some(24));
    }

    #[test]
    fn path_position_bounds() {
        assert!(PathPosition::new(57).is_none());
        assert_eq!(pos(55).advanced(1), Some(PathPosition::HOME));
        assert_eq!(pos(55).advanced(2), None);
    }

    #[test]
    fn loop_cell_injective_per_seat() {
        for &off in seat_offsets(4) {
            let mut seen = [false; LOOP_CELLS as usize];
            for p in 0..=LAST_LOOP_POS {
                let c = to_loop_cell(seat(off), pos(p)).unwrap() as usize;
                assert!(!seen[c]);
                seen[c] = true;
            }
        }
    }

    #[test]
    fn shared_cells_brute_force() {
        for &a in seat_offsets(4) {
            for &b in seat_offsets(4) {
                for pa in 0..=LAST_LOOP_POS {
                    for pb in 0..=LAST_LOOP_POS {
                        let same = to_loop_cell(seat(a), pos(pa)) == to_loop_cell(seat(b), pos(pb));
                        let modular = (a as u32 + pa as u32) % 52 == (b as u32 + pb as u32) % 52;
                        assert_eq!(same, modular);
                    }
                }
            }
        }
    }

    #[test]
    fn start_cell_is_protected() {
        // seat 1's token sits on seat 0's start cell (26 steps in for seat 1 = cell 0)
        let b = BoardView::from_positions(&[[0, 0, 0, 0], [26, 0, 0, 0]]).unwrap();
        assert!(b.is_capture_protected(0, b.seat(1)));
        assert_eq!(b.resolve_landing(b.seat(0), pos(0)), LandingOutcome::Plain);
    }

    #[test]
    fn stack_is_protected_single_is_not() {
        // seat 1 tokens at path 14 -> cell 40
        let single = BoardView::from_positions(&[[0; 4], [14, 0, 0, 0]]).unwrap();
        assert!(!single.is_capture_protected(40, single.seat(1)));
        let stacked = BoardView::from_positions(&[[0; 4], [14, 14, 0, 0]]).unwrap();
        assert!(stacked.is_capture_protected(40, stacked.seat(1)));
    }

    #[test]
    fn landing_outcomes() {
        let b = BoardView::from_positions(&[[30, 0, 0, 0], [14, 0, 0, 0]]).unwrap();
        assert_eq!(b.resolve_landing(b.seat(0), pos(56)), LandingOutcome::Promoted);
        assert_eq!(b.resolve_landing(b.seat(0), pos(53)), LandingOutcome::HomeColumn);
        // seat 0 path 40 = cell 40 = seat 1 path 14
        assert_eq!(
            b.resolve_landing(b.seat(0), pos(40)),
            LandingOutcome::Capture(vec![TokenRef { seat: 1, token: 0 }])
        );
        assert_eq!(b.resolve_landing(b.seat(0), pos(39)), LandingOutcome::Plain);
        // the stacked version blocks the capture
        let s = BoardView::from_positions(&[[30, 0, 0, 0], [14, 14, 0, 0]]).unwrap();
        assert_eq!(s.resolve_landing(s.seat(0), pos(40)), LandingOutcome::Plain);
    }

    #[test]
    fn multi_victim_capture_in_four_player() {
        // cell 20: seat 1 path 7, seat 2 path 46, seat 3 stacked at path 33
        let b = BoardView::from_positions(&[[0; 4], [7, 0, 0, 0], [46, 0, 0, 0], [33, 33, 0, 0]]).unwrap();
        match b.resolve_landing(b.seat(0), pos(20)) {
            LandingOutcome::Capture(v) => assert_eq!(
                v,
                vec![TokenRef { seat: 1, token: 0 }, TokenRef { seat: 2, token: 0 }]
            ),
            other => panic!("expected capture, got {other:?}"),
        }
    }

    #[test]
    fn removing_stack_member_exposes_the_other() {
        let stacked = BoardView::from_positions(&[[0; 4], [14, 14, 0, 0]]).unwrap();
        assert!(stacked.is_capture_protected(40, stacked.seat(1)));
        for drop in 0..2 {
            let mut raw = [[0u8; 4], [14, 14, 0, 0]];
            raw[1][drop] = 0;
            let b = BoardView::from_positions(&raw).unwrap();
            assert!(!b.is_capture_protected(40, b.seat(1)));
        }
    }

    #[test]
    fn score_counts_home_bonus() {
        let b = BoardView::from_positions(&[[56, 10, 0, 0], [0; 4]]).unwrap();
        assert_eq!(b.score(0), 122);
        assert_eq!(b.score(1), 0);
    }
}
