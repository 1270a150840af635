//! Tab-separated game transcripts, one line per die used (or wasted):
//!
//! ```text
//! turn  mover  source  die  token  from  to  flags
//! ```
//!
//! `source` is `pool:i` for the i-th pool die or `extra:k` for the k-th link
//! of an extra-move chain. Flags: `C` capture, `P` promote, `X` extra move
//! granted, `V` void third six. Dice that could not be used print `-` for
//! token and positions.

use std::fmt;

use crate::board::PathPosition;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RollSource {
    Pool(usize),
    Extra(usize),
}

impl fmt::Display for RollSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RollSource::Pool(i) => write!(f, "pool:{i}"),
            RollSource::Extra(k) => write!(f, "extra:{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranscriptEntry {
    pub turn: usize,
    pub mover: usize,
    pub source: RollSource,
    pub die: u8,
    pub token: Option<usize>,
    pub from: Option<PathPosition>,
    pub to: Option<PathPosition>,
    pub capture: bool,
    pub promote: bool,
    pub extra: bool,
    pub void: bool,
}

impl TranscriptEntry {
    pub(crate) fn new(turn: usize, mover: usize, source: RollSource, die: u8) -> Self {
        TranscriptEntry {
            turn,
            mover,
            source,
            die,
            token: None,
            from: None,
            to: None,
            capture: false,
            promote: false,
            extra: false,
            void: false,
        }
    }

    pub fn flags(&self) -> String {
        [
            (self.capture, 'C'),
            (self.promote, 'P'),
            (self.extra, 'X'),
            (self.void, 'V'),
        ]
        .iter()
        .filter(|(on, _)| *on)
        .map(|(_, c)| *c)
        .collect()
    }
}

fn dash<T: fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

impl fmt::Display for TranscriptEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.turn,
            self.mover,
            self.source,
            self.die,
            dash(self.token),
            dash(self.from),
            dash(self.to),
            self.flags()
        )
    }
}

/// Render a whole transcript, LF-terminated.
pub fn render(entries: &[TranscriptEntry]) -> String {
    entries.iter().map(|e| format!("{e}\n")).collect()
}
