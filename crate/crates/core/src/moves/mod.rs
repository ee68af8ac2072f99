//! Reidemeister moves and elementary cobordisms on Gauss diagrams.

mod configuration;
mod reidemeister;
mod shrink;

use alloc::vec::Vec;
use core::fmt;

use crate::diagram::{ChordDiagram, Label, Slot};
use crate::error::{Error, Result};

pub use configuration::{
    apply_elementary_cobordism, find_symmetric_configurations, insert_configuration, verify_symmetric_configuration,
    Inserted, Segment, SymmetricConfiguration,
};
pub use reidemeister::{apply_r1, apply_r2, apply_r3, find_r1_sites, find_r2_sites, find_r3_sites, R1Edit, R2Edit};
pub use shrink::shrink;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MoveKind {
    R1,
    R2,
    R3,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::R1 => "R1",
            MoveKind::R2 => "R2",
            MoveKind::R3 => "R3",
        })
    }
}

/// A place where a Reidemeister move applies.
///
/// `slots` lists adjacent slot pairs back to back: one pair for R1, two for
/// R2 and three for R3.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MoveSite {
    pub kind: MoveKind,
    pub chords: Vec<Label>,
    pub slots: Vec<Slot>,
}

impl MoveSite {
    pub fn pairs(&self) -> impl Iterator<Item = (Slot, Slot)> + '_ {
        self.slots.chunks_exact(2).map(|p| (p[0], p[1]))
    }
}

/// Insertion point between two consecutive slots: new slots go in front of
/// position `pos` of `circle` (`pos == len` appends).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gap {
    pub circle: usize,
    pub pos: usize,
}

impl Gap {
    pub const fn new(circle: usize, pos: usize) -> Self {
        Gap { circle, pos }
    }

    pub(crate) fn check(self, d: &ChordDiagram) -> Result<()> {
        if self.circle >= d.circle_count() || self.pos > d.circle(self.circle).len() {
            return Err(Error::InvalidGap {
                circle: self.circle,
                pos: self.pos,
            });
        }
        Ok(())
    }
}

/// Unordered adjacent slot pairs `(p, p + 1)` over all circles, cyclically.
pub(crate) fn adjacent_pairs(d: &ChordDiagram) -> Vec<(Slot, Slot)> {
    let mut out = Vec::new();
    for (c, word) in d.circles().enumerate() {
        let n = word.len();
        let count = match n {
            0 | 1 => 0,
            2 => 1,
            _ => n,
        };
        for p in 0..count {
            out.push((Slot::new(c, p), Slot::new(c, (p + 1) % n)));
        }
    }
    out
}
