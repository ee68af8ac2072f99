use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::{ChordDiagram, Label};
use crate::error::{Error, Result};
use crate::oracle::Gf2Matrix;

/// Interlacement matrix of the self-chords of one circle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interlacement {
    /// Chord indices labelling rows and columns, in first-occurrence order.
    pub chords: Vec<usize>,
    pub matrix: Gf2Matrix,
}

impl Interlacement {
    pub fn labels<'a>(&self, d: &'a ChordDiagram) -> Vec<&'a Label> {
        self.chords.iter().map(|&c| d.label(c)).collect()
    }
}

/// Whether the endpoints of two self-chords of the same circle alternate.
pub(crate) fn linked(d: &ChordDiagram, a: usize, b: usize) -> bool {
    let [a0, a1] = d.ends(a);
    let [b0, b1] = d.ends(b);
    if a == b || a0.circle != a1.circle || b0.circle != b1.circle || a0.circle != b0.circle {
        return false;
    }
    let (lo, hi) = (a0.pos.min(a1.pos), a0.pos.max(a1.pos));
    let inside = |p: usize| lo < p && p < hi;
    inside(b0.pos) != inside(b1.pos)
}

fn self_chords(d: &ChordDiagram, circle: usize) -> Vec<usize> {
    (0..d.chord_count())
        .filter(|&c| d.circle_of(c) == Some(circle))
        .collect()
}

pub fn self_interlacement(d: &ChordDiagram, circle: usize) -> Result<Interlacement> {
    if circle >= d.circle_count() {
        return Err(Error::CircleOutOfRange {
            index: circle,
            count: d.circle_count(),
        });
    }
    let chords = self_chords(d, circle);
    let mut matrix = Gf2Matrix::zero(chords.len());
    for (i, &a) in chords.iter().enumerate() {
        for (j, &b) in chords.iter().enumerate().skip(i + 1) {
            if linked(d, a, b) {
                matrix.set(i, j, true);
                matrix.set(j, i, true);
            }
        }
    }
    Ok(Interlacement { chords, matrix })
}

/// Number of self-chords of the same circle linked with `chord`.
pub(crate) fn link_count(d: &ChordDiagram, chord: usize) -> usize {
    (0..d.chord_count()).filter(|&b| linked(d, chord, b)).count()
}

/// A self-chord is even when it is linked with an even number of
/// self-chords of its own circle. Mixed chords have no parity.
pub fn is_even_chord(d: &ChordDiagram, label: &str) -> Result<bool> {
    let chord = d.require_chord(label)?;
    if !d.is_self_chord(chord) {
        return Err(Error::MixedChord(label.to_string()));
    }
    Ok(link_count(d, chord).is_multiple_of(2))
}

/// Chord indices of all even self-chords, sorted by label.
pub(crate) fn even_self_chord_indices(d: &ChordDiagram) -> Vec<usize> {
    let mut out: Vec<usize> = (0..d.chord_count())
        .filter(|&c| d.is_self_chord(c) && link_count(d, c).is_multiple_of(2))
        .collect();
    out.sort_by(|&a, &b| d.label(a).cmp(d.label(b)));
    out
}

pub fn even_self_chords(d: &ChordDiagram) -> Vec<Label> {
    even_self_chord_indices(d)
        .into_iter()
        .map(|c| d.label(c).clone())
        .collect()
}

/// Symmetric matrix over circles: off-diagonal entries count mixed chords
/// between two circles, the diagonal counts self-chords.
pub fn crossing_weights(d: &ChordDiagram) -> Vec<Vec<u32>> {
    let k = d.circle_count();
    let mut w = vec![vec![0u32; k]; k];
    for c in 0..d.chord_count() {
        let [a, b] = d.ends(c);
        if a.circle == b.circle {
            w[a.circle][a.circle] += 1;
        } else {
            w[a.circle][b.circle] += 1;
            w[b.circle][a.circle] += 1;
        }
    }
    w
}
