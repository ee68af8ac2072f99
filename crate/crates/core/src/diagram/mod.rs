//! Multi-circle Gauss diagrams.
//!
//! A diagram is a list of circles, each a cyclic sequence of endpoint slots,
//! together with a perfect matching of the slots into chords. Chords are
//! addressed internally by a dense index (order of first occurrence when the
//! circles are read left to right) and externally by their [`Label`].

mod canonical;
mod parity;
mod parse;

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

pub use canonical::{canonical_key, CanonicalKey};
pub(crate) use parity::even_self_chord_indices;
pub use parity::{crossing_weights, even_self_chords, is_even_chord, self_interlacement, Interlacement};
pub use parse::parse_gauss_words;

/// Opaque chord identifier, unique within a diagram.
///
/// Labels order numerically when both are decimal numbers and
/// lexicographically otherwise (numbers first).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Label(Arc<str>);

impl Label {
    pub fn new(s: &str) -> Self {
        Label(Arc::from(s))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    fn numeric(&self) -> Option<u64> {
        if self.0.bytes().all(|b| b.is_ascii_digit()) {
            self.0.parse().ok()
        } else {
            None
        }
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label::new(s)
    }
}

impl From<u32> for Label {
    fn from(n: u32) -> Self {
        Label::new(&n.to_string())
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.numeric(), other.numeric()) {
            (Some(a), Some(b)) => a.cmp(&b).then_with(|| self.0.cmp(&other.0)),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => self.0.cmp(&other.0),
        }
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

/// Position of an endpoint: circle index and offset along that circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slot {
    pub circle: usize,
    pub pos: usize,
}

impl Slot {
    pub const fn new(circle: usize, pos: usize) -> Self {
        Slot { circle, pos }
    }
}

/// Gauss diagram on one or more circles.
#[derive(Clone, PartialEq, Eq)]
pub struct ChordDiagram {
    circles: Vec<Vec<usize>>,
    labels: Vec<Label>,
    ends: Vec<[Slot; 2]>,
}

impl ChordDiagram {
    /// Builds a diagram from labelled circle words. Every label must occur
    /// exactly twice across all circles.
    pub fn new(words: Vec<Vec<Label>>) -> Result<Self> {
        if words.is_empty() {
            return Err(Error::NoCircles);
        }
        let mut labels: Vec<Label> = Vec::new();
        let mut counts: Vec<usize> = Vec::new();
        let mut circles = Vec::with_capacity(words.len());
        for word in &words {
            let mut circle = Vec::with_capacity(word.len());
            for label in word {
                let idx = match labels.iter().position(|l| l == label) {
                    Some(i) => i,
                    None => {
                        labels.push(label.clone());
                        counts.push(0);
                        labels.len() - 1
                    }
                };
                counts[idx] += 1;
                circle.push(idx);
            }
            circles.push(circle);
        }
        if let Some(i) = counts.iter().position(|&c| c != 2) {
            return Err(Error::LabelCount {
                label: labels[i].to_string(),
                count: counts[i],
            });
        }
        Ok(Self::from_indexed(circles, labels))
    }

    /// The diagram with `k` empty circles.
    pub fn empty(k: usize) -> Self {
        assert!(k > 0, "a diagram needs at least one circle");
        ChordDiagram {
            circles: vec![Vec::new(); k],
            labels: Vec::new(),
            ends: Vec::new(),
        }
    }

    /// One-circle diagram from a slot matching: `partner[s]` is the slot
    /// paired with `s`. Chords are labelled `1, 2, …` by first occurrence.
    pub fn from_matching(partner: &[usize]) -> Result<Self> {
        let n = partner.len();
        for (s, &t) in partner.iter().enumerate() {
            if t >= n || t == s || partner[t] != s {
                return Err(Error::InvalidSite("slot matching is not a perfect matching"));
            }
        }
        let mut chord_of = vec![usize::MAX; n];
        let mut next = 0;
        for s in 0..n {
            if chord_of[s] == usize::MAX {
                chord_of[s] = next;
                chord_of[partner[s]] = next;
                next += 1;
            }
        }
        let labels = (1..=next as u32).map(Label::from).collect();
        Ok(Self::from_indexed(vec![chord_of], labels))
    }

    /// Internal constructor; renumbers chords by first occurrence. The caller
    /// guarantees each chord index in `0..labels.len()` occurs exactly twice.
    pub(crate) fn from_indexed(mut circles: Vec<Vec<usize>>, labels: Vec<Label>) -> Self {
        debug_assert!(!circles.is_empty());
        let mut remap = vec![usize::MAX; labels.len()];
        let mut new_labels = Vec::with_capacity(labels.len());
        let mut ends = Vec::with_capacity(labels.len());
        for (c, circle) in circles.iter_mut().enumerate() {
            for (p, chord) in circle.iter_mut().enumerate() {
                let slot = Slot::new(c, p);
                if remap[*chord] == usize::MAX {
                    remap[*chord] = new_labels.len();
                    new_labels.push(labels[*chord].clone());
                    ends.push([slot, slot]);
                } else {
                    ends[remap[*chord]][1] = slot;
                }
                *chord = remap[*chord];
            }
        }
        debug_assert_eq!(new_labels.len(), labels.len());
        ChordDiagram {
            circles,
            labels: new_labels,
            ends,
        }
    }

    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }

    pub fn chord_count(&self) -> usize {
        self.labels.len()
    }

    pub fn slot_count(&self) -> usize {
        self.circles.iter().map(Vec::len).sum()
    }

    /// Chord indices along circle `c`.
    pub fn circle(&self, c: usize) -> &[usize] {
        &self.circles[c]
    }

    pub fn circles(&self) -> impl Iterator<Item = &[usize]> {
        self.circles.iter().map(Vec::as_slice)
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, chord: usize) -> &Label {
        &self.labels[chord]
    }

    pub fn chord_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.as_str() == label)
    }

    pub(crate) fn require_chord(&self, label: &str) -> Result<usize> {
        self.chord_by_label(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn ends(&self, chord: usize) -> [Slot; 2] {
        self.ends[chord]
    }

    pub fn chord_at(&self, slot: Slot) -> usize {
        self.circles[slot.circle][slot.pos]
    }

    /// The other endpoint of the chord sitting at `slot`.
    pub fn partner(&self, slot: Slot) -> Slot {
        let [a, b] = self.ends[self.chord_at(slot)];
        if a == slot {
            b
        } else {
            a
        }
    }

    pub fn is_self_chord(&self, chord: usize) -> bool {
        let [a, b] = self.ends[chord];
        a.circle == b.circle
    }

    /// Circle holding both ends of `chord`, or `None` for a mixed chord.
    pub fn circle_of(&self, chord: usize) -> Option<usize> {
        let [a, b] = self.ends[chord];
        (a.circle == b.circle).then_some(a.circle)
    }

    /// Labelled circle words, in slot order.
    pub fn words(&self) -> Vec<Vec<Label>> {
        self.circles
            .iter()
            .map(|c| c.iter().map(|&i| self.labels[i].clone()).collect())
            .collect()
    }

    /// Removes a set of chords, splicing the words together.
    pub fn without_chords(&self, chords: &[usize]) -> Self {
        let circles = self
            .circles
            .iter()
            .map(|c| c.iter().copied().filter(|i| !chords.contains(i)).collect())
            .collect();
        Self::reindexed(circles, &self.labels)
    }

    /// Rebuilds from circles over the chord indices of `labels`, dropping
    /// labels that no longer occur.
    pub(crate) fn reindexed(circles: Vec<Vec<usize>>, labels: &[Label]) -> Self {
        let mut keep = vec![usize::MAX; labels.len()];
        let mut kept = Vec::new();
        for c in &circles {
            for &i in c {
                if keep[i] == usize::MAX {
                    keep[i] = kept.len();
                    kept.push(labels[i].clone());
                }
            }
        }
        let circles = circles
            .into_iter()
            .map(|c| c.into_iter().map(|i| keep[i]).collect())
            .collect();
        Self::from_indexed(circles, kept)
    }

    /// Smallest positive integers not already used as labels.
    pub fn fresh_labels(&self, count: usize) -> Vec<Label> {
        let mut out = Vec::with_capacity(count);
        let mut n: u32 = 1;
        while out.len() < count {
            let candidate = Label::from(n);
            if !self.labels.contains(&candidate) {
                out.push(candidate);
            }
            n += 1;
        }
        out
    }

    /// Gauss-word text: circles separated by ` | `, empty circles as `-`.
    pub fn serialize(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, circle) in self.circles.iter().enumerate() {
            if c > 0 {
                f.write_str(" | ")?;
            }
            if circle.is_empty() {
                f.write_str("-")?;
            }
            for (p, &chord) in circle.iter().enumerate() {
                if p > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.labels[chord])?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChordDiagram({self})")
    }
}

impl core::str::FromStr for ChordDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_gauss_words(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> ChordDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn ends_and_partners() {
        let x = d("1 2 | 1 3 | 2 3");
        assert_eq!(x.circle_count(), 3);
        assert_eq!(x.chord_count(), 3);
        let one = x.chord_by_label("1").unwrap();
        assert_eq!(x.ends(one), [Slot::new(0, 0), Slot::new(1, 0)]);
        assert_eq!(x.partner(Slot::new(2, 1)), Slot::new(1, 1));
        assert!(!x.is_self_chord(one));
    }

    #[test]
    fn label_order_is_natural() {
        let mut v: Vec<Label> = ["10", "b", "9", "a", "2"].iter().map(|s| Label::new(s)).collect();
        v.sort();
        let s: Vec<&str> = v.iter().map(Label::as_str).collect();
        assert_eq!(s, ["2", "9", "10", "a", "b"]);
    }

    #[test]
    fn removing_chords_splices_words() {
        assert_eq!(d("3 1 2 3 2 1").without_chords(&[1, 2]).to_string(), "3 3");
        assert_eq!(d("1 1").without_chords(&[0]).to_string(), "-");
    }

    #[test]
    fn fresh_labels_skip_used() {
        let x = d("1 3 1 3");
        let f: Vec<String> = x.fresh_labels(3).iter().map(|l| l.to_string()).collect();
        assert_eq!(f, ["2", "4", "5"]);
    }

    #[test]
    fn matching_constructor() {
        assert_eq!(
            ChordDiagram::from_matching(&[2, 3, 0, 1]).unwrap().to_string(),
            "1 2 1 2"
        );
        assert_eq!(ChordDiagram::from_matching(&[]).unwrap().to_string(), "-");
        assert!(ChordDiagram::from_matching(&[1, 2, 0]).is_err());
    }
}
