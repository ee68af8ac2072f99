use alloc::collections::btree_map::{self, BTreeMap, Entry};
use alloc::vec::Vec;

use super::split_at;
use crate::diagram::{canonical_key, even_self_chord_indices, CanonicalKey, ChordDiagram};

/// Z₂-linear combination of diagrams, accumulated up to isomorphism.
///
/// Only keys with coefficient 1 are stored, each with the first diagram that
/// brought it in as representative.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearCombination {
    terms: BTreeMap<CanonicalKey, ChordDiagram>,
}

impl LinearCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn singleton(d: ChordDiagram) -> Self {
        let mut x = Self::zero();
        x.add(d);
        x
    }

    /// Adds one copy of `d` over Z₂.
    pub fn add(&mut self, d: ChordDiagram) {
        let key = canonical_key(&d);
        self.add_keyed(key, d);
    }

    fn add_keyed(&mut self, key: CanonicalKey, d: ChordDiagram) {
        match self.terms.entry(key) {
            Entry::Occupied(e) => {
                e.remove();
            }
            Entry::Vacant(e) => {
                e.insert(d);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, key: &CanonicalKey) -> bool {
        self.terms.contains_key(key)
    }

    /// Terms in canonical-key order.
    pub fn iter(&self) -> btree_map::Iter<'_, CanonicalKey, ChordDiagram> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &CanonicalKey> {
        self.terms.keys()
    }
}

impl core::ops::AddAssign<&LinearCombination> for LinearCombination {
    fn add_assign(&mut self, rhs: &LinearCombination) {
        for (k, d) in rhs.iter() {
            self.add_keyed(k.clone(), d.clone());
        }
    }
}

impl Extend<ChordDiagram> for LinearCombination {
    fn extend<I: IntoIterator<Item = ChordDiagram>>(&mut self, iter: I) {
        iter.into_iter().for_each(|d| self.add(d));
    }
}

impl FromIterator<ChordDiagram> for LinearCombination {
    fn from_iter<I: IntoIterator<Item = ChordDiagram>>(iter: I) -> Self {
        let mut x = Self::zero();
        x.extend(iter);
        x
    }
}

/// Sum of split smoothings at every even self-chord of every term.
/// Parity is taken inside each circle, counting only that circle's
/// self-chords.
///
/// A surviving class is represented by the first smoothing that produced it,
/// even if copies cancelled in between.
pub fn delta(x: &LinearCombination) -> LinearCombination {
    let mut acc: BTreeMap<CanonicalKey, (ChordDiagram, bool)> = BTreeMap::new();
    for (_, d) in x.iter() {
        for chord in even_self_chord_indices(d) {
            let y = split_at(d, chord);
            match acc.entry(canonical_key(&y)) {
                Entry::Occupied(mut e) => e.get_mut().1 ^= true,
                Entry::Vacant(e) => {
                    e.insert((y, true));
                }
            }
        }
    }
    let terms = acc
        .into_iter()
        .filter(|(_, (_, odd))| *odd)
        .map(|(k, (d, _))| (k, d))
        .collect();
    LinearCombination { terms }
}

/// `Δⁿ` applied to the single diagram `d`.
pub fn delta_n(d: &ChordDiagram, n: usize) -> LinearCombination {
    delta_levels(d, n).pop().expect("at least one level")
}

/// `[d, Δd, Δ²d, …, Δⁿd]`.
pub fn delta_levels(d: &ChordDiagram, n: usize) -> Vec<LinearCombination> {
    let mut levels = Vec::with_capacity(n + 1);
    levels.push(LinearCombination::singleton(d.clone()));
    for _ in 0..n {
        let next = delta(levels.last().expect("non-empty"));
        levels.push(next);
    }
    levels
}
