//! The smoothing map, its iterates, the component graph and the cobordism
//! invariant built from them.

mod combination;
mod gamma;

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::ChordDiagram;
use crate::error::{Error, Result};

pub use combination::{delta, delta_levels, delta_n, LinearCombination};
pub use gamma::{gamma_graph, j_number, GammaGraph};

/// Deletes a self-chord and cuts its circle along it. The arc after the
/// first end replaces the circle, the arc after the second end is inserted
/// right behind it; both keep the original reading direction.
pub fn split_smooth(d: &ChordDiagram, label: &str) -> Result<ChordDiagram> {
    let chord = d.require_chord(label)?;
    if !d.is_self_chord(chord) {
        return Err(Error::MixedChord(label.to_string()));
    }
    Ok(split_at(d, chord))
}

pub(crate) fn split_at(d: &ChordDiagram, chord: usize) -> ChordDiagram {
    let [a, b] = d.ends(chord);
    debug_assert_eq!(a.circle, b.circle);
    let (p, q) = (a.pos.min(b.pos), a.pos.max(b.pos));
    let word = d.circle(a.circle);
    let inner = word[p + 1..q].to_vec();
    let outer: Vec<usize> = word[q + 1..].iter().chain(&word[..p]).copied().collect();
    let mut circles: Vec<Vec<usize>> = Vec::with_capacity(d.circle_count() + 1);
    for (c, w) in d.circles().enumerate() {
        if c == a.circle {
            circles.push(inner.clone());
            circles.push(outer.clone());
        } else {
            circles.push(w.to_vec());
        }
    }
    ChordDiagram::reindexed(circles, d.labels())
}

/// Element of the Z₂-span of the symbols `a_1, a_2, …`, stored as the set of
/// indices carrying coefficient 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InvariantValue(BTreeSet<u32>);

impl InvariantValue {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(j: u32) -> Self {
        assert!(j >= 1, "basis symbols start at a_1");
        let mut s = BTreeSet::new();
        s.insert(j);
        InvariantValue(s)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Adds `a_j` over Z₂; `j = 0` stands for the zero vector.
    pub fn toggle(&mut self, j: u32) {
        if j != 0 && !self.0.remove(&j) {
            self.0.insert(j);
        }
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<u32> for InvariantValue {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut v = Self::zero();
        iter.into_iter().for_each(|j| v.toggle(j));
        v
    }
}

impl core::ops::AddAssign<&InvariantValue> for InvariantValue {
    fn add_assign(&mut self, rhs: &InvariantValue) {
        rhs.support().for_each(|j| self.toggle(j));
    }
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, j) in self.support().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "a{j}")?;
        }
        Ok(())
    }
}

/// `a_j` for `j = j(d) > 0`, zero otherwise.
pub fn i_of_diagram(d: &ChordDiagram) -> InvariantValue {
    let mut v = InvariantValue::zero();
    v.toggle(j_number(d));
    v
}

/// Linear extension of [`i_of_diagram`].
pub fn i_of_combination(x: &LinearCombination) -> InvariantValue {
    x.iter().map(|(_, d)| j_number(d)).collect()
}

/// The invariant `I(Δⁿ(K))` of a one-circle diagram.
pub fn i_n(d: &ChordDiagram, n: usize) -> Result<InvariantValue> {
    Ok(i_levels(d, n)?.pop().expect("at least one level"))
}

/// `I⁽¹⁾, …, I⁽ⁿ⁾` in one pass. `n = 0` yields the single entry `I(K)`.
pub fn i_levels(d: &ChordDiagram, n: usize) -> Result<Vec<InvariantValue>> {
    if d.circle_count() != 1 {
        return Err(Error::NotOneCircle(d.circle_count()));
    }
    let levels = delta_levels(d, n);
    let skip = usize::from(n > 0);
    Ok(levels.iter().skip(skip).map(i_of_combination).collect())
}
