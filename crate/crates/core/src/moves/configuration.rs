//! Even symmetric configurations and elementary cobordisms.
//!
//! A segment is an arc of the (single) circle whose ends sit in inter-slot
//! gaps, so its ends can never coincide with chord ends. The involution
//! reverses the slot order inside every segment and fixes everything else.

use alloc::vec;
use alloc::vec::Vec;

use super::reidemeister::insert_blocks;
use super::Gap;
use crate::diagram::{ChordDiagram, Label};
use crate::error::{Error, Result};

/// Arc covering slots `start, start + 1, …, start + len - 1` (cyclically).
/// `start` is the gap in front of slot `start`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    pub start: usize,
    pub len: usize,
}

impl Segment {
    pub const fn new(start: usize, len: usize) -> Self {
        Segment { start, len }
    }

    /// Gap closing the segment on a circle with `n` slots.
    pub fn end_gap(&self, n: usize) -> usize {
        if n == 0 {
            0
        } else {
            (self.start + self.len) % n
        }
    }

    pub fn slots(&self, n: usize) -> impl Iterator<Item = usize> {
        let (start, len) = (self.start, self.len);
        (0..len).map(move |i| (start + i) % n)
    }

    fn reflect(&self, n: usize, pos: usize) -> Option<usize> {
        let offset = (pos + n - self.start) % n;
        (offset < self.len).then(|| (self.start + self.len - 1 - offset) % n)
    }
}

/// A verified even symmetric configuration with its chord classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricConfiguration {
    pub segments: Vec<Segment>,
    pub circle_len: usize,
    /// Chords with both ends outside every segment.
    pub gamma: Vec<Label>,
    /// Chords mapped to themselves by the involution.
    pub beta: Vec<Label>,
    /// Pairs of distinct chords exchanged by the involution.
    pub alpha_pairs: Vec<(Label, Label)>,
}

impl SymmetricConfiguration {
    /// Image of slot `pos` under the involution.
    pub fn involution(&self, pos: usize) -> usize {
        self.segments
            .iter()
            .find_map(|s| s.reflect(self.circle_len, pos))
            .unwrap_or(pos)
    }

    /// Labels of every chord removed by the cobordism, sorted.
    pub fn deleted(&self) -> Vec<Label> {
        let mut out: Vec<Label> = self.beta.clone();
        for (a, b) in &self.alpha_pairs {
            out.push(a.clone());
            out.push(b.clone());
        }
        out.sort();
        out
    }
}

fn violated(condition: u8, detail: &'static str) -> Error {
    Error::ConditionViolated { condition, detail }
}

pub fn verify_symmetric_configuration(d: &ChordDiagram, segments: &[Segment]) -> Result<SymmetricConfiguration> {
    if d.circle_count() != 1 {
        return Err(Error::NotOneCircle(d.circle_count()));
    }
    let word = d.circle(0);
    let n = word.len();
    let mut owner = vec![None; n];
    for (k, seg) in segments.iter().enumerate() {
        if seg.start >= n.max(1) || seg.len > n {
            return Err(Error::InvalidGap {
                circle: 0,
                pos: seg.start,
            });
        }
        if seg.len % 2 != 0 {
            return Err(violated(3, "segment holds an odd number of chord ends"));
        }
        for p in seg.slots(n) {
            if owner[p].is_some() {
                return Err(Error::InvalidSite("segments are not pairwise disjoint"));
            }
            owner[p] = Some(k);
        }
    }
    let config = SymmetricConfiguration {
        segments: segments.to_vec(),
        circle_len: n,
        gamma: Vec::new(),
        beta: Vec::new(),
        alpha_pairs: Vec::new(),
    };
    let mut gamma = Vec::new();
    let mut beta = Vec::new();
    let mut alpha_pairs = Vec::new();
    for chord in 0..d.chord_count() {
        let [a, b] = d.ends(chord);
        match (owner[a.pos].is_some(), owner[b.pos].is_some()) {
            (false, false) => gamma.push(d.label(chord).clone()),
            (true, true) => {
                let (ia, ib) = (config.involution(a.pos), config.involution(b.pos));
                let image = word[ia];
                if word[ib] != image {
                    return Err(violated(5, "the reflected diagram differs from the original"));
                }
                if image == chord {
                    beta.push(d.label(chord).clone());
                } else if chord < image {
                    let (x, y) = (d.label(chord).clone(), d.label(image).clone());
                    alpha_pairs.push(if x <= y { (x, y) } else { (y, x) });
                }
            }
            _ => return Err(violated(4, "a chord has exactly one end inside the configuration")),
        }
    }
    gamma.sort();
    beta.sort();
    alpha_pairs.sort();
    Ok(SymmetricConfiguration {
        gamma,
        beta,
        alpha_pairs,
        ..config
    })
}

/// All valid configurations with at most `max_segments` non-empty segments,
/// one per set of deleted chords. Empty for multi-circle diagrams.
pub fn find_symmetric_configurations(d: &ChordDiagram, max_segments: usize) -> Vec<SymmetricConfiguration> {
    if d.circle_count() != 1 {
        return Vec::new();
    }
    let n = d.circle(0).len();
    let candidates: Vec<Segment> = (0..n)
        .flat_map(|start| (2..=n).step_by(2).map(move |len| Segment::new(start, len)))
        .collect();
    let mut found: Vec<SymmetricConfiguration> = Vec::new();
    let mut keep = |c: SymmetricConfiguration| {
        if !found.iter().any(|f| f.deleted() == c.deleted()) {
            found.push(c);
        }
    };
    if max_segments >= 1 {
        for seg in &candidates {
            if let Ok(c) = verify_symmetric_configuration(d, core::slice::from_ref(seg)) {
                keep(c);
            }
        }
    }
    if max_segments >= 2 {
        for (i, s) in candidates.iter().enumerate() {
            for t in &candidates[i + 1..] {
                if s.len + t.len > n {
                    continue;
                }
                if let Ok(c) = verify_symmetric_configuration(d, &[*s, *t]) {
                    keep(c);
                }
            }
        }
    }
    found
}

/// Deletes every chord of a configuration previously verified on `d`.
pub fn apply_elementary_cobordism(d: &ChordDiagram, c: &SymmetricConfiguration) -> Result<ChordDiagram> {
    match verify_symmetric_configuration(d, &c.segments) {
        Ok(v) if v == *c => {}
        _ => return Err(Error::Unverified),
    }
    let chords: Vec<usize> = c
        .deleted()
        .iter()
        .map(|l| d.require_chord(l.as_str()))
        .collect::<Result<_>>()?;
    Ok(d.without_chords(&chords))
}

/// Result of splicing a configuration block into a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inserted {
    pub diagram: ChordDiagram,
    pub circle: usize,
    pub segment: Segment,
}

/// Splices a palindromic matching on `2t` slots into `d` at `gap`, with
/// fresh labels numbered in order of first occurrence inside the block.
///
/// `block` lists the chords as slot pairs; it must be a perfect matching on
/// `0..2t` that is invariant under `s -> 2t - 1 - s`.
pub fn insert_configuration(d: &ChordDiagram, block: &[(usize, usize)], gap: Gap) -> Result<Inserted> {
    gap.check(d)?;
    let width = 2 * block.len();
    let mut partner = vec![usize::MAX; width];
    for &(a, b) in block {
        if a >= width || b >= width || a == b || partner[a] != usize::MAX || partner[b] != usize::MAX {
            return Err(Error::NonPalindromic);
        }
        partner[a] = b;
        partner[b] = a;
    }
    if (0..width).any(|s| partner[width - 1 - s] != width - 1 - partner[s]) {
        return Err(Error::NonPalindromic);
    }
    let fresh = d.fresh_labels(block.len());
    let mut chord_of = vec![usize::MAX; width];
    let mut next = 0;
    let mut labels = Vec::with_capacity(width);
    for s in 0..width {
        if chord_of[s] == usize::MAX {
            chord_of[s] = next;
            chord_of[partner[s]] = next;
            next += 1;
        }
        labels.push(fresh[chord_of[s]].clone());
    }
    let diagram = insert_blocks(d, &[(gap, labels)])?;
    Ok(Inserted {
        diagram,
        circle: gap.circle,
        segment: Segment::new(gap.pos, width),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn d(s: &str) -> ChordDiagram {
        s.parse().unwrap()
    }

    fn l(s: &str) -> Label {
        Label::new(s)
    }

    #[test]
    fn loop_chord_is_beta() {
        let c = verify_symmetric_configuration(&d("1 1"), &[Segment::new(0, 2)]).unwrap();
        assert_eq!(c.beta, [l("1")]);
        assert!(c.alpha_pairs.is_empty() && c.gamma.is_empty());
    }

    #[test]
    fn crossed_pair_is_alpha() {
        let c = verify_symmetric_configuration(&d("1 2 1 2"), &[Segment::new(0, 4)]).unwrap();
        assert_eq!(c.alpha_pairs, [(l("1"), l("2"))]);
        assert!(c.beta.is_empty());
        assert_eq!((0..4).map(|p| c.involution(p)).collect::<Vec<_>>(), [3, 2, 1, 0]);
    }

    #[test]
    fn crossing_boundary_violates_condition_4() {
        let e = verify_symmetric_configuration(&d("1 2 1 2"), &[Segment::new(0, 3)]);
        assert!(matches!(e, Err(Error::ConditionViolated { condition: 3, .. })));
        let e = verify_symmetric_configuration(&d("1 2 1 2"), &[Segment::new(0, 2)]);
        assert!(matches!(e, Err(Error::ConditionViolated { condition: 4, .. })));
    }

    #[test]
    fn asymmetric_block_violates_condition_5() {
        let e = verify_symmetric_configuration(&d("1 2 3 1 3 2"), &[Segment::new(0, 6)]);
        assert!(matches!(e, Err(Error::ConditionViolated { condition: 5, .. })));
    }

    #[test]
    fn overlapping_and_multi_circle() {
        assert!(verify_symmetric_configuration(&d("1 1 2 2"), &[Segment::new(0, 2), Segment::new(1, 2)]).is_err());
        assert_eq!(
            verify_symmetric_configuration(&d("1 | 1"), &[]),
            Err(Error::NotOneCircle(2))
        );
    }

    #[test]
    fn two_segments_never_give_beta_across() {
        // chords 1 and 2 each join the two segments
        let c = verify_symmetric_configuration(&d("1 2 3 2 1 3"), &[Segment::new(0, 2), Segment::new(3, 2)]).unwrap();
        assert_eq!(c.alpha_pairs, [(l("1"), l("2"))]);
        assert!(c.beta.is_empty());
        assert_eq!(c.gamma, [l("3")]);
    }

    #[test]
    fn search_examples() {
        let found = find_symmetric_configurations(&d("1 1"), 1);
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].beta, [l("1")]);
        let found = find_symmetric_configurations(&d("1 2 1 2"), 1);
        assert!(found.iter().any(|c| c.alpha_pairs == [(l("1"), l("2"))]));
        assert!(find_symmetric_configurations(&d("1 | 1"), 2).is_empty());
    }

    #[test]
    fn triangle_word_is_a_palindrome() {
        // 1 2 1 3 2 3 read backwards is the same word with 1 and 3 swapped
        let x = d("1 2 1 3 2 3");
        let full: Vec<_> = find_symmetric_configurations(&x, 2)
            .into_iter()
            .filter(|c| c.deleted().len() == 3)
            .collect();
        assert_eq!(full.len(), 1);
        assert_eq!(full[0].beta, [l("2")]);
        assert_eq!(full[0].alpha_pairs, [(l("1"), l("3"))]);
        assert_eq!(apply_elementary_cobordism(&x, &full[0]).unwrap().to_string(), "-");
    }

    #[test]
    fn cobordism_examples() {
        let x = d("1 2 1 2");
        let c = verify_symmetric_configuration(&x, &[Segment::new(0, 4)]).unwrap();
        assert_eq!(apply_elementary_cobordism(&x, &c).unwrap().to_string(), "-");
        let y = d("3 1 2 1 2 3");
        let c = verify_symmetric_configuration(&y, &[Segment::new(1, 4)]).unwrap();
        assert_eq!(c.gamma, [l("3")]);
        assert_eq!(apply_elementary_cobordism(&y, &c).unwrap().to_string(), "3 3");
        let z = d("1 1");
        let c = verify_symmetric_configuration(&z, &[Segment::new(1, 2)]).unwrap();
        assert_eq!(apply_elementary_cobordism(&z, &c).unwrap().to_string(), "-");
        // a configuration verified on another diagram is rejected
        assert_eq!(apply_elementary_cobordism(&d("1 1 2 2"), &c), Err(Error::Unverified));
    }

    #[test]
    fn insertion_examples() {
        let ins = insert_configuration(&d("-"), &[(0, 2), (1, 3)], Gap::new(0, 0)).unwrap();
        assert_eq!(ins.diagram.to_string(), "1 2 1 2");
        let ins = insert_configuration(&d("-"), &[(0, 1)], Gap::new(0, 0)).unwrap();
        assert_eq!(ins.diagram.to_string(), "1 1");
        let ins = insert_configuration(&d("3 3"), &[(0, 3), (1, 2)], Gap::new(0, 1)).unwrap();
        assert_eq!(ins.diagram.to_string(), "3 1 2 2 1 3");
        assert_eq!(ins.segment, Segment::new(1, 4));
        let c = verify_symmetric_configuration(&ins.diagram, &[ins.segment]).unwrap();
        assert_eq!(apply_elementary_cobordism(&ins.diagram, &c).unwrap().to_string(), "3 3");
    }

    #[test]
    fn non_palindromic_blocks() {
        // 1 1 2 2 reversed is 2 2 1 1: same matching, so it is palindromic
        assert!(insert_configuration(&d("-"), &[(0, 1), (2, 3)], Gap::new(0, 0)).is_ok());
        assert_eq!(
            insert_configuration(&d("-"), &[(0, 2), (1, 3), (4, 5)], Gap::new(0, 0)),
            Err(Error::NonPalindromic)
        );
        assert_eq!(
            insert_configuration(&d("-"), &[(0, 0)], Gap::new(0, 0)),
            Err(Error::NonPalindromic)
        );
        assert_eq!(
            insert_configuration(&d("-"), &[(0, 1), (1, 2)], Gap::new(0, 0)),
            Err(Error::NonPalindromic)
        );
    }

    #[test]
    fn end_gaps() {
        assert_eq!(Segment::new(3, 4).end_gap(6), 1);
        assert_eq!(Segment::new(0, 4).end_gap(4), 0);
        assert_eq!(Segment::new(0, 0).end_gap(0), 0);
    }
}
