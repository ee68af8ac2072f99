//! Exhaustive generators for small diagrams.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::{canonical_key, CanonicalKey, ChordDiagram};

/// Every perfect matching of `0..n` as a partner array (`n` even).
pub fn perfect_matchings(n: usize) -> Vec<Vec<usize>> {
    fn go(partner: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(first) = partner.iter().position(|&p| p == usize::MAX) else {
            out.push(partner.clone());
            return;
        };
        for other in first + 1..partner.len() {
            if partner[other] == usize::MAX {
                partner[first] = other;
                partner[other] = first;
                go(partner, out);
                partner[first] = usize::MAX;
                partner[other] = usize::MAX;
            }
        }
    }
    assert!(n.is_multiple_of(2), "odd slot count");
    let mut out = Vec::new();
    go(&mut vec![usize::MAX; n], &mut out);
    out
}

/// One representative per isomorphism class of one-circle diagrams with
/// exactly `m` chords, in canonical-key order.
pub fn one_circle_diagrams(m: usize) -> Vec<(CanonicalKey, ChordDiagram)> {
    let mut classes = BTreeMap::new();
    for partner in perfect_matchings(2 * m) {
        let d = ChordDiagram::from_matching(&partner).expect("generated matchings are perfect");
        classes.entry(canonical_key(&d)).or_insert(d);
    }
    classes.into_iter().collect()
}

/// Perfect matchings of `0..2t` invariant under `s -> 2t - 1 - s`, as
/// chord lists `(a, b)` with `a < b`.
pub fn palindromic_matchings(t: usize) -> Vec<Vec<(usize, usize)>> {
    let n = 2 * t;
    perfect_matchings(n)
        .into_iter()
        .filter(|p| (0..n).all(|s| p[n - 1 - s] == n - 1 - p[s]))
        .map(|p| (0..n).filter(|&s| s < p[s]).map(|s| (s, p[s])).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_counts() {
        let counts: Vec<usize> = (0..6).map(|m| perfect_matchings(2 * m).len()).collect();
        assert_eq!(counts, [1, 1, 3, 15, 105, 945]);
    }

    #[test]
    fn class_counts() {
        // chord diagrams up to rotation and reflection: 1, 1, 2, 5, 17, 79
        let counts: Vec<usize> = (0..6).map(|m| one_circle_diagrams(m).len()).collect();
        assert_eq!(counts, [1, 1, 2, 5, 17, 79]);
    }

    #[test]
    fn palindromes() {
        assert_eq!(palindromic_matchings(1), [vec![(0, 1)]]);
        assert_eq!(palindromic_matchings(2).len(), 3);
        for block in palindromic_matchings(3) {
            assert_eq!(block.len(), 3);
        }
    }
}
