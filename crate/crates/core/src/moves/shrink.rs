use alloc::collections::{BTreeMap, BTreeSet};

use super::{apply_elementary_cobordism, apply_r3, find_r3_sites, find_symmetric_configurations};
use crate::diagram::{canonical_key, CanonicalKey, ChordDiagram};

/// Breadth-first search over R3 moves and elementary-cobordism deletions
/// (at most two segments), expanding at most `budget` diagrams. Returns the
/// reachable diagram with the fewest chords, ties broken by canonical key.
///
/// Insertions are never explored, so a result with chords left does not
/// prove the input is non-trivial.
pub fn shrink(d: &ChordDiagram, budget: usize) -> ChordDiagram {
    let start = canonical_key(d);
    let mut best = (d.chord_count(), start.clone(), d.clone());
    let mut seen: BTreeSet<CanonicalKey> = BTreeSet::new();
    seen.insert(start.clone());
    let mut frontier: BTreeMap<CanonicalKey, ChordDiagram> = BTreeMap::new();
    frontier.insert(start, d.clone());
    let mut expanded = 0;
    while !frontier.is_empty() {
        let mut next = BTreeMap::new();
        for (_, x) in frontier {
            if expanded >= budget || best.0 == 0 {
                return best.2;
            }
            expanded += 1;
            let r3 = find_r3_sites(&x).into_iter().filter_map(|s| apply_r3(&x, &s).ok());
            let cob = find_symmetric_configurations(&x, 2)
                .into_iter()
                .filter_map(|c| apply_elementary_cobordism(&x, &c).ok());
            for y in r3.chain(cob) {
                let k = canonical_key(&y);
                if seen.contains(&k) {
                    continue;
                }
                seen.insert(k.clone());
                if (y.chord_count(), &k) < (best.0, &best.1) {
                    best = (y.chord_count(), k.clone(), y.clone());
                }
                next.insert(k, y);
            }
        }
        frontier = next;
    }
    best.2
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn shrunk(s: &str, budget: usize) -> alloc::string::String {
        shrink(&s.parse().unwrap(), budget).to_string()
    }

    #[test]
    fn examples() {
        assert_eq!(shrunk("1 2 1 2", 10), "-");
        assert_eq!(shrunk("-", 10), "-");
        assert_eq!(shrunk("1 1 2 2", 10), "-");
    }

    #[test]
    fn zero_budget_returns_input() {
        assert_eq!(shrunk("1 2 1 2", 0), "1 2 1 2");
    }

    #[test]
    fn nested_loops() {
        assert_eq!(shrunk("1 2 3 3 2 1", 50), "-");
    }
}
