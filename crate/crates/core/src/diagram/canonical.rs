use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{ChordDiagram, Label};

/// Isomorphism-invariant serialization of a diagram.
///
/// The key is the lexicographically smallest token sequence over all
/// rotations and reflections of each circle, all orderings of the circles and
/// all relabelings of the chords by first occurrence. Each circle contributes
/// its length followed by its relabeled word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u32>);

impl CanonicalKey {
    pub fn tokens(&self) -> &[u32] {
        &self.0
    }

    /// Words of the canonical representative, chords numbered from 1.
    pub fn words(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut rest = &self.0[..];
        while let Some((&len, tail)) = rest.split_first() {
            let (word, tail) = tail.split_at(len as usize);
            out.push(word.to_vec());
            rest = tail;
        }
        out
    }

    /// The canonical representative itself.
    pub fn to_diagram(&self) -> ChordDiagram {
        let words = self.words();
        let chords = words.iter().flatten().copied().max().unwrap_or(0) as usize;
        let labels = (1..=chords as u32).map(Label::from).collect();
        let circles = words
            .into_iter()
            .map(|w| w.into_iter().map(|t| t as usize - 1).collect())
            .collect();
        ChordDiagram::from_indexed(circles, labels)
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, word) in self.words().iter().enumerate() {
            if c > 0 {
                f.write_str(" | ")?;
            }
            if word.is_empty() {
                f.write_str("-")?;
            }
            for (p, t) in word.iter().enumerate() {
                if p > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{t}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({self})")
    }
}

pub fn canonical_key(d: &ChordDiagram) -> CanonicalKey {
    let mut search = Search {
        d,
        used: vec![false; d.circle_count()],
        number: vec![0; d.chord_count()],
        next: 1,
        out: Vec::with_capacity(d.slot_count() + d.circle_count()),
        best: None,
    };
    search.run();
    CanonicalKey(search.best.expect("search visits at least one complete ordering"))
}

/// One way of reading a circle: start offset and direction.
#[derive(Clone, Copy)]
struct Reading {
    circle: usize,
    start: usize,
    reversed: bool,
}

struct Search<'a> {
    d: &'a ChordDiagram,
    used: Vec<bool>,
    number: Vec<u32>,
    next: u32,
    out: Vec<u32>,
    best: Option<Vec<u32>>,
}

impl Search<'_> {
    fn slots(&self, r: Reading) -> impl Iterator<Item = usize> + '_ {
        let word = self.d.circle(r.circle);
        let n = word.len();
        (0..n).map(move |i| {
            let p = if r.reversed {
                (r.start + n - i) % n
            } else {
                (r.start + i) % n
            };
            word[p]
        })
    }

    /// Tokens emitted for reading `r` under the current numbering, and
    /// whether it introduces chords not numbered yet.
    fn emission(&self, r: Reading) -> (Vec<u32>, bool) {
        let word = self.d.circle(r.circle);
        let mut tokens = Vec::with_capacity(word.len() + 1);
        tokens.push(word.len() as u32);
        let mut fresh: Vec<usize> = Vec::new();
        for chord in self.slots(r) {
            let t = if self.number[chord] != 0 {
                self.number[chord]
            } else {
                let i = match fresh.iter().position(|&c| c == chord) {
                    Some(i) => i,
                    None => {
                        fresh.push(chord);
                        fresh.len() - 1
                    }
                };
                self.next + i as u32
            };
            tokens.push(t);
        }
        (tokens, !fresh.is_empty())
    }

    fn run(&mut self) {
        if self.used.iter().all(|&u| u) {
            if self.best.as_ref().is_none_or(|b| self.out < *b) {
                self.best = Some(self.out.clone());
            }
            return;
        }
        let mut min: Option<Vec<u32>> = None;
        let mut ties: Vec<Reading> = Vec::new();
        let mut introduces = false;
        for circle in 0..self.used.len() {
            if self.used[circle] {
                continue;
            }
            let n = self.d.circle(circle).len();
            for start in 0..n.max(1) {
                for reversed in [false, true] {
                    if reversed && n <= 2 {
                        continue;
                    }
                    let r = Reading {
                        circle,
                        start,
                        reversed,
                    };
                    let (tokens, fresh) = self.emission(r);
                    match min.as_ref().map(|m| tokens.cmp(m)) {
                        Some(core::cmp::Ordering::Greater) => {}
                        Some(core::cmp::Ordering::Equal) => ties.push(r),
                        _ => {
                            min = Some(tokens);
                            ties.clear();
                            ties.push(r);
                            introduces = fresh;
                        }
                    }
                }
            }
        }
        let min = min.expect("an unused circle exists");
        // Prune against the best complete key found so far.
        if let Some(best) = &self.best {
            let depth = self.out.len();
            let upto = (depth + min.len()).min(best.len());
            let mut candidate = self.out.clone();
            candidate.extend_from_slice(&min);
            if candidate[..upto] > best[..upto] {
                return;
            }
        }
        // Readings that number no new chords leave identical futures.
        if !introduces {
            ties.truncate(1);
        }
        for r in ties {
            let saved_next = self.next;
            let mut assigned = Vec::new();
            for chord in self.slots(r).collect::<Vec<_>>() {
                if self.number[chord] == 0 {
                    self.number[chord] = self.next;
                    self.next += 1;
                    assigned.push(chord);
                }
            }
            let depth = self.out.len();
            self.out.extend_from_slice(&min);
            self.used[r.circle] = true;
            self.run();
            self.used[r.circle] = false;
            self.out.truncate(depth);
            for chord in assigned {
                self.number[chord] = 0;
            }
            self.next = saved_next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn key(s: &str) -> CanonicalKey {
        canonical_key(&s.parse().unwrap())
    }

    #[test]
    fn rotation_and_reflection() {
        assert_eq!(key("1 2 1 2"), key("2 1 2 1"));
        assert_eq!(key("1 2 3 1 3 2"), key("2 3 1 3 2 1"));
        assert_eq!(key("1 1 2 3 2 3"), key("3 2 3 2 1 1"));
    }

    #[test]
    fn distinct_classes() {
        assert_ne!(key("1 1 2 2"), key("1 2 1 2"));
        assert_ne!(key("1 2 | 1 2"), key("1 1 | -"));
    }

    #[test]
    fn circle_permutation_and_labels() {
        assert_eq!(key("a b | c c a b"), key("z z y x | y x"));
        assert_eq!(key("- | 1 1"), key("1 1 | -"));
    }

    #[test]
    fn key_text_and_representative() {
        assert_eq!(key("2 1 2 1").to_string(), "1 2 1 2");
        assert_eq!(key("- | -").to_string(), "- | -");
        assert_eq!(key("3 | 3 x x").to_string(), "1 | 1 2 2");
        let k = key("b a c a b c");
        assert_eq!(canonical_key(&k.to_diagram()), k);
    }
}
