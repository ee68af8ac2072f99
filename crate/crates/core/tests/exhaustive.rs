//! Exhaustive comparisons against brute-force oracles on small diagrams.

use freeknot_core::enumerate::{one_circle_diagrams, perfect_matchings};
use freeknot_core::{canonical_key, delta_n, diagram::is_even_chord, ChordDiagram, Label};

/// Minimum over every circle ordering, rotation and reflection of the
/// length-prefixed words relabeled by first occurrence.
fn brute_key(words: &[Vec<String>]) -> Vec<u32> {
    fn readings(w: &[String]) -> Vec<Vec<String>> {
        let n = w.len().max(1);
        let mut out = Vec::new();
        for r in 0..n {
            let rot: Vec<String> = w.iter().cycle().skip(r).take(w.len()).cloned().collect();
            out.push(rot.iter().rev().cloned().collect());
            out.push(rot);
        }
        out
    }
    fn orders(k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for rest in orders(k - 1) {
            for i in 0..=rest.len() {
                let mut p = rest.clone();
                p.insert(i, k - 1);
                out.push(p);
            }
        }
        out
    }
    let choices: Vec<Vec<Vec<String>>> = words.iter().map(|w| readings(w)).collect();
    let mut best: Option<Vec<u32>> = None;
    for order in orders(words.len()) {
        let mut idx = vec![0; words.len()];
        loop {
            let mut names: Vec<&String> = Vec::new();
            let mut tokens = Vec::new();
            for &c in &order {
                let w = &choices[c][idx[c]];
                tokens.push(w.len() as u32);
                for l in w {
                    let t = match names.iter().position(|n| *n == l) {
                        Some(i) => i,
                        None => {
                            names.push(l);
                            names.len() - 1
                        }
                    };
                    tokens.push(t as u32 + 1);
                }
            }
            if best.as_ref().is_none_or(|b| tokens < *b) {
                best = Some(tokens);
            }
            let Some(c) = (0..words.len()).find(|&c| idx[c] + 1 < choices[c].len()) else {
                break;
            };
            idx[c] += 1;
            idx[..c].iter_mut().for_each(|i| *i = 0);
        }
    }
    best.expect("at least one reading")
}

fn words_of(d: &ChordDiagram) -> Vec<Vec<String>> {
    d.words()
        .iter()
        .map(|w| w.iter().map(|l| l.as_str().to_owned()).collect())
        .collect()
}

#[test]
fn one_circle_keys_match_brute_force() {
    for m in 0..=5 {
        for partner in perfect_matchings(2 * m) {
            let d = ChordDiagram::from_matching(&partner).unwrap();
            assert_eq!(canonical_key(&d).tokens(), brute_key(&words_of(&d)), "{d}");
        }
    }
}

#[test]
fn multi_circle_keys_match_brute_force() {
    for m in 0..=3 {
        for partner in perfect_matchings(2 * m) {
            let word = words_of(&ChordDiagram::from_matching(&partner).unwrap()).remove(0);
            let n = word.len();
            for a in 0..=n {
                for b in a..=n {
                    for circles in [vec![&word[..a], &word[a..]], vec![&word[..a], &word[a..b], &word[b..]]] {
                        let words: Vec<Vec<Label>> = circles
                            .iter()
                            .map(|w| w.iter().map(|s| Label::new(s)).collect())
                            .collect();
                        let d = ChordDiagram::new(words).unwrap();
                        assert_eq!(canonical_key(&d).tokens(), brute_key(&words_of(&d)), "{d}");
                    }
                }
            }
        }
    }
}

#[test]
fn class_counts_agree_with_brute_force() {
    for m in 0..=5 {
        let brute: std::collections::BTreeSet<Vec<u32>> = perfect_matchings(2 * m)
            .iter()
            .map(|p| brute_key(&words_of(&ChordDiagram::from_matching(p).unwrap())))
            .collect();
        assert_eq!(brute.len(), one_circle_diagrams(m).len(), "m = {m}");
    }
}

#[test]
fn parity_matches_position_count() {
    for m in 0..=5 {
        for partner in perfect_matchings(2 * m) {
            let d = ChordDiagram::from_matching(&partner).unwrap();
            let ends: Vec<(usize, usize)> = (0..2 * m)
                .filter(|&s| s < partner[s])
                .map(|s| (s, partner[s]))
                .collect();
            for &(p, q) in &ends {
                let linked = ends
                    .iter()
                    .filter(|&&(r, s)| (p < r && r < q && q < s) || (r < p && p < s && s < q))
                    .count();
                let label = d.label(d.chord_at(freeknot_core::Slot::new(0, p))).clone();
                assert_eq!(
                    is_even_chord(&d, label.as_str()).unwrap(),
                    linked % 2 == 0,
                    "{d} chord {label}"
                );
            }
        }
    }
}

#[test]
fn delta_term_counts_on_small_classes() {
    // Δ(1 1) = (- | -); 1 2 1 2 has no even chord; both smoothings of
    // 1 1 2 2 give - | 1 1 and cancel
    let sizes: Vec<usize> = ["1 1", "1 2 1 2", "1 1 2 2"]
        .iter()
        .map(|w| delta_n(&w.parse().unwrap(), 1).len())
        .collect();
    assert_eq!(sizes, [1, 0, 0]);
}
