//! Seeded random diagrams. All generators draw from a ChaCha8 stream, so a
//! seed fixes the output on every platform.

use freeknot_core::enumerate::palindromic_matchings;
use freeknot_core::ChordDiagram;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniformly random perfect matching on `2m` slots, as a partner array.
pub fn random_matching<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Vec<usize> {
    let mut slots: Vec<usize> = (0..2 * m).collect();
    slots.shuffle(rng);
    let mut partner = vec![0; 2 * m];
    for pair in slots.chunks_exact(2) {
        partner[pair[0]] = pair[1];
        partner[pair[1]] = pair[0];
    }
    partner
}

/// One circle carrying a uniformly random matching of `m` chords.
pub fn random_one_circle<R: Rng + ?Sized>(m: usize, rng: &mut R) -> ChordDiagram {
    ChordDiagram::from_matching(&random_matching(m, rng)).expect("a shuffled pairing is a perfect matching")
}

/// A random matching of `m` chords whose slot sequence is cut into
/// `circles` consecutive words at uniform cut points; circles may be empty.
pub fn random_diagram<R: Rng + ?Sized>(m: usize, circles: usize, rng: &mut R) -> ChordDiagram {
    assert!(circles >= 1, "at least one circle");
    let word = random_one_circle(m, rng).words().remove(0);
    let mut cuts: Vec<usize> = (1..circles).map(|_| rng.random_range(0..=word.len())).collect();
    cuts.sort_unstable();
    let mut words = Vec::with_capacity(circles);
    let mut from = 0;
    for cut in cuts.into_iter().chain([word.len()]) {
        words.push(word[from..cut].to_vec());
        from = cut;
    }
    ChordDiagram::new(words).expect("cutting a word keeps every label twice")
}

/// Uniform choice among the reflection-symmetric matchings on `2t` slots.
pub fn random_palindromic_block<R: Rng + ?Sized>(t: usize, rng: &mut R) -> Vec<(usize, usize)> {
    palindromic_matchings(t)
        .choose(rng)
        .expect("every t has a palindromic matching")
        .clone()
}
