//! Component counts after smoothing, computed two independent ways: by
//! tracing the reconnected circle, and from the GF(2) nullity of the
//! interlacement matrix of the smoothed chords.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::{self_interlacement, ChordDiagram};
use crate::error::{Error, Result};

const WORD: usize = 64;

/// Square 0/1 matrix over GF(2), rows stored as bit words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    size: usize,
    rows: Vec<Vec<u64>>,
}

impl Gf2Matrix {
    pub fn zero(size: usize) -> Self {
        let words = size.div_ceil(WORD);
        Gf2Matrix {
            size,
            rows: vec![vec![0; words]; size],
        }
    }

    pub fn from_rows(rows: &[&[u8]]) -> Self {
        let mut m = Self::zero(rows.len());
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), rows.len(), "matrix must be square");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v & 1 == 1);
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i][j / WORD] >> (j % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        let bit = 1u64 << (j % WORD);
        if v {
            self.rows[i][j / WORD] |= bit;
        } else {
            self.rows[i][j / WORD] &= !bit;
        }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.size).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Principal submatrix on the given row/column indices.
    pub fn restrict(&self, idx: &[usize]) -> Self {
        let mut m = Self::zero(idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                m.set(a, b, self.get(i, j));
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.size {
            let (w, bit) = (col / WORD, 1u64 << (col % WORD));
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][w] & bit != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row[w] & bit != 0 {
                    row.iter_mut().zip(&pivot_row).for_each(|(x, y)| *x ^= y);
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Kernel dimension over GF(2).
pub fn gf2_nullity(m: &Gf2Matrix) -> usize {
    m.size() - m.rank()
}

fn subset_chords(d: &ChordDiagram, subset: &[&str]) -> Result<Vec<bool>> {
    if d.circle_count() != 1 {
        return Err(Error::NotOneCircle(d.circle_count()));
    }
    let mut marked = vec![false; d.chord_count()];
    for label in subset {
        let c = d
            .chord_by_label(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
        marked[c] = true;
    }
    Ok(marked)
}

/// Number of circles after simultaneously smoothing every chord of `subset`
/// with the resolution that follows the circle's orientation.
pub fn trace_components(d: &ChordDiagram, subset: &[&str]) -> Result<usize> {
    let marked = subset_chords(d, subset)?;
    Ok(trace_marked(d.circle(0), &marked))
}

/// Orbit count of the arc successor map. Arc `i` runs from slot `i` to slot
/// `i + 1`; at a smoothed slot the walk jumps to the partner slot and leaves
/// forward from there.
pub(crate) fn trace_marked(word: &[usize], marked: &[bool]) -> usize {
    let n = word.len();
    if n == 0 {
        return 1;
    }
    let mut partner = vec![0; n];
    let mut first = vec![usize::MAX; marked.len()];
    for (p, &c) in word.iter().enumerate() {
        if first[c] == usize::MAX {
            first[c] = p;
        } else {
            partner[p] = first[c];
            partner[first[c]] = p;
        }
    }
    let mut seen = vec![false; n];
    let mut orbits = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        orbits += 1;
        let mut arc = start;
        while !seen[arc] {
            seen[arc] = true;
            let s = (arc + 1) % n;
            arc = if marked[word[s]] { partner[s] } else { s };
        }
    }
    orbits
}

/// `1 + nullity` of the interlacement matrix restricted to `subset`.
pub fn nullity_components(d: &ChordDiagram, subset: &[&str]) -> Result<usize> {
    let marked = subset_chords(d, subset)?;
    let il = self_interlacement(d, 0)?;
    let idx: Vec<usize> = il
        .chords
        .iter()
        .enumerate()
        .filter(|(_, &c)| marked[c])
        .map(|(i, _)| i)
        .collect();
    Ok(gf2_nullity(&il.matrix.restrict(&idx)) + 1)
}
