use alloc::vec;
use alloc::vec::Vec;

use super::{adjacent_pairs, Gap, MoveKind, MoveSite};
use crate::diagram::{ChordDiagram, Label, Slot};
use crate::error::{Error, Result};

/// Self-chords whose two ends are neighbours on their circle.
pub fn find_r1_sites(d: &ChordDiagram) -> Vec<MoveSite> {
    let mut sites: Vec<MoveSite> = Vec::new();
    for (a, b) in adjacent_pairs(d) {
        let chord = d.chord_at(a);
        if chord == d.chord_at(b) && !sites.iter().any(|s| &s.chords[0] == d.label(chord)) {
            sites.push(MoveSite {
                kind: MoveKind::R1,
                chords: vec![d.label(chord).clone()],
                slots: vec![a, b],
            });
        }
    }
    sites.sort();
    sites
}

fn sorted_pair(d: &ChordDiagram, a: usize, b: usize) -> [usize; 2] {
    if d.label(a) <= d.label(b) {
        [a, b]
    } else {
        [b, a]
    }
}

/// Bigons: two chords whose four ends form two disjoint adjacent pairs,
/// each pair holding one end of either chord.
pub fn find_r2_sites(d: &ChordDiagram) -> Vec<MoveSite> {
    let pairs: Vec<(Slot, Slot)> = adjacent_pairs(d)
        .into_iter()
        .filter(|&(a, b)| d.chord_at(a) != d.chord_at(b))
        .collect();
    let mut sites: Vec<MoveSite> = Vec::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        let chords = sorted_pair(d, d.chord_at(a), d.chord_at(b));
        for &(x, y) in &pairs[i + 1..] {
            if sorted_pair(d, d.chord_at(x), d.chord_at(y)) != chords || [x, y].iter().any(|s| *s == a || *s == b) {
                continue;
            }
            let labels = vec![d.label(chords[0]).clone(), d.label(chords[1]).clone()];
            if !sites.iter().any(|s| s.chords == labels) {
                sites.push(MoveSite {
                    kind: MoveKind::R2,
                    chords: labels,
                    slots: vec![a, b, x, y],
                });
            }
        }
    }
    sites.sort();
    sites
}

/// Triangles: three disjoint adjacent pairs realising the pattern
/// `(a, b), (b, c), (c, a)` with every end of `a`, `b`, `c` used once.
pub fn find_r3_sites(d: &ChordDiagram) -> Vec<MoveSite> {
    let pairs: Vec<(Slot, Slot)> = adjacent_pairs(d)
        .into_iter()
        .filter(|&(a, b)| d.chord_at(a) != d.chord_at(b))
        .collect();
    let mut sites = Vec::new();
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            for k in j + 1..pairs.len() {
                let slots = [pairs[i].0, pairs[i].1, pairs[j].0, pairs[j].1, pairs[k].0, pairs[k].1];
                let distinct = (0..6).all(|u| (u + 1..6).all(|v| slots[u] != slots[v]));
                if !distinct {
                    continue;
                }
                let mut chords: Vec<usize> = slots.iter().map(|&s| d.chord_at(s)).collect();
                chords.sort_unstable();
                chords.dedup();
                // six distinct slots on three chords: each chord's ends used once
                if chords.len() != 3 {
                    continue;
                }
                let mut labels: Vec<Label> = chords.iter().map(|&c| d.label(c).clone()).collect();
                labels.sort();
                sites.push(MoveSite {
                    kind: MoveKind::R3,
                    chords: labels,
                    slots: slots.to_vec(),
                });
            }
        }
    }
    sites.sort();
    sites
}

/// R1 removal at a detected site, or insertion of a loop chord at a gap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum R1Edit {
    Remove(MoveSite),
    Insert { gap: Gap, label: Label },
}

/// R2 removal at a detected site, or insertion of a bigon. The first chord
/// end pair goes at `gaps[0]` as `a b`; the second at `gaps[1]` as `b a`
/// (parallel) or `a b` (crossed).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum R2Edit {
    Remove(MoveSite),
    Insert {
        gaps: [Gap; 2],
        labels: [Label; 2],
        crossed: bool,
    },
}

fn ensure_fresh(d: &ChordDiagram, labels: &[Label]) -> Result<()> {
    for (i, l) in labels.iter().enumerate() {
        if d.labels().contains(l) || labels[..i].contains(l) {
            return Err(Error::LabelInUse(l.as_str().into()));
        }
    }
    Ok(())
}

fn remove_site(d: &ChordDiagram, site: &MoveSite, found: Vec<MoveSite>) -> Result<ChordDiagram> {
    if !found.iter().any(|s| s.chords == site.chords) {
        return Err(Error::InvalidSite("no such site in this diagram"));
    }
    let chords: Vec<usize> = site
        .chords
        .iter()
        .map(|l| d.require_chord(l.as_str()))
        .collect::<Result<_>>()?;
    Ok(d.without_chords(&chords))
}

/// Splices blocks of labels into the diagram at the given gaps. Blocks at
/// the same gap are concatenated in order.
pub(crate) fn insert_blocks(d: &ChordDiagram, blocks: &[(Gap, Vec<Label>)]) -> Result<ChordDiagram> {
    for (gap, _) in blocks {
        gap.check(d)?;
    }
    let mut words = d.words();
    let mut order: Vec<usize> = (0..blocks.len()).collect();
    // insert right to left so earlier gap positions stay valid
    order.sort_by(|&i, &j| blocks[j].0.cmp(&blocks[i].0).then(j.cmp(&i)));
    for i in order {
        let (gap, block) = &blocks[i];
        let word = &mut words[gap.circle];
        word.splice(gap.pos..gap.pos, block.iter().cloned());
    }
    ChordDiagram::new(words)
}

pub fn apply_r1(d: &ChordDiagram, edit: &R1Edit) -> Result<ChordDiagram> {
    match edit {
        R1Edit::Remove(site) => remove_site(d, site, find_r1_sites(d)),
        R1Edit::Insert { gap, label } => {
            ensure_fresh(d, core::slice::from_ref(label))?;
            insert_blocks(d, &[(*gap, vec![label.clone(), label.clone()])])
        }
    }
}

pub fn apply_r2(d: &ChordDiagram, edit: &R2Edit) -> Result<ChordDiagram> {
    match edit {
        R2Edit::Remove(site) => remove_site(d, site, find_r2_sites(d)),
        R2Edit::Insert { gaps, labels, crossed } => {
            ensure_fresh(d, labels)?;
            let [a, b] = labels.clone();
            let second = if *crossed {
                vec![a.clone(), b.clone()]
            } else {
                vec![b.clone(), a.clone()]
            };
            insert_blocks(d, &[(gaps[0], vec![a, b]), (gaps[1], second)])
        }
    }
}

/// Transposes the two slots of each adjacent pair of a triangle. Applying
/// the move again at the same slots restores the diagram.
pub fn apply_r3(d: &ChordDiagram, site: &MoveSite) -> Result<ChordDiagram> {
    if site.kind != MoveKind::R3 || !find_r3_sites(d).contains(site) {
        return Err(Error::InvalidSite("no such R3 site in this diagram"));
    }
    let mut circles: Vec<Vec<usize>> = d.circles().map(<[usize]>::to_vec).collect();
    for (a, b) in site.pairs() {
        let (x, y) = (d.chord_at(a), d.chord_at(b));
        circles[a.circle][a.pos] = y;
        circles[b.circle][b.pos] = x;
    }
    Ok(ChordDiagram::from_indexed(circles, d.labels().to_vec()))
}
