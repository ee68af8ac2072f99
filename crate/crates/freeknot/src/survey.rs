//! Exhaustive search for one-circle diagrams with a nonzero invariant.

use freeknot_core::enumerate::one_circle_diagrams;
use freeknot_core::{i_levels, CanonicalKey, ChordDiagram, InvariantValue};
use rayon::prelude::*;

/// A diagram class with its invariants at levels `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyRow {
    pub key: CanonicalKey,
    pub diagram: ChordDiagram,
    pub levels: Vec<InvariantValue>,
}

/// Every class with `min..=max` chords having a nonzero invariant at some
/// level in `1..=n`, ordered by chord count and then canonical key.
pub fn survey(min: usize, max: usize, n: usize) -> Vec<SurveyRow> {
    let mut rows: Vec<SurveyRow> = (min..=max)
        .flat_map(one_circle_diagrams)
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter_map(|(key, diagram)| {
            let levels = i_levels(&diagram, n).expect("enumerated diagrams have one circle");
            levels
                .iter()
                .any(|v| !v.is_zero())
                .then_some(SurveyRow { key, diagram, levels })
        })
        .collect();
    rows.sort_by(|a, b| (a.diagram.chord_count(), &a.key).cmp(&(b.diagram.chord_count(), &b.key)));
    rows
}
