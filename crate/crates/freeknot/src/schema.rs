//! JSON shapes used by the command-line tool. Every type round-trips through
//! `serde_json` and converts back to the core type it mirrors.
//!
//! | value               | shape                                                        |
//! |---------------------|--------------------------------------------------------------|
//! | diagram             | Gauss word string, circles joined by `" \| "`, `"-"` empty   |
//! | linear combination  | `[{"diagram": "...", "count_mod2": 1}, ...]` in key order    |
//! | invariant value     | `{"support": [4]}`                                           |
//! | move site           | `{"kind": "R3", "chords": ["1"], "slots": [{"circle": 0, "pos": 1}]}` |
//! | configuration       | `{"segments": [{"start": 0, "end": 4, "len": 4}], "gamma": [], "beta": [], "alpha": [["1", "2"]]}` |

use anyhow::{bail, Context};
use freeknot_core::moves::{Segment, SymmetricConfiguration};
use freeknot_core::{ChordDiagram, InvariantValue, Label, LinearCombination, MoveKind, MoveSite, Slot};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub diagram: String,
    pub count_mod2: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CombinationJson(pub Vec<TermJson>);

impl From<&LinearCombination> for CombinationJson {
    fn from(x: &LinearCombination) -> Self {
        CombinationJson(
            x.iter()
                .map(|(_, d)| TermJson {
                    diagram: d.serialize(),
                    count_mod2: 1,
                })
                .collect(),
        )
    }
}

impl CombinationJson {
    pub fn to_combination(&self) -> anyhow::Result<LinearCombination> {
        let mut x = LinearCombination::zero();
        for t in &self.0 {
            let d: ChordDiagram = t.diagram.parse().with_context(|| format!("term {:?}", t.diagram))?;
            match t.count_mod2 {
                0 => {}
                1 => x.add(d),
                c => bail!("count_mod2 must be 0 or 1, got {c}"),
            }
        }
        Ok(x)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantJson {
    pub support: Vec<u32>,
}

impl From<&InvariantValue> for InvariantJson {
    fn from(v: &InvariantValue) -> Self {
        InvariantJson {
            support: v.support().collect(),
        }
    }
}

impl From<&InvariantJson> for InvariantValue {
    fn from(v: &InvariantJson) -> Self {
        v.support.iter().copied().collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlotJson {
    pub circle: usize,
    pub pos: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveSiteJson {
    pub kind: String,
    pub chords: Vec<String>,
    pub slots: Vec<SlotJson>,
}

impl From<&MoveSite> for MoveSiteJson {
    fn from(s: &MoveSite) -> Self {
        MoveSiteJson {
            kind: s.kind.to_string(),
            chords: s.chords.iter().map(|l| l.as_str().to_owned()).collect(),
            slots: s
                .slots
                .iter()
                .map(|s| SlotJson {
                    circle: s.circle,
                    pos: s.pos,
                })
                .collect(),
        }
    }
}

impl MoveSiteJson {
    pub fn to_site(&self) -> anyhow::Result<MoveSite> {
        Ok(MoveSite {
            kind: parse_kind(&self.kind)?,
            chords: self.chords.iter().map(|c| Label::new(c)).collect(),
            slots: self.slots.iter().map(|s| Slot::new(s.circle, s.pos)).collect(),
        })
    }
}

pub fn parse_kind(s: &str) -> anyhow::Result<MoveKind> {
    Ok(match s.to_ascii_uppercase().as_str() {
        "R1" => MoveKind::R1,
        "R2" => MoveKind::R2,
        "R3" => MoveKind::R3,
        _ => bail!("unknown move kind {s:?}"),
    })
}

/// Segment between two boundary gaps; `end` is redundant with `start + len`
/// modulo the circle length and is checked on the way back.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentJson {
    pub start: usize,
    pub end: usize,
    pub len: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigurationJson {
    pub segments: Vec<SegmentJson>,
    #[serde(default)]
    pub gamma: Vec<String>,
    #[serde(default)]
    pub beta: Vec<String>,
    #[serde(default)]
    pub alpha: Vec<[String; 2]>,
}

fn names(labels: &[Label]) -> Vec<String> {
    labels.iter().map(|l| l.as_str().to_owned()).collect()
}

impl From<&SymmetricConfiguration> for ConfigurationJson {
    fn from(c: &SymmetricConfiguration) -> Self {
        ConfigurationJson {
            segments: c
                .segments
                .iter()
                .map(|s| SegmentJson {
                    start: s.start,
                    end: s.end_gap(c.circle_len),
                    len: s.len,
                })
                .collect(),
            gamma: names(&c.gamma),
            beta: names(&c.beta),
            alpha: c
                .alpha_pairs
                .iter()
                .map(|(a, b)| [a.as_str().to_owned(), b.as_str().to_owned()])
                .collect(),
        }
    }
}

impl ConfigurationJson {
    /// Segments only; the classification is recomputed by verification.
    pub fn to_segments(&self, circle_len: usize) -> anyhow::Result<Vec<Segment>> {
        self.segments
            .iter()
            .map(|s| {
                let seg = Segment::new(s.start, s.len);
                if seg.end_gap(circle_len) != s.end {
                    bail!(
                        "segment end {} does not match start {} and length {}",
                        s.end,
                        s.start,
                        s.len
                    );
                }
                Ok(seg)
            })
            .collect()
    }
}
