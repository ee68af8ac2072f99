use alloc::string::String;

/// Everything that can go wrong while building or transforming a diagram.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("label {label} occurs {count} times, expected exactly 2")]
    LabelCount { label: String, count: usize },
    #[error("a diagram needs at least one circle")]
    NoCircles,
    #[error("unknown chord label {0}")]
    UnknownLabel(String),
    #[error("parity undefined for mixed chord {0}")]
    MixedChord(String),
    #[error("circle index {index} out of range ({count} circles)")]
    CircleOutOfRange { index: usize, count: usize },
    #[error("expected a one-circle diagram, found {0} circles")]
    NotOneCircle(usize),
    #[error("invalid gap {pos} on circle {circle}")]
    InvalidGap { circle: usize, pos: usize },
    #[error("invalid move site: {0}")]
    InvalidSite(&'static str),
    #[error("fresh label {0} is already in use")]
    LabelInUse(String),
    /// Configuration conditions: 3 every segment holds an even number of
    /// chord ends, 4 no chord has exactly one end inside the segments, 5 the
    /// involution maps chords to chords.
    #[error("condition {condition} violated: {detail}")]
    ConditionViolated { condition: u8, detail: &'static str },
    #[error("block is not a palindromic perfect matching")]
    NonPalindromic,
    #[error("configuration was not verified against this diagram")]
    Unverified,
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
