use alloc::string::ToString;
use alloc::vec::Vec;

use super::{ChordDiagram, Label};
use crate::error::{Error, Result};

/// Parses Gauss-word text.
///
/// Labels are alphanumeric tokens separated by whitespace, circles are
/// separated by `|` and an empty circle is written `-`. Each label must
/// occur exactly twice in the whole input.
pub fn parse_gauss_words(text: &str) -> Result<ChordDiagram> {
    if text.trim().is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut words = Vec::new();
    for part in text.split('|') {
        let tokens: Vec<&str> = part.split_whitespace().collect();
        match tokens.as_slice() {
            [] => return Err(Error::MalformedToken("|".to_string())),
            ["-"] => words.push(Vec::new()),
            _ => {
                let mut word = Vec::with_capacity(tokens.len());
                for tok in tokens {
                    if !tok.chars().all(char::is_alphanumeric) {
                        return Err(Error::MalformedToken(tok.to_string()));
                    }
                    word.push(Label::new(tok));
                }
                words.push(word);
            }
        }
    }
    ChordDiagram::new(words)
}
