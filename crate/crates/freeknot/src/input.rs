//! Reading diagrams from arguments and files.

use std::path::Path;

use anyhow::{bail, Context};
use freeknot_core::ChordDiagram;

/// Diagram text from a positional argument or a file, exactly one of them.
/// In files, blank lines and lines starting with `#` are skipped and a
/// single diagram line must remain.
pub fn read_diagram(word: Option<&str>, file: Option<&Path>) -> anyhow::Result<ChordDiagram> {
    let text = match (word, file) {
        (Some(w), None) => w.to_owned(),
        (None, Some(path)) => {
            let raw = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let mut lines = raw
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'));
            let Some(first) = lines.next() else {
                bail!("{} holds no diagram", path.display())
            };
            if lines.next().is_some() {
                bail!("{} holds more than one diagram", path.display());
            }
            first.to_owned()
        }
        (Some(_), Some(_)) => bail!("give a diagram or --file, not both"),
        (None, None) => bail!("no diagram given"),
    };
    text.parse().with_context(|| format!("parsing {text:?}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn argument() {
        assert_eq!(read_diagram(Some("1 1"), None).unwrap().serialize(), "1 1");
        assert!(read_diagram(None, None).is_err());
        assert!(read_diagram(Some("1"), None).is_err());
    }

    #[test]
    fn file() {
        let dir = std::env::temp_dir().join(format!("freeknot-input-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let one = dir.join("one.txt");
        std::fs::write(&one, "# comment\n\n1 2 1 2\n").unwrap();
        assert_eq!(read_diagram(None, Some(&one)).unwrap().serialize(), "1 2 1 2");
        let two = dir.join("two.txt");
        std::fs::write(&two, "1 1\n2 2\n").unwrap();
        assert!(read_diagram(None, Some(&two)).is_err());
        assert!(read_diagram(Some("1 1"), Some(&one)).is_err());
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
