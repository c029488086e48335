use closest_core::{encode_strings, Alphabet, StringSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    /// One string per line; blank lines and `#` comments ignored.
    Plain,
    /// `>name` headers, each followed by sequence lines.
    Fasta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FormatHint {
    #[default]
    Auto,
    Plain,
    Fasta,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceDoc {
    pub format: Format,
    pub names: Option<Vec<String>>,
    pub strings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("instance is empty")]
    Empty,
    #[error("sequence data before the first FASTA header (line {0})")]
    MissingHeader(usize),
    #[error("record {0} has no sequence")]
    EmptyRecord(usize),
    #[error("record {record} has length {found}, expected {expected}")]
    UnequalLength {
        record: usize,
        expected: usize,
        found: usize,
    },
    #[error("record {record}, position {col}: symbol {ch:?} not in the alphabet")]
    InvalidSymbol { record: usize, col: usize, ch: char },
}

/// Parses an instance. Symbols are upper-cased before checking them against `alphabet`.
pub fn parse_instance(text: &str, hint: FormatHint, alphabet: &Alphabet) -> Result<InstanceDoc, ParseError> {
    let lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#') && !l.starts_with(';'));
    let format = match hint {
        FormatHint::Plain => Format::Plain,
        FormatHint::Fasta => Format::Fasta,
        FormatHint::Auto => match lines.clone().next() {
            Some((_, l)) if l.starts_with('>') => Format::Fasta,
            _ => Format::Plain,
        },
    };
    let (names, strings) = match format {
        Format::Plain => (None, lines.map(|(_, l)| l.to_ascii_uppercase()).collect::<Vec<_>>()),
        Format::Fasta => {
            let mut names = Vec::new();
            let mut seqs: Vec<String> = Vec::new();
            for (no, l) in lines {
                if let Some(name) = l.strip_prefix('>') {
                    names.push(name.trim().to_string());
                    seqs.push(String::new());
                } else {
                    let Some(seq) = seqs.last_mut() else {
                        return Err(ParseError::MissingHeader(no));
                    };
                    seq.extend(l.chars().filter(|c| !c.is_whitespace()).map(|c| c.to_ascii_uppercase()));
                }
            }
            if let Some(i) = seqs.iter().position(String::is_empty) {
                return Err(ParseError::EmptyRecord(i + 1));
            }
            (Some(names), seqs)
        }
    };
    let Some(first) = strings.first() else {
        return Err(ParseError::Empty);
    };
    let expected = first.chars().count();
    for (i, s) in strings.iter().enumerate() {
        let found = s.chars().count();
        if found != expected {
            return Err(ParseError::UnequalLength {
                record: i + 1,
                expected,
                found,
            });
        }
        if let Some((col, ch)) = s.chars().enumerate().find(|(_, c)| alphabet.encode(*c).is_none()) {
            return Err(ParseError::InvalidSymbol {
                record: i + 1,
                col: col + 1,
                ch,
            });
        }
    }
    Ok(InstanceDoc { format, names, strings })
}

pub fn write_instance(doc: &InstanceDoc) -> String {
    let mut out = String::new();
    match doc.format {
        Format::Plain => {
            for s in &doc.strings {
                out.push_str(s);
                out.push('\n');
            }
        }
        Format::Fasta => {
            for (i, s) in doc.strings.iter().enumerate() {
                let name = doc
                    .names
                    .as_ref()
                    .and_then(|n| n.get(i).cloned())
                    .unwrap_or_else(|| format!("s{}", i + 1));
                out.push('>');
                out.push_str(&name);
                out.push('\n');
                out.push_str(s);
                out.push('\n');
            }
        }
    }
    out
}

/// `n` strings of length `l` with symbols drawn uniformly and independently
/// from a ChaCha8 stream seeded with `seed`.
pub fn generate_instance(n: usize, l: usize, alphabet: &Alphabet, seed: u64) -> InstanceDoc {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chars = alphabet.chars();
    let strings = (0..n)
        .map(|_| (0..l).map(|_| chars[rng.random_range(0..chars.len())]).collect())
        .collect();
    InstanceDoc {
        format: Format::Plain,
        names: None,
        strings,
    }
}

impl InstanceDoc {
    pub fn to_string_set(&self, alphabet: &Alphabet) -> closest_core::Result<StringSet> {
        encode_strings(&self.strings, alphabet)
    }
}
