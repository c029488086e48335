use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::symbols::SymbolSet;

/// A symbol code. Codes run from 1 to the alphabet size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(u8);

impl Symbol {
    pub const fn new(code: u8) -> Option<Self> {
        if code == 0 || code as usize > Alphabet::MAX_SIZE {
            None
        } else {
            Some(Symbol(code))
        }
    }

    pub const fn code(self) -> u8 {
        self.0
    }

    /// Zero-based index, used for bit positions and matrix rows.
    pub(crate) const fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub(crate) const fn from_index(index: usize) -> Self {
        Symbol(index as u8 + 1)
    }
}

/// Ordered set of distinct characters; the `k`-th character encodes as code `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    chars: Vec<char>,
}

impl Alphabet {
    pub const MAX_SIZE: usize = 64;

    pub fn new(chars: impl IntoIterator<Item = char>) -> Result<Self> {
        let chars: Vec<char> = chars.into_iter().collect();
        if chars.len() < 2 || chars.len() > Self::MAX_SIZE {
            return Err(Error::AlphabetSize {
                got: chars.len(),
                max: Self::MAX_SIZE,
            });
        }
        for (i, c) in chars.iter().enumerate() {
            if chars[..i].contains(c) {
                return Err(Error::DuplicateSymbol(*c));
            }
        }
        Ok(Alphabet { chars })
    }

    /// A, C, G, T as codes 1 to 4.
    pub fn dna() -> Self {
        Alphabet {
            chars: ['A', 'C', 'G', 'T'].into(),
        }
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn chars(&self) -> &[char] {
        &self.chars
    }

    pub fn encode(&self, c: char) -> Option<Symbol> {
        self.chars
            .iter()
            .position(|&x| x == c)
            .map(Symbol::from_index)
    }

    /// Panics if `s` is not a code of this alphabet.
    pub fn decode(&self, s: Symbol) -> char {
        self.chars[s.index()]
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.chars.len()).map(Symbol::from_index)
    }

    pub fn full_set(&self) -> SymbolSet {
        SymbolSet::full(self.len())
    }

    pub fn contains(&self, s: Symbol) -> bool {
        s.index() < self.len()
    }
}

impl Default for Alphabet {
    fn default() -> Self {
        Self::dna()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dna_codes() {
        let a = Alphabet::dna();
        let codes: Vec<u8> = "ACGT".chars().map(|c| a.encode(c).unwrap().code()).collect();
        assert_eq!(codes, [1, 2, 3, 4]);
        assert_eq!(a.encode('N'), None);
        assert_eq!(a.decode(Symbol::new(3).unwrap()), 'G');
    }

    #[test]
    fn rejects_bad_alphabets() {
        assert!(matches!(Alphabet::new(['A']), Err(Error::AlphabetSize { .. })));
        assert_eq!(Alphabet::new(['A', 'B', 'A']), Err(Error::DuplicateSymbol('A')));
        assert!(Alphabet::new("ACGU".chars()).is_ok());
    }
}
