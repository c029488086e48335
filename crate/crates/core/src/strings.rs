use alloc::string::String;
use alloc::vec::Vec;

use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Error, Result};

/// `N` strings of a common length `L` over one alphabet, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StringSet {
    alphabet: Alphabet,
    cells: Vec<Symbol>,
    count: usize,
    len: usize,
}

/// Encodes character strings against `alphabet`, preserving row order.
pub fn encode_strings<S: AsRef<str>>(raw: &[S], alphabet: &Alphabet) -> Result<StringSet> {
    let rows = raw
        .iter()
        .enumerate()
        .map(|(row, s)| {
            s.as_ref()
                .chars()
                .enumerate()
                .map(|(col, ch)| {
                    alphabet
                        .encode(ch)
                        .ok_or(Error::InvalidSymbol { row, col, ch })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    StringSet::from_rows(alphabet.clone(), rows)
}

impl StringSet {
    pub fn from_rows(alphabet: Alphabet, rows: Vec<Vec<Symbol>>) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(Error::EmptyInput);
        };
        let len = first.len();
        if len == 0 {
            return Err(Error::EmptyString);
        }
        let mut cells = Vec::with_capacity(rows.len() * len);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != len {
                return Err(Error::LengthMismatch {
                    row,
                    expected: len,
                    found: r.len(),
                });
            }
            for (col, &s) in r.iter().enumerate() {
                if !alphabet.contains(s) {
                    return Err(Error::InvalidSymbol {
                        row,
                        col,
                        ch: char::from_digit(s.code() as u32, 36).unwrap_or('?'),
                    });
                }
            }
            cells.extend_from_slice(r);
        }
        Ok(StringSet {
            alphabet,
            cells,
            count: rows.len(),
            len,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Number of strings, `N`.
    pub fn count(&self) -> usize {
        self.count
    }

    /// String length, `L`.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn row(&self, i: usize) -> &[Symbol] {
        &self.cells[i * self.len..(i + 1) * self.len]
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = &[Symbol]> + '_ {
        self.cells.chunks_exact(self.len)
    }

    pub fn get(&self, row: usize, col: usize) -> Symbol {
        self.cells[row * self.len + col]
    }

    pub fn decode(&self, row: &[Symbol]) -> String {
        row.iter().map(|&s| self.alphabet.decode(s)).collect()
    }

    pub fn encode(&self, s: &str) -> Result<Vec<Symbol>> {
        let v = s
            .chars()
            .enumerate()
            .map(|(col, ch)| {
                self.alphabet
                    .encode(ch)
                    .ok_or(Error::InvalidSymbol { row: 0, col, ch })
            })
            .collect::<Result<Vec<_>>>()?;
        if v.len() != self.len {
            return Err(Error::LengthMismatch {
                row: 0,
                expected: self.len,
                found: v.len(),
            });
        }
        Ok(v)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.rows().map(|r| self.decode(r)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encodes_rows_in_order() {
        let s = encode_strings(&["ACGT"], &Alphabet::dna()).unwrap();
        assert_eq!((s.count(), s.len()), (1, 4));
        let codes: Vec<u8> = s.row(0).iter().map(|x| x.code()).collect();
        assert_eq!(codes, [1, 2, 3, 4]);

        let s = encode_strings(&["AAA", "TTT"], &Alphabet::dna()).unwrap();
        assert_eq!((s.count(), s.len()), (2, 3));
        assert_eq!(s.to_strings(), ["AAA", "TTT"]);
    }

    #[test]
    fn encode_errors() {
        let dna = Alphabet::dna();
        assert_eq!(
            encode_strings(&["AC", "ACG"], &dna),
            Err(Error::LengthMismatch {
                row: 1,
                expected: 2,
                found: 3
            })
        );
        assert_eq!(
            encode_strings(&["ACN"], &dna),
            Err(Error::InvalidSymbol {
                row: 0,
                col: 2,
                ch: 'N'
            })
        );
        assert_eq!(encode_strings::<&str>(&[], &dna), Err(Error::EmptyInput));
        assert_eq!(encode_strings(&[""], &dna), Err(Error::EmptyString));
    }
}
