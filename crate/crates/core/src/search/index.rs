use alloc::vec::Vec;

use crate::strings::StringSet;

/// Per-column lookup of which strings carry which symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ColumnIndex {
    pub(crate) count: usize,
    pub(crate) len: usize,
    pub(crate) symbols: usize,
    /// `cells[j * count + i]`: zero-based symbol of string `i` at position `j`.
    pub(crate) cells: Vec<u8>,
    offsets: Vec<u32>,
    members: Vec<u32>,
}

impl ColumnIndex {
    pub(crate) fn new(set: &StringSet) -> Self {
        let (count, len, symbols) = (set.count(), set.len(), set.alphabet().len());
        let mut cells = Vec::with_capacity(count * len);
        for j in 0..len {
            for i in 0..count {
                cells.push(set.get(i, j).index() as u8);
            }
        }
        let mut offsets = Vec::with_capacity(len * symbols + 1);
        let mut members = Vec::with_capacity(count * len);
        offsets.push(0);
        for j in 0..len {
            for s in 0..symbols {
                let col = &cells[j * count..(j + 1) * count];
                members.extend(
                    col.iter()
                        .enumerate()
                        .filter(|(_, &c)| c as usize == s)
                        .map(|(i, _)| i as u32),
                );
                offsets.push(members.len() as u32);
            }
        }
        ColumnIndex {
            count,
            len,
            symbols,
            cells,
            offsets,
            members,
        }
    }

    #[inline]
    pub(crate) fn cell(&self, pos: usize, string: usize) -> usize {
        self.cells[pos * self.count + string] as usize
    }

    /// Strings with zero-based symbol `s` at `pos`.
    #[inline]
    pub(crate) fn members(&self, pos: usize, s: usize) -> &[u32] {
        let k = pos * self.symbols + s;
        &self.members[self.offsets[k] as usize..self.offsets[k + 1] as usize]
    }
}
