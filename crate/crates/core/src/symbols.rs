use alloc::string::String;
use core::fmt;

use crate::alphabet::{Alphabet, Symbol};

/// A subset of an alphabet of at most 64 symbols, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SymbolSet(u64);

impl SymbolSet {
    pub const EMPTY: SymbolSet = SymbolSet(0);

    pub const fn full(size: usize) -> Self {
        if size >= 64 {
            SymbolSet(u64::MAX)
        } else {
            SymbolSet((1u64 << size) - 1)
        }
    }

    pub const fn singleton(s: Symbol) -> Self {
        SymbolSet(1 << s.index())
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn from_bits(bits: u64) -> Self {
        SymbolSet(bits)
    }

    pub const fn contains(self, s: Symbol) -> bool {
        self.0 & (1 << s.index()) != 0
    }

    pub fn insert(&mut self, s: Symbol) {
        self.0 |= 1 << s.index();
    }

    pub fn remove(&mut self, s: Symbol) {
        self.0 &= !(1 << s.index());
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn union(self, other: Self) -> Self {
        SymbolSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: Self) -> Self {
        SymbolSet(self.0 & other.0)
    }

    pub const fn difference(self, other: Self) -> Self {
        SymbolSet(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in ascending code order.
    pub fn iter(self) -> impl Iterator<Item = Symbol> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(Symbol::from_index(i))
        })
    }

    pub fn first(self) -> Option<Symbol> {
        self.iter().next()
    }

    /// Characters of the members in code order, e.g. `"AT"`.
    pub fn render(self, alphabet: &Alphabet) -> String {
        self.iter().map(|s| alphabet.decode(s)).collect()
    }
}

impl FromIterator<Symbol> for SymbolSet {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        let mut set = SymbolSet::EMPTY;
        for s in iter {
            set.insert(s);
        }
        set
    }
}

impl fmt::Debug for SymbolSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(Symbol::code)).finish()
    }
}
