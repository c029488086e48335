//! Position weight matrices and the search orderings derived from them.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::alphabet::Symbol;
use crate::strings::StringSet;
use crate::symbols::SymbolSet;

/// `|alphabet| x L` table of how many input strings carry each symbol at each position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pwm {
    symbols: usize,
    len: usize,
    /// Column-major: `counts[pos * symbols + symbol_index]`.
    counts: Vec<u32>,
}

/// How equal keys are ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TieBreak {
    #[default]
    LeastIndex,
    /// Ties ordered by a permutation drawn from a ChaCha8 stream with this seed.
    Seeded(u64),
}

impl TieBreak {
    /// Rank of each of `n` items among ties; lower goes first. `stream`
    /// separates independent orderings drawn from the same seed.
    pub(crate) fn ranks(self, n: usize, stream: u64) -> Vec<u32> {
        let mut perm: Vec<u32> = (0..n as u32).collect();
        if let TieBreak::Seeded(seed) = self {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(stream);
            perm.shuffle(&mut rng);
        }
        let mut ranks = alloc::vec![0; n];
        for (rank, &item) in perm.iter().enumerate() {
            ranks[item as usize] = rank as u32;
        }
        ranks
    }
}

pub fn build_pwm(set: &StringSet) -> Pwm {
    let symbols = set.alphabet().len();
    let len = set.len();
    let mut counts = alloc::vec![0u32; symbols * len];
    for row in set.rows() {
        for (j, s) in row.iter().enumerate() {
            counts[j * symbols + s.index()] += 1;
        }
    }
    Pwm {
        symbols,
        len,
        counts,
    }
}

impl Pwm {
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn alphabet_size(&self) -> usize {
        self.symbols
    }

    pub fn count(&self, s: Symbol, pos: usize) -> u32 {
        self.counts[pos * self.symbols + s.index()]
    }

    pub fn column(&self, pos: usize) -> &[u32] {
        &self.counts[pos * self.symbols..(pos + 1) * self.symbols]
    }

    pub fn column_max(&self, pos: usize) -> u32 {
        self.column(pos).iter().copied().max().unwrap_or(0)
    }

    /// Symbols with a non-zero count at `pos`.
    pub fn support(&self, pos: usize) -> SymbolSet {
        self.column(pos)
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, _)| Symbol::from_index(i))
            .collect()
    }

    /// Builds a matrix from explicit column-major counts. Used for tests and
    /// for callers that already hold frequencies.
    pub fn from_columns(symbols: usize, columns: &[&[u32]]) -> Self {
        let mut counts = Vec::with_capacity(symbols * columns.len());
        for c in columns {
            assert_eq!(c.len(), symbols, "column height must equal alphabet size");
            counts.extend_from_slice(c);
        }
        Pwm {
            symbols,
            len: columns.len(),
            counts,
        }
    }
}

/// Positions (0-based) by descending column maximum.
pub fn pwm_variable_order(pwm: &Pwm, tie: TieBreak) -> Vec<usize> {
    let ranks = tie.ranks(pwm.len, 0);
    let mut order: Vec<usize> = (0..pwm.len).collect();
    order.sort_by_key(|&j| (core::cmp::Reverse(pwm.column_max(j)), ranks[j]));
    order
}

/// Members of `domain` by descending count at `pos`. Zero-count symbols come
/// last in ascending code order whatever the tie-break.
pub fn pwm_value_order(pwm: &Pwm, pos: usize, domain: SymbolSet, tie: TieBreak) -> Vec<Symbol> {
    let ranks = tie.ranks(pwm.symbols, pos as u64 + 1);
    let mut values: Vec<Symbol> = domain.iter().collect();
    values.sort_by_key(|&s| {
        let c = pwm.count(s, pos);
        let tie_rank = if c == 0 { s.index() as u32 } else { ranks[s.index()] };
        (c == 0, core::cmp::Reverse(c), tie_rank)
    });
    values
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{encode_strings, Alphabet};
    use alloc::vec;

    fn dna(c: char) -> Symbol {
        Alphabet::dna().encode(c).unwrap()
    }

    #[test]
    fn counts_columns() {
        let s = encode_strings(&["AA", "AT", "TT"], &Alphabet::dna()).unwrap();
        let p = build_pwm(&s);
        assert_eq!(p.column(0), [2, 0, 0, 1]);
        assert_eq!(p.column(1), [1, 0, 0, 2]);

        let p = build_pwm(&encode_strings(&["AAA"], &Alphabet::dna()).unwrap());
        for j in 0..3 {
            assert_eq!(p.column(j), [1, 0, 0, 0]);
        }
    }

    #[test]
    fn variable_order_examples() {
        let s = encode_strings(&["AA", "AT", "TT"], &Alphabet::dna()).unwrap();
        assert_eq!(pwm_variable_order(&build_pwm(&s), TieBreak::LeastIndex), [0, 1]);

        let p = Pwm::from_columns(4, &[&[3, 0, 0, 0], &[5, 0, 0, 0], &[4, 0, 0, 0]]);
        assert_eq!(pwm_variable_order(&p, TieBreak::LeastIndex), [1, 2, 0]);

        let p = Pwm::from_columns(4, &[&[1u32, 1, 1, 1][..]; 5]);
        assert_eq!(pwm_variable_order(&p, TieBreak::LeastIndex), [0, 1, 2, 3, 4]);
    }

    #[test]
    fn value_order_examples() {
        let at: SymbolSet = [dna('A'), dna('T')].into_iter().collect();
        let p = Pwm::from_columns(4, &[&[2, 0, 0, 1]]);
        assert_eq!(pwm_value_order(&p, 0, at, TieBreak::LeastIndex), [dna('A'), dna('T')]);

        let p = Pwm::from_columns(4, &[&[1, 0, 0, 1]]);
        assert_eq!(pwm_value_order(&p, 0, at, TieBreak::LeastIndex), [dna('A'), dna('T')]);

        let p = Pwm::from_columns(4, &[&[3, 0, 0, 0]]);
        assert_eq!(
            pwm_value_order(&p, 0, SymbolSet::full(4), TieBreak::LeastIndex),
            vec![dna('A'), dna('C'), dna('G'), dna('T')]
        );
    }

    #[test]
    fn seeded_ties_are_reproducible_permutations() {
        let p = Pwm::from_columns(4, &[&[1u32, 1, 1, 1][..]; 12]);
        let a = pwm_variable_order(&p, TieBreak::Seeded(7));
        assert_eq!(a, pwm_variable_order(&p, TieBreak::Seeded(7)));
        let mut sorted = a.clone();
        sorted.sort();
        assert_eq!(sorted, (0..12).collect::<Vec<_>>());
        assert_ne!(a, pwm_variable_order(&p, TieBreak::Seeded(8)));

        // zero counts stay last even under a random tie-break
        let p = Pwm::from_columns(4, &[&[0, 2, 0, 2]]);
        for seed in 0..20 {
            let v = pwm_value_order(&p, 0, SymbolSet::full(4), TieBreak::Seeded(seed));
            assert_eq!(&v[2..], [dna('A'), dna('G')]);
        }
    }
}
