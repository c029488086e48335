//! Brute-force reference answers, independent of the search engine.
#![allow(dead_code)]

use closest_core::{encode_strings, Alphabet, StringSet, Symbol};
use proptest::prelude::*;

pub fn set(rows: &[&str]) -> StringSet {
    encode_strings(rows, &Alphabet::dna()).unwrap()
}

pub fn hd(a: &[Symbol], b: &[Symbol]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

pub fn radius(c: &[Symbol], s: &StringSet) -> usize {
    s.rows().map(|r| hd(c, r)).max().unwrap()
}

/// Every string of length `L` over the full alphabet, in code order.
pub fn all_strings(s: &StringSet) -> Vec<Vec<Symbol>> {
    let a = s.alphabet().len();
    let l = s.len();
    let total = a.pow(l as u32);
    (0..total)
        .map(|mut x| {
            let mut v = vec![Symbol::new(1).unwrap(); l];
            for j in (0..l).rev() {
                v[j] = Symbol::new((x % a) as u8 + 1).unwrap();
                x /= a;
            }
            v
        })
        .collect()
}

/// Minimum radius and every string attaining it.
pub fn oracle(s: &StringSet) -> (usize, Vec<Vec<Symbol>>) {
    let all = all_strings(s);
    let radii: Vec<usize> = all.iter().map(|c| radius(c, s)).collect();
    let best = *radii.iter().min().unwrap();
    let sols = all
        .into_iter()
        .zip(radii)
        .filter(|(_, r)| *r == best)
        .map(|(c, _)| c)
        .collect();
    (best, sols)
}

pub fn instance(n: std::ops::RangeInclusive<usize>, l: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = StringSet> {
    (n, l).prop_flat_map(|(n, l)| {
        prop::collection::vec(prop::collection::vec(1u8..=4, l), n).prop_map(|rows| {
            let rows = rows
                .into_iter()
                .map(|r| r.into_iter().map(|c| Symbol::new(c).unwrap()).collect())
                .collect();
            StringSet::from_rows(Alphabet::dna(), rows).unwrap()
        })
    })
}
