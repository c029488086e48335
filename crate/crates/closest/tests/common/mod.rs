#![allow(dead_code)]

use closest_core::{encode_strings, max_distance, position_domains, Alphabet, StringSet, Symbol};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn set(rows: &[&str]) -> StringSet {
    encode_strings(rows, &Alphabet::dna()).unwrap()
}

/// Random DNA instance with `n` strings of length `l`.
pub fn random_set(rng: &mut ChaCha8Rng, n: usize, l: usize) -> StringSet {
    let rows: Vec<String> = (0..n)
        .map(|_| (0..l).map(|_| "ACGT".as_bytes()[rng.random_range(0..4)] as char).collect())
        .collect();
    encode_strings(&rows, &Alphabet::dna()).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every string of length `l` over the first `k` codes.
pub fn all_strings(l: usize, k: usize) -> Vec<Vec<Symbol>> {
    let mut out = Vec::with_capacity(k.pow(l as u32));
    let mut cur = vec![0usize; l];
    loop {
        out.push(cur.iter().map(|&c| Symbol::new(c as u8 + 1).unwrap()).collect());
        let mut i = l;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < k {
                break;
            }
            cur[i] = 0;
        }
    }
}

/// Brute-force optimum and all strings attaining it.
pub fn oracle(s: &StringSet) -> (usize, Vec<Vec<Symbol>>) {
    let all = all_strings(s.len(), s.alphabet().len());
    let best = all.iter().map(|c| max_distance(c, s)).min().unwrap();
    let opt = all.into_iter().filter(|c| max_distance(c, s) == best).collect();
    (best, opt)
}

/// Brute-force set of strings within `d`, optionally restricted to the per-position domains.
pub fn within(s: &StringSet, d: usize, restricted: bool) -> Vec<Vec<Symbol>> {
    let doms = position_domains(s);
    all_strings(s.len(), s.alphabet().len())
        .into_iter()
        .filter(|c| max_distance(c, s) <= d)
        .filter(|c| !restricted || c.iter().zip(&doms).all(|(v, dom)| dom.contains(*v)))
        .collect()
}

pub fn sorted(mut v: Vec<Vec<Symbol>>) -> Vec<Vec<Symbol>> {
    v.sort();
    v
}

pub fn decode_all(s: &StringSet, v: &[Vec<Symbol>]) -> Vec<String> {
    let mut out: Vec<String> = v.iter().map(|w| s.decode(w)).collect();
    out.sort();
    out
}
