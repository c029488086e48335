use alloc::vec::Vec;

use crate::alphabet::Symbol;
use crate::model::Model;
use crate::symbols::SymbolSet;

use super::ColumnIndex;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Propagation {
    Ok,
    Fail,
}

/// A node of the search tree: the partial assignment, the narrowed domains,
/// and for every input string the mismatches already committed plus the
/// unassigned positions whose domain no longer contains that string's symbol.
/// The sum of the two is a lower bound on the string's final distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchState {
    domains: Vec<SymbolSet>,
    assignment: Vec<Option<Symbol>>,
    depth: usize,
    mismatches: Vec<u32>,
    forced: Vec<u32>,
}

impl SearchState {
    /// The root node over the model's domains, before any propagation.
    pub fn root(model: &Model) -> Self {
        Self::with_domains(model.index(), model.domains().to_vec())
    }

    pub(crate) fn with_domains(index: &ColumnIndex, domains: Vec<SymbolSet>) -> Self {
        let mut forced = alloc::vec![0u32; index.count];
        for (j, d) in domains.iter().enumerate() {
            for (i, f) in forced.iter_mut().enumerate() {
                if !d.contains(Symbol::from_index(index.cell(j, i))) {
                    *f += 1;
                }
            }
        }
        SearchState {
            assignment: alloc::vec![None; domains.len()],
            domains,
            depth: 0,
            mismatches: alloc::vec![0; index.count],
            forced,
        }
    }

    pub fn domain(&self, pos: usize) -> SymbolSet {
        self.domains[pos]
    }

    pub fn domains(&self) -> &[SymbolSet] {
        &self.domains
    }

    pub fn assignment(&self) -> &[Option<Symbol>] {
        &self.assignment
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn mismatches(&self) -> &[u32] {
        &self.mismatches
    }

    pub fn forced_mismatches(&self) -> &[u32] {
        &self.forced
    }

    pub fn is_complete(&self) -> bool {
        self.depth == self.assignment.len()
    }

    /// Largest committed mismatch count; the radius of a complete assignment.
    pub fn radius(&self) -> usize {
        self.mismatches.iter().copied().max().unwrap_or(0) as usize
    }

    /// Fixes `pos` to `value`. Returns `false`, leaving the state untouched,
    /// when `pos` is already assigned or `value` is not in its domain.
    pub fn assign(&mut self, model: &Model, pos: usize, value: Symbol) -> bool {
        self.assign_indexed(model.index(), pos, value)
    }

    pub(crate) fn assign_indexed(&mut self, index: &ColumnIndex, pos: usize, value: Symbol) -> bool {
        let dom = self.domains[pos];
        if self.assignment[pos].is_some() || !dom.contains(value) {
            return false;
        }
        for s in 0..index.symbols {
            if s == value.index() {
                continue;
            }
            let in_domain = dom.contains(Symbol::from_index(s));
            for &i in index.members(pos, s) {
                let i = i as usize;
                self.mismatches[i] += 1;
                if !in_domain {
                    self.forced[i] -= 1;
                }
            }
        }
        self.domains[pos] = SymbolSet::singleton(value);
        self.assignment[pos] = Some(value);
        self.depth += 1;
        true
    }

    /// Forward checking against `cap`, the largest distance any input string
    /// may end up at. Fails when some string's lower bound exceeds `cap`.
    /// A string whose bound equals `cap` cannot absorb another mismatch, so
    /// every unassigned position still allowing its symbol is narrowed to
    /// that symbol; this repeats until nothing changes.
    pub fn propagate(&mut self, model: &Model, cap: usize) -> Propagation {
        self.propagate_indexed(model.index(), cap)
    }

    pub(crate) fn propagate_indexed(&mut self, index: &ColumnIndex, cap: usize) -> Propagation {
        let cap = cap as u32;
        loop {
            let mut changed = false;
            for i in 0..index.count {
                let bound = self.mismatches[i] + self.forced[i];
                if bound > cap {
                    return Propagation::Fail;
                }
                if bound < cap {
                    continue;
                }
                for j in 0..index.len {
                    if self.assignment[j].is_some() {
                        continue;
                    }
                    let keep = Symbol::from_index(index.cell(j, i));
                    let dom = self.domains[j];
                    if dom.len() < 2 || !dom.contains(keep) {
                        continue;
                    }
                    for r in dom.difference(SymbolSet::singleton(keep)).iter() {
                        for &k in index.members(j, r.index()) {
                            self.forced[k as usize] += 1;
                        }
                    }
                    self.domains[j] = SymbolSet::singleton(keep);
                    changed = true;
                }
            }
            if !changed {
                return Propagation::Ok;
            }
        }
    }
}
