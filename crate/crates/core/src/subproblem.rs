//! Self-contained units of search work and how to divide them.
//!
//! A subproblem's region is the set of complete assignments over its domains
//! that its frontier has not yet ruled explored. Splitting partitions that
//! region into disjoint children whose union is exactly the parent's region.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::alphabet::Symbol;
use crate::error::{Error, Result};
use crate::metrics::BoundInterval;
use crate::model::{build_model, DomainMode, Heuristic, Mode, Model};
use crate::pwm::{build_pwm, pwm_value_order, pwm_variable_order, Pwm, TieBreak};
use crate::search::{Frontier, Search};
use crate::strings::StringSet;
use crate::symbols::SymbolSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subproblem {
    pub id: String,
    pub strings: StringSet,
    pub domains: Vec<SymbolSet>,
    pub bounds: BoundInterval,
    pub mode: Mode,
    pub heuristic: Heuristic,
    pub tie_break: TieBreak,
    pub root_sac: bool,
    pub frontier: Frontier,
    /// Best string known when optimising; only strictly closer ones are sought.
    pub incumbent: Option<Vec<Symbol>>,
    /// Enumeration results already found inside this region.
    pub solutions: Vec<Vec<Symbol>>,
    /// Nodes spent on this region so far.
    pub nodes: u64,
}

impl Subproblem {
    /// The whole search space of `model`, unstarted.
    pub fn root(id: impl Into<String>, model: &Model) -> Self {
        Subproblem {
            id: id.into(),
            strings: model.strings().clone(),
            domains: model.domains().to_vec(),
            bounds: model.bounds(),
            mode: model.mode(),
            heuristic: model.heuristic(),
            tie_break: model.tie_break(),
            root_sac: model.root_sac(),
            frontier: Frontier::default(),
            incumbent: None,
            solutions: Vec::new(),
            nodes: 0,
        }
    }

    pub fn model(&self) -> Result<Model> {
        Ok(build_model(self.strings.clone(), self.mode, self.heuristic, DomainMode::Unrestricted)?
            .with_domains(self.domains.clone())?
            .with_bounds(self.bounds)?
            .with_tie_break(self.tie_break)
            .with_root_sac(self.root_sac))
    }

    pub fn validate(&self) -> Result<()> {
        let model = self.model()?;
        BoundInterval::new(self.bounds.low(), self.bounds.high(), self.strings.len())?;
        self.frontier.validate(model.domains())?;
        let len = self.strings.len();
        let alphabet = self.strings.alphabet();
        let bad_row = |r: &Vec<Symbol>| r.len() != len || r.iter().any(|&s| !alphabet.contains(s));
        if self.incumbent.as_ref().is_some_and(bad_row) || self.solutions.iter().any(bad_row) {
            return Err(Error::InvalidFrontier(format!("{}: malformed witness", self.id)));
        }
        Ok(())
    }

    pub fn is_unstarted(&self) -> bool {
        self.frontier.is_empty()
    }

    /// Opens a search positioned at this subproblem's frontier.
    pub fn search<'m>(&self, model: &'m Model) -> Result<Search<'m>> {
        Search::resume(model, &self.frontier, self.incumbent.as_deref())
    }

    /// Folds the progress of an interrupted `search` back into the subproblem.
    pub fn record(&mut self, search: &mut Search<'_>, nodes_before: u64) {
        self.frontier = search.frontier();
        self.nodes = nodes_before + search.nodes();
        if let Some((_, w)) = search.incumbent() {
            self.incumbent = Some(w.to_vec());
        }
        self.solutions.extend(search.take_solutions());
    }

    /// Partitions the unexplored region into at most `k` disjoint children.
    ///
    /// The split happens at the shallowest depth of the frontier that still
    /// has untried values. Its units are the in-progress subtree (kept with
    /// the deeper frontier) followed by the untried values in value order;
    /// they are dealt into contiguous, near-equal groups. When the frontier
    /// has no such depth the region is a single subtree, which is split at
    /// the first position (in variable order) with two or more values left.
    /// A region that is one leaf comes back as a single child.
    pub fn split(&self, k: usize) -> Vec<Subproblem> {
        let k = k.max(1);
        let pwm = build_pwm(&self.strings);
        let order = |pos: usize| value_order(&pwm, self.heuristic, self.tie_break, pos, self.domains[pos]);
        let levels = &self.frontier.levels;

        for (depth, lvl) in levels.iter().enumerate() {
            let open: Vec<Symbol> = order(lvl.pos)
                .into_iter()
                .filter(|&v| v != lvl.value && !lvl.exhausted.contains(v))
                .collect();
            let fixed = self.fixed_prefix(depth);
            if depth + 1 == levels.len() {
                let mut units = alloc::vec![lvl.value];
                units.extend(open);
                if units.len() >= 2 {
                    return self.children_at(fixed, lvl.pos, &units, k);
                }
            } else if !open.is_empty() {
                // unit 0 is the in-progress subtree of lvl.value
                let groups = partition(open.len() + 1, k);
                let mut children = Vec::with_capacity(groups.len());
                let mut first = self.child(0, fixed.clone(), Frontier {
                    levels: levels.clone(),
                });
                let head: SymbolSet = open[..groups[0] - 1].iter().copied().collect();
                first.domains[lvl.pos] = head.union(SymbolSet::singleton(lvl.value));
                for l in &mut first.frontier.levels[..=depth] {
                    l.exhausted = SymbolSet::EMPTY;
                }
                first.incumbent.clone_from(&self.incumbent);
                children.push(first);
                let mut start = groups[0] - 1;
                for (i, &size) in groups.iter().enumerate().skip(1) {
                    let mut domains = fixed.clone();
                    domains[lvl.pos] = open[start..start + size].iter().copied().collect();
                    start += size;
                    children.push(self.child(i, domains, Frontier::default()));
                }
                return children;
            }
        }

        let fixed = self.fixed_prefix(levels.len());
        let free = |j: &usize| fixed[*j].len() >= 2;
        let pos = match self.heuristic {
            Heuristic::Pwm => pwm_variable_order(&pwm, self.tie_break).into_iter().find(free),
            Heuristic::Sdf => {
                let ranks = self.tie_break.ranks(fixed.len(), 0);
                (0..fixed.len()).filter(free).min_by_key(|&j| (fixed[j].len(), ranks[j]))
            }
        };
        let Some(pos) = pos else {
            return alloc::vec![self.child(0, fixed, Frontier::default())];
        };
        let units = value_order(&pwm, self.heuristic, self.tie_break, pos, fixed[pos]);
        self.children_at(fixed, pos, &units, k)
    }

    /// Domains with the first `depth` frontier levels pinned to their values.
    fn fixed_prefix(&self, depth: usize) -> Vec<SymbolSet> {
        let mut d = self.domains.clone();
        for lvl in &self.frontier.levels[..depth] {
            d[lvl.pos] = SymbolSet::singleton(lvl.value);
        }
        d
    }

    fn children_at(&self, fixed: Vec<SymbolSet>, pos: usize, units: &[Symbol], k: usize) -> Vec<Subproblem> {
        let mut start = 0;
        partition(units.len(), k)
            .into_iter()
            .enumerate()
            .map(|(i, size)| {
                let mut domains = fixed.clone();
                domains[pos] = units[start..start + size].iter().copied().collect();
                start += size;
                self.child(i, domains, Frontier::default())
            })
            .collect()
    }

    fn child(&self, i: usize, domains: Vec<SymbolSet>, frontier: Frontier) -> Subproblem {
        Subproblem {
            id: format!("{}.{}", self.id, i + 1),
            strings: self.strings.clone(),
            domains,
            bounds: self.bounds,
            mode: self.mode,
            heuristic: self.heuristic,
            tie_break: self.tie_break,
            root_sac: self.root_sac,
            frontier,
            incumbent: self.incumbent.clone(),
            solutions: Vec::new(),
            nodes: 0,
        }
    }
}

/// Splits the region left by `search` over `sub`; empty when the search is done.
pub fn split_search(sub: &Subproblem, search: &mut Search<'_>, k: usize) -> Vec<Subproblem> {
    if search.is_done() {
        return Vec::new();
    }
    let mut s = sub.clone();
    s.record(search, sub.nodes);
    s.split(k)
}

fn value_order(pwm: &Pwm, h: Heuristic, tie: TieBreak, pos: usize, domain: SymbolSet) -> Vec<Symbol> {
    match h {
        Heuristic::Pwm => pwm_value_order(pwm, pos, domain, tie),
        Heuristic::Sdf => domain.iter().collect(),
    }
}

/// Sizes of `min(k, n)` contiguous groups covering `n` items, larger first.
fn partition(n: usize, k: usize) -> Vec<usize> {
    let g = k.min(n).max(1);
    (0..g).map(|i| n / g + usize::from(i < n % g)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{encode_strings, Alphabet, Limits, NoClock};

    fn model(rows: &[&str], mode: Mode, dm: DomainMode) -> Model {
        let s = encode_strings(rows, &Alphabet::dna()).unwrap();
        build_model(s, mode, Heuristic::Pwm, dm).unwrap()
    }

    #[test]
    fn partition_sizes() {
        assert_eq!(partition(5, 2), [3, 2]);
        assert_eq!(partition(2, 4), [1, 1]);
        assert_eq!(partition(6, 3), [2, 2, 2]);
    }

    #[test]
    fn root_split_on_first_position() {
        let m = model(&["AAA", "TTT"], Mode::Optimize, DomainMode::Restricted);
        let root = Subproblem::root("root", &m);
        let kids = root.split(2);
        let a = SymbolSet::singleton(Alphabet::dna().encode('A').unwrap());
        let t = SymbolSet::singleton(Alphabet::dna().encode('T').unwrap());
        assert_eq!(kids.len(), 2);
        assert_eq!(kids[0].domains[0], a);
        assert_eq!(kids[1].domains[0], t);
        assert_eq!(kids[0].id, "root.1");
        assert_eq!(&kids[0].domains[1..], &root.domains[1..]);
    }

    #[test]
    fn k_larger_than_open_values() {
        let m = model(&["AAA", "TTT"], Mode::Enumerate(2), DomainMode::Restricted);
        assert_eq!(Subproblem::root("r", &m).split(5).len(), 2);
        let m = model(&["AAA", "TTT"], Mode::Enumerate(2), DomainMode::Unrestricted);
        assert_eq!(Subproblem::root("r", &m).split(3).len(), 3);
    }

    #[test]
    fn single_leaf_does_not_split() {
        let m = model(&["ACG"], Mode::Enumerate(0), DomainMode::Restricted);
        let kids = Subproblem::root("r", &m).split(4);
        assert_eq!(kids.len(), 1);
    }

    #[test]
    fn finished_search_splits_into_nothing() {
        let m = model(&["AAA", "TTT"], Mode::Enumerate(2), DomainMode::Restricted);
        let sub = Subproblem::root("r", &m);
        let mut s = sub.search(&m).unwrap();
        s.run(&Limits::unlimited(), &mut NoClock);
        assert!(split_search(&sub, &mut s, 2).is_empty());
    }

    #[test]
    fn interrupted_split_children_validate() {
        let m = model(&["ACGTAC", "TTGACA", "GCGTTA"], Mode::Enumerate(3), DomainMode::Unrestricted);
        let sub = Subproblem::root("r", &m);
        let mut s = sub.search(&m).unwrap();
        s.run(&Limits::nodes(7), &mut NoClock);
        let kids = split_search(&sub, &mut s, 3);
        assert_eq!(kids.len(), 3);
        for k in &kids {
            k.validate().unwrap();
        }
    }
}
