use alloc::vec::Vec;

use crate::alphabet::Symbol;
use crate::error::{Error, Result};
use crate::metrics::{max_distance, BoundInterval};
use crate::model::{Heuristic, Mode, Model};
use crate::pwm::{pwm_value_order, pwm_variable_order};
use crate::symbols::SymbolSet;

use super::{ColumnIndex, Frontier, FrontierLevel, Propagation, SearchState, SolveResult, Stats, Status, TracePoint};

/// Hooks a running search calls back into. Every method has a no-op default.
pub trait Control {
    /// Microseconds since some fixed origin; only differences are used.
    fn elapsed_us(&mut self) -> u64 {
        0
    }

    /// Globally proven bounds, if any. `low`: no string is within `low - 1`;
    /// `high`: some string is within `high`. Polled between node batches.
    fn poll_bounds(&mut self) -> Option<BoundInterval> {
        None
    }

    /// Called on every incumbent improvement in optimisation mode.
    fn on_incumbent(&mut self, _d: usize, _witness: &[Symbol]) {}
}

/// A [`Control`] without a clock or external bounds.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoClock;

impl Control for NoClock {}

/// Per-call budgets for [`Search::run`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub nodes: Option<u64>,
    pub time_us: Option<u64>,
    /// Nodes between calls to [`Control::poll_bounds`].
    pub poll_interval: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            nodes: None,
            time_us: None,
            poll_interval: 10_000,
        }
    }
}

impl Limits {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn nodes(n: u64) -> Self {
        Limits {
            nodes: Some(n),
            ..Self::default()
        }
    }
}

const TIME_CHECK_MASK: u64 = 63;

#[derive(Debug, Clone)]
struct Level {
    pos: usize,
    value: Symbol,
    exhausted: SymbolSet,
    /// Domain of `pos` at this node when the level was opened.
    candidates: SymbolSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Phase {
    Fresh,
    Running,
    Done(Status),
}

/// A resumable depth-first search over one model.
///
/// Nodes are assignment attempts: every value tried at every depth counts
/// once, whether or not propagation then fails.
#[derive(Debug, Clone)]
pub struct Search<'m> {
    model: &'m Model,
    var_order: Vec<usize>,
    pos_rank: Vec<u32>,
    value_order: Vec<Vec<Symbol>>,
    /// Largest distance a solution may have.
    cap: usize,
    /// Proven lower bound; an incumbent at this distance ends optimisation.
    low: usize,
    states: Vec<SearchState>,
    scratch: SearchState,
    levels: Vec<Level>,
    phase: Phase,
    start_from: Frontier,
    nodes: u64,
    incumbent: Option<(usize, Vec<Symbol>)>,
    solutions: Vec<Vec<Symbol>>,
    trace: Vec<TracePoint>,
    elapsed_us: u64,
}

impl<'m> Search<'m> {
    pub fn new(model: &'m Model) -> Self {
        let var_order = match model.heuristic() {
            Heuristic::Pwm => pwm_variable_order(model.pwm(), model.tie_break()),
            Heuristic::Sdf => Vec::new(),
        };
        let all = model.strings().alphabet().full_set();
        let value_order = (0..model.len())
            .map(|j| match model.heuristic() {
                Heuristic::Pwm => pwm_value_order(model.pwm(), j, all, model.tie_break()),
                Heuristic::Sdf => all.iter().collect(),
            })
            .collect();
        let bounds = model.bounds();
        let (cap, low) = match model.mode() {
            Mode::Optimize => (bounds.high(), bounds.low()),
            Mode::Decide(d) | Mode::Enumerate(d) => (d, bounds.low()),
        };
        let scratch = SearchState::root(model);
        let mut search = Search {
            model,
            var_order,
            pos_rank: model.tie_break().ranks(model.len(), 0),
            value_order,
            cap,
            low,
            states: Vec::new(),
            scratch,
            levels: Vec::new(),
            phase: Phase::Fresh,
            start_from: Frontier::default(),
            nodes: 0,
            incumbent: None,
            solutions: Vec::new(),
            trace: Vec::new(),
            elapsed_us: 0,
        };
        if let Some(d) = model.mode().fixed_distance() {
            if d < low {
                // within d of everything is impossible below ceil(HD/2)
                search.phase = Phase::Done(Status::Unsat);
            }
        }
        search
    }

    /// Continues a search from `frontier`. In optimisation mode `incumbent`
    /// is the best string already known; only strictly closer ones are sought.
    pub fn resume(model: &'m Model, frontier: &Frontier, incumbent: Option<&[Symbol]>) -> Result<Self> {
        frontier.validate(model.domains())?;
        let mut search = Self::new(model);
        if let (Mode::Optimize, Some(w)) = (model.mode(), incumbent) {
            if w.len() != model.len() {
                return Err(Error::InvalidFrontier("incumbent has the wrong length".into()));
            }
            let d = max_distance(w, model.strings());
            search.incumbent = Some((d, w.to_vec()));
            search.lower_cap(d);
        }
        search.start_from = frontier.clone();
        Ok(search)
    }

    pub fn model(&self) -> &'m Model {
        self.model
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    pub fn status(&self) -> Option<Status> {
        match self.phase {
            Phase::Done(s) => Some(s),
            _ => None,
        }
    }

    pub fn is_done(&self) -> bool {
        matches!(self.phase, Phase::Done(_))
    }

    pub fn incumbent(&self) -> Option<(usize, &[Symbol])> {
        self.incumbent.as_ref().map(|(d, w)| (*d, w.as_slice()))
    }

    pub fn solutions(&self) -> &[Vec<Symbol>] {
        &self.solutions
    }

    /// Removes and returns the solutions collected so far.
    pub fn take_solutions(&mut self) -> Vec<Vec<Symbol>> {
        core::mem::take(&mut self.solutions)
    }

    pub fn trace(&self) -> &[TracePoint] {
        &self.trace
    }

    /// Where the search stands. Empty once the search is done.
    pub fn frontier(&self) -> Frontier {
        match self.phase {
            Phase::Fresh => self.start_from.clone(),
            Phase::Done(_) => Frontier::default(),
            Phase::Running => Frontier {
                levels: self
                    .levels
                    .iter()
                    .map(|l| FrontierLevel {
                        pos: l.pos,
                        value: l.value,
                        exhausted: l.exhausted,
                    })
                    .collect(),
            },
        }
    }

    fn index(&self) -> &'m ColumnIndex {
        self.model.index()
    }

    fn lower_cap(&mut self, incumbent: usize) {
        if incumbent <= self.low || incumbent == 0 {
            self.phase = Phase::Done(Status::Solved);
        } else {
            self.cap = self.cap.min(incumbent - 1);
        }
    }

    /// Runs until the search completes or a budget in `limits` runs out.
    pub fn run(&mut self, limits: &Limits, ctl: &mut dyn Control) -> Status {
        let started = ctl.elapsed_us();
        let mut run_nodes = 0u64;
        let poll = limits.poll_interval.max(1);
        loop {
            if let Phase::Done(status) = self.phase {
                self.elapsed_us = ctl.elapsed_us();
                return status;
            }
            if limits.nodes.is_some_and(|n| run_nodes >= n) {
                self.elapsed_us = ctl.elapsed_us();
                return Status::ResourceLimit;
            }
            if let Some(t) = limits.time_us {
                if run_nodes & TIME_CHECK_MASK == 0 {
                    let now = ctl.elapsed_us();
                    if now.saturating_sub(started) >= t {
                        self.elapsed_us = now;
                        return Status::Timeout;
                    }
                }
            }
            if run_nodes.is_multiple_of(poll) {
                if let Some(b) = ctl.poll_bounds() {
                    self.apply_bounds(b);
                    if self.is_done() {
                        continue;
                    }
                }
            }
            if self.phase == Phase::Fresh {
                self.start();
                continue;
            }
            run_nodes += 1;
            self.attempt(ctl);
        }
    }

    fn apply_bounds(&mut self, b: BoundInterval) {
        match self.model.mode() {
            Mode::Optimize => {
                self.low = self.low.max(b.low());
                if let Some((d, _)) = self.incumbent {
                    if d <= self.low {
                        self.phase = Phase::Done(Status::Solved);
                        return;
                    }
                }
                if b.high() == 0 || b.high() - 1 < self.low {
                    self.phase = Phase::Done(Status::Superseded);
                } else {
                    self.cap = self.cap.min(b.high() - 1);
                }
            }
            Mode::Decide(d) => {
                if d < b.low() {
                    self.phase = Phase::Done(Status::Unsat);
                } else if b.high() <= d {
                    self.phase = Phase::Done(Status::Superseded);
                }
            }
            Mode::Enumerate(_) => {}
        }
    }

    fn start(&mut self) {
        self.phase = Phase::Running;
        let index = self.index();
        let domains = if self.model.root_sac() {
            match sac_domains(index, self.model.domains(), self.cap) {
                Some(d) => d,
                None => return self.exhausted(),
            }
        } else {
            self.model.domains().to_vec()
        };
        let mut root = SearchState::with_domains(index, domains);
        if root.propagate_indexed(index, self.cap) == Propagation::Fail {
            return self.exhausted();
        }
        self.scratch = root.clone();
        self.states.clear();
        self.states.push(root);
        self.levels.clear();
        let frontier = core::mem::take(&mut self.start_from);
        if frontier.is_empty() {
            self.open_level(0);
        } else {
            self.replay(&frontier);
        }
    }

    /// Rebuilds the path of a frontier without counting nodes.
    fn replay(&mut self, frontier: &Frontier) {
        let index = self.index();
        let last = frontier.levels.len() - 1;
        for (k, fl) in frontier.levels.iter().enumerate() {
            self.levels.push(Level {
                pos: fl.pos,
                value: fl.value,
                exhausted: fl.exhausted,
                candidates: self.states[k].domain(fl.pos),
            });
            if k == last {
                return;
            }
            self.scratch.clone_from(&self.states[k]);
            let ok = self.scratch.assign_indexed(index, fl.pos, fl.value)
                && self.scratch.propagate_indexed(index, self.cap) == Propagation::Ok
                && !self.scratch.is_complete();
            if !ok {
                // tighter bounds since the frontier was written rule this branch out
                return self.advance(k);
            }
            self.push_state(k + 1);
        }
    }

    fn push_state(&mut self, k: usize) {
        if self.states.len() > k {
            self.states.truncate(k + 1);
            core::mem::swap(&mut self.states[k], &mut self.scratch);
        } else {
            self.states.push(self.scratch.clone());
        }
    }

    /// Opens level `k` on `states[k]`, which must be incomplete.
    fn open_level(&mut self, k: usize) {
        let state = &self.states[k];
        let pos = self.choose_position(state);
        let candidates = state.domain(pos);
        let value = self.value_order[pos]
            .iter()
            .copied()
            .find(|&v| candidates.contains(v))
            .expect("propagation leaves domains non-empty");
        self.levels.truncate(k);
        self.levels.push(Level {
            pos,
            value,
            exhausted: SymbolSet::EMPTY,
            candidates,
        });
    }

    fn choose_position(&self, state: &SearchState) -> usize {
        let free = |&j: &usize| state.assignment()[j].is_none();
        match self.model.heuristic() {
            Heuristic::Pwm => *self.var_order.iter().find(|j| free(j)).expect("incomplete state"),
            Heuristic::Sdf => (0..self.model.len())
                .filter(free)
                .min_by_key(|&j| (state.domain(j).len(), self.pos_rank[j]))
                .expect("incomplete state"),
        }
    }

    fn attempt(&mut self, ctl: &mut dyn Control) {
        self.nodes += 1;
        let index = self.index();
        let k = self.levels.len() - 1;
        let (pos, value) = (self.levels[k].pos, self.levels[k].value);
        self.scratch.clone_from(&self.states[k]);
        let ok = self.scratch.assign_indexed(index, pos, value)
            && self.scratch.propagate_indexed(index, self.cap) == Propagation::Ok;
        if !ok {
            return self.advance(k);
        }
        if self.scratch.is_complete() {
            self.leaf(ctl);
            if !self.is_done() {
                self.advance(k);
            }
            return;
        }
        self.push_state(k + 1);
        self.open_level(k + 1);
    }

    fn leaf(&mut self, ctl: &mut dyn Control) {
        let witness: Vec<Symbol> = self
            .scratch
            .assignment()
            .iter()
            .map(|s| s.expect("complete assignment"))
            .collect();
        let d = self.scratch.radius();
        match self.model.mode() {
            Mode::Optimize => {
                let elapsed_us = ctl.elapsed_us();
                ctl.on_incumbent(d, &witness);
                self.trace.push(TracePoint {
                    elapsed_us,
                    nodes: self.nodes,
                    d,
                });
                self.incumbent = Some((d, witness));
                self.lower_cap(d);
            }
            Mode::Decide(_) => {
                self.solutions.push(witness);
                self.phase = Phase::Done(Status::Solved);
            }
            Mode::Enumerate(_) => self.solutions.push(witness),
        }
    }

    /// Marks the current value of level `k` explored and moves to the next
    /// untried value, backtracking through exhausted levels.
    fn advance(&mut self, mut k: usize) {
        loop {
            let lvl = &mut self.levels[k];
            lvl.exhausted.insert(lvl.value);
            let next = self.value_order[lvl.pos]
                .iter()
                .copied()
                .find(|&v| lvl.candidates.contains(v) && !lvl.exhausted.contains(v));
            if let Some(v) = next {
                lvl.value = v;
                self.levels.truncate(k + 1);
                self.states.truncate(k + 1);
                return;
            }
            if k == 0 {
                self.levels.clear();
                return self.exhausted();
            }
            k -= 1;
        }
    }

    fn exhausted(&mut self) {
        let status = match self.model.mode() {
            Mode::Optimize if self.incumbent.is_some() => Status::Solved,
            Mode::Enumerate(_) if !self.solutions.is_empty() => Status::Solved,
            _ => Status::Unsat,
        };
        self.phase = Phase::Done(status);
    }

    /// Snapshot of the outcome so far. `status` is the value last returned by [`run`](Self::run).
    pub fn result(&self, status: Status) -> SolveResult {
        let mode = self.model.mode();
        let (best_d, witnesses) = match mode {
            Mode::Optimize => match &self.incumbent {
                Some((d, w)) => (Some(*d), alloc::vec![w.clone()]),
                None => (None, Vec::new()),
            },
            Mode::Decide(d) | Mode::Enumerate(d) => {
                ((!self.solutions.is_empty()).then_some(d), self.solutions.clone())
            }
        };
        SolveResult {
            mode,
            status,
            best_d,
            stats: Stats {
                nodes: self.nodes,
                solutions: witnesses.len() as u64,
                elapsed_us: self.elapsed_us,
            },
            witnesses,
            trace: self.trace.clone(),
            frontier: status.is_interrupted().then(|| self.frontier()),
        }
    }
}

/// Root singleton consistency: every value whose assignment fails
/// propagation straight away is dropped. `None` when a domain empties.
fn sac_domains(index: &ColumnIndex, domains: &[SymbolSet], cap: usize) -> Option<Vec<SymbolSet>> {
    let mut root = SearchState::with_domains(index, domains.to_vec());
    if root.propagate_indexed(index, cap) == Propagation::Fail {
        return None;
    }
    let mut out = domains.to_vec();
    for (pos, dom) in out.iter_mut().enumerate() {
        for v in dom.iter() {
            let mut probe = root.clone();
            let ok = probe.assign_indexed(index, pos, v) && probe.propagate_indexed(index, cap) == Propagation::Ok;
            if !ok {
                dom.remove(v);
            }
        }
        if dom.is_empty() {
            return None;
        }
    }
    Some(out)
}

/// Narrows the model's domains by a root singleton-consistency probe at the
/// mode's distance cap (the diameter when optimising).
pub fn root_sac_probe(model: &Model) -> Result<Model> {
    let cap = model.mode().fixed_distance().unwrap_or(model.bounds().high());
    match sac_domains(model.index(), model.domains(), cap) {
        Some(d) => model.clone().with_domains(d),
        None => Err(Error::Infeasible(cap)),
    }
}

fn run_to_result(model: &Model, limits: &Limits, ctl: &mut dyn Control) -> SolveResult {
    let mut search = Search::new(model);
    let status = search.run(limits, ctl);
    search.result(status)
}

/// Branch and bound on the largest distance. Each incumbent tightens the cap
/// in place; the search stops at an incumbent equal to the lower bound.
pub fn solve_min(model: &Model, limits: &Limits, ctl: &mut dyn Control) -> Result<SolveResult> {
    if model.mode() != Mode::Optimize {
        return Err(Error::ModeMismatch { expected: "optimize" });
    }
    Ok(run_to_result(model, limits, ctl))
}

/// Is there a string within the model's fixed distance of every input?
pub fn decide(model: &Model, limits: &Limits, ctl: &mut dyn Control) -> Result<SolveResult> {
    if !matches!(model.mode(), Mode::Decide(_)) {
        return Err(Error::ModeMismatch { expected: "decide" });
    }
    Ok(run_to_result(model, limits, ctl))
}

/// Every string over the model's domains within its fixed distance of every
/// input, in search order.
pub fn enumerate_all(model: &Model, limits: &Limits, ctl: &mut dyn Control) -> Result<SolveResult> {
    if !matches!(model.mode(), Mode::Enumerate(_)) {
        return Err(Error::ModeMismatch { expected: "enumerate" });
    }
    Ok(run_to_result(model, limits, ctl))
}
