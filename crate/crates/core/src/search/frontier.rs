use alloc::format;
use alloc::vec::Vec;

use crate::alphabet::Symbol;
use crate::error::{Error, Result};
use crate::symbols::SymbolSet;

/// One depth of a partially explored search tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FrontierLevel {
    /// Zero-based position branched on at this depth.
    pub pos: usize,
    /// On every level but the last, the value whose subtree is in progress.
    /// On the last level, the value to try next.
    pub value: Symbol,
    /// Values whose subtrees are fully explored.
    pub exhausted: SymbolSet,
}

/// The left fringe of a search: enough to resume exactly where it stopped.
/// An empty frontier denotes a search that has not started.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Frontier {
    pub levels: Vec<FrontierLevel>,
}

impl Frontier {
    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// Checks the frontier against per-position domains.
    pub fn validate(&self, domains: &[SymbolSet]) -> Result<()> {
        let mut seen = alloc::vec![false; domains.len()];
        for (depth, lvl) in self.levels.iter().enumerate() {
            let err = |what: &str| {
                Err(Error::InvalidFrontier(format!(
                    "depth {depth}, position {}: {what}",
                    lvl.pos + 1
                )))
            };
            if lvl.pos >= domains.len() {
                return err("position out of range");
            }
            if core::mem::replace(&mut seen[lvl.pos], true) {
                return err("position repeated");
            }
            let dom = domains[lvl.pos];
            if !dom.contains(lvl.value) {
                return err("value outside domain");
            }
            if !lvl.exhausted.is_subset(dom) {
                return err("exhausted values outside domain");
            }
            if lvl.exhausted.contains(lvl.value) {
                return err("current value already exhausted");
            }
        }
        Ok(())
    }
}
