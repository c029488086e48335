use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::alphabet::Symbol;
use crate::model::Mode;

use super::Frontier;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    /// Optimum proven, witness found, or enumeration completed.
    Solved,
    /// No string within the distance exists in the searched region.
    Unsat,
    /// Stopped by the time cap; resumable from the frontier.
    Timeout,
    /// Stopped by the node cap; resumable from the frontier.
    ResourceLimit,
    /// Stopped because externally supplied bounds made the search moot.
    Superseded,
}

impl Status {
    pub fn is_interrupted(self) -> bool {
        matches!(self, Status::Timeout | Status::ResourceLimit)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Solved => "solved",
            Status::Unsat => "unsat",
            Status::Timeout => "timeout",
            Status::ResourceLimit => "resource-limit",
            Status::Superseded => "superseded",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Status {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        Ok(match s {
            "solved" => Status::Solved,
            "unsat" => Status::Unsat,
            "timeout" => Status::Timeout,
            "resource-limit" => Status::ResourceLimit,
            "superseded" => Status::Superseded,
            _ => return Err(()),
        })
    }
}

/// An incumbent improvement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TracePoint {
    pub elapsed_us: u64,
    pub nodes: u64,
    pub d: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Stats {
    pub nodes: u64,
    pub solutions: u64,
    pub elapsed_us: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub mode: Mode,
    pub status: Status,
    pub best_d: Option<usize>,
    pub witnesses: Vec<Vec<Symbol>>,
    pub stats: Stats,
    pub trace: Vec<TracePoint>,
    /// Present when the search was interrupted.
    pub frontier: Option<Frontier>,
}
