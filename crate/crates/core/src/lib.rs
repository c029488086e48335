//! Exact closest string search.
//!
//! Given `N` equal-length strings over a small alphabet, a closest string is
//! any string minimising the largest Hamming distance to the inputs. This
//! crate holds the allocation-only algorithmic core: Hamming metrics and the
//! radius bounds derived from them, position weight matrices and the search
//! orderings built from them, the constraint model, a resumable
//! forward-checking backtracking engine (optimisation, fixed-distance decision
//! and exhaustive enumeration), and the frontier splitting used to farm a
//! search out to independent workers.
//!
//! Everything here is `no_std`; clocks, files and queues live in the
//! companion `closest` crate.
#![no_std]
#![deny(missing_debug_implementations, rust_2018_idioms)]

extern crate alloc;

mod alphabet;
mod error;
pub mod metrics;
pub mod model;
pub mod pwm;
pub mod search;
mod strings;
pub mod subproblem;
mod symbols;

pub use alphabet::{Alphabet, Symbol};
pub use error::{Error, Result};
pub use metrics::{
    distance_lower_bound, hamming_diameter, hamming_distance, max_distance, position_domains,
    BoundInterval,
};
pub use model::{build_model, DomainMode, Heuristic, Mode, Model};
pub use pwm::{build_pwm, pwm_value_order, pwm_variable_order, Pwm, TieBreak};
pub use search::{
    decide, enumerate_all, root_sac_probe, solve_min, Control, Frontier, FrontierLevel, Limits,
    NoClock, Propagation, Search, SearchState, SolveResult, Stats, Status, TracePoint,
};
pub use strings::{encode_strings, StringSet};
pub use subproblem::Subproblem;
pub use symbols::SymbolSet;
