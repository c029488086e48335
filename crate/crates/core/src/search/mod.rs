//! Backtracking search over the candidate-string positions.

mod engine;
mod frontier;
mod index;
mod result;
mod state;

pub use engine::{decide, enumerate_all, root_sac_probe, solve_min, Control, Limits, NoClock, Search};
pub use frontier::{Frontier, FrontierLevel};
pub(crate) use index::ColumnIndex;
pub use result::{SolveResult, Stats, Status, TracePoint};
pub use state::{Propagation, SearchState};
