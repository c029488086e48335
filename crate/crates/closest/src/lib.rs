//! Instance formats, benchmarking, the file-based distributed solver and the
//! `closest` command line, built on `closest-core`.

pub mod cli;
pub mod clock;
pub mod dist;
mod error;
pub mod io;

pub use error::{Error, Result};
