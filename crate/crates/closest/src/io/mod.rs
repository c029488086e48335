//! Instance ingestion and benchmark output.

mod bench;
mod instance;

pub use bench::{read_bench_csv, run_bench, write_bench_csv, BenchConfig, BenchRow, BENCH_HEADER};
pub use instance::{
    generate_instance, parse_instance, write_instance, Format, FormatHint, InstanceDoc, ParseError,
};
