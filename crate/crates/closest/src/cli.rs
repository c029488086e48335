//! The `closest` command line.
//!
//! Exit codes: 0 success, 1 no solution within the distance, 2 usage error,
//! 3 budget exhausted, 4 input or runtime error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use closest_core::{
    build_model, decide, enumerate_all, solve_min, Alphabet, DomainMode, Heuristic, Limits, Mode, Model, SolveResult,
    Status, StringSet, TieBreak,
};

use crate::clock::{us_to_ms, Stopwatch};
use crate::dist::{coordinate, serve, RunConfig, ServeOptions, WorkQueue, WorkerConfig};
use crate::io::{
    generate_instance, parse_instance, run_bench, write_bench_csv, write_instance, BenchConfig, Format, FormatHint,
};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNSAT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;
pub const EXIT_ERROR: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "closest", version, about = "Exact closest string search")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Find a string minimising the largest Hamming distance to the inputs.
    Solve {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        search: SearchArgs,
        /// Write incumbent improvements as `ms,d` lines here instead of stderr.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Is there a string within distance D of every input?
    Decide {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        d: usize,
    },
    /// List every string within distance D of every input.
    Enumerate {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        d: usize,
    },
    /// Generate a random instance with uniform, independent symbols.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = OutFormat::Plain)]
        format: OutFormat,
        #[arg(long, default_value = "ACGT")]
        alphabet: String,
    },
    /// Run both heuristics over a grid of random instances and write CSV.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [3usize, 4, 5, 6])]
        ns: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [10usize, 15])]
        ls: Vec<usize>,
        #[arg(long, default_value_t = 10)]
        seeds: u64,
        #[arg(long, default_value_t = 0)]
        base_seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        node_limit: Option<u64>,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimise with a distributed run over a queue directory.
    Coordinate {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        dist: DistArgs,
        /// In-process worker threads; 0 relies on external workers.
        #[arg(long, default_value_t = 2)]
        workers: usize,
        /// Overall time limit in seconds.
        #[arg(long)]
        time_limit: Option<f64>,
        #[arg(long, value_enum, default_value_t = HeuristicArg::Pwm)]
        heuristic: HeuristicArg,
        #[arg(long)]
        tie_seed: Option<u64>,
        /// Write the instance once and reference it from every unit.
        #[arg(long)]
        share_instance: bool,
    },
    /// Serve a queue directory until it halts.
    Worker {
        #[command(flatten)]
        dist: DistArgs,
        /// Exit after this many seconds without work.
        #[arg(long)]
        idle_exit: Option<f64>,
        #[arg(long)]
        max_units: Option<usize>,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Instance file, plain (one string per line) or FASTA.
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = InFormat::Auto)]
    format: InFormat,
    #[arg(long, default_value = "ACGT")]
    alphabet: String,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long, value_enum, default_value_t = HeuristicArg::Pwm)]
    heuristic: HeuristicArg,
    /// Search the whole alphabet at every position.
    #[arg(long)]
    unrestricted: bool,
    /// Break ordering ties with a seeded permutation.
    #[arg(long)]
    tie_seed: Option<u64>,
    #[arg(long)]
    node_limit: Option<u64>,
    /// Seconds.
    #[arg(long)]
    time_limit: Option<f64>,
    /// Prune root domains by singleton consistency first.
    #[arg(long)]
    root_sac: bool,
}

#[derive(Debug, Args)]
struct DistArgs {
    #[arg(long, env = "CLOSEST_QUEUE")]
    queue: PathBuf,
    /// Seconds per unit before it is split.
    #[arg(long, default_value_t = 1.0)]
    t_max: f64,
    /// Nodes per unit before it is split, instead of a time budget.
    #[arg(long)]
    unit_nodes: Option<u64>,
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value_t = 100_000)]
    checkpoint_nodes: u64,
}

impl DistArgs {
    fn worker_config(&self) -> WorkerConfig {
        WorkerConfig {
            t_max: if self.unit_nodes.is_some() { None } else { Some(secs(self.t_max)) },
            unit_nodes: self.unit_nodes,
            k: self.k,
            checkpoint_nodes: self.checkpoint_nodes,
            ..WorkerConfig::default()
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InFormat {
    Auto,
    Plain,
    Fasta,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutFormat {
    Plain,
    Fasta,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum HeuristicArg {
    Pwm,
    Sdf,
}

impl From<HeuristicArg> for Heuristic {
    fn from(h: HeuristicArg) -> Self {
        match h {
            HeuristicArg::Pwm => Heuristic::Pwm,
            HeuristicArg::Sdf => Heuristic::Sdf,
        }
    }
}

fn secs(s: f64) -> Duration {
    Duration::from_secs_f64(s.max(0.0))
}

fn tie_break(seed: Option<u64>) -> TieBreak {
    seed.map_or(TieBreak::LeastIndex, TieBreak::Seeded)
}

struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(EXIT_ERROR, e.to_string())
    }
}

impl From<closest_core::Error> for Failure {
    fn from(e: closest_core::Error) -> Self {
        Failure(EXIT_ERROR, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure(EXIT_ERROR, e.to_string())
    }
}

fn alphabet(s: &str) -> Result<Alphabet, Failure> {
    Alphabet::new(s.chars()).map_err(|e| Failure(EXIT_USAGE, format!("--alphabet: {e}")))
}

fn load(input: &InputArgs) -> Result<StringSet, Failure> {
    let alpha = alphabet(&input.alphabet)?;
    let text = std::fs::read_to_string(&input.file)
        .map_err(|e| Failure(EXIT_ERROR, format!("{}: {e}", input.file.display())))?;
    let hint = match input.format {
        InFormat::Auto => FormatHint::Auto,
        InFormat::Plain => FormatHint::Plain,
        InFormat::Fasta => FormatHint::Fasta,
    };
    let doc =
        parse_instance(&text, hint, &alpha).map_err(|e| Failure(EXIT_ERROR, format!("{}: {e}", input.file.display())))?;
    Ok(doc.to_string_set(&alpha)?)
}

fn model(set: StringSet, mode: Mode, s: &SearchArgs) -> Result<Model, Failure> {
    let dm = if s.unrestricted { DomainMode::Unrestricted } else { DomainMode::Restricted };
    Ok(build_model(set, mode, s.heuristic.into(), dm)
        .map_err(|e| Failure(EXIT_USAGE, e.to_string()))?
        .with_tie_break(tie_break(s.tie_seed))
        .with_root_sac(s.root_sac))
}

fn limits(s: &SearchArgs) -> Limits {
    Limits {
        nodes: s.node_limit,
        time_us: s.time_limit.map(|t| secs(t).as_micros() as u64),
        ..Limits::default()
    }
}

fn status_code(s: Status) -> i32 {
    match s {
        Status::Solved => EXIT_OK,
        Status::Unsat | Status::Superseded => EXIT_UNSAT,
        Status::Timeout | Status::ResourceLimit => EXIT_LIMIT,
    }
}

fn report_header(out: &mut dyn Write, set: &StringSet, r: &SolveResult) -> std::io::Result<()> {
    writeln!(out, "status={}", r.status)?;
    match r.best_d {
        Some(d) => writeln!(out, "d={d}")?,
        None => writeln!(out, "d=-")?,
    }
    if let (Mode::Optimize | Mode::Decide(_), Some(w)) = (r.mode, r.witnesses.first()) {
        writeln!(out, "string={}", set.decode(w))?;
    }
    Ok(())
}

fn exec(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match cli.cmd {
        Cmd::Solve { input, search, trace } => {
            let set = load(&input)?;
            let m = model(set.clone(), Mode::Optimize, &search)?;
            let m = if search.root_sac { closest_core::root_sac_probe(&m)? } else { m };
            let r = solve_min(&m, &limits(&search), &mut Stopwatch::start())?;
            report_header(out, &set, &r)?;
            writeln!(out, "nodes={}", r.stats.nodes)?;
            let lines: String = r.trace.iter().map(|t| format!("{:.3},{}\n", us_to_ms(t.elapsed_us), t.d)).collect();
            match trace {
                Some(p) => std::fs::write(&p, lines).map_err(|e| Failure(EXIT_ERROR, format!("{}: {e}", p.display())))?,
                None => write!(err, "{lines}")?,
            }
            writeln!(err, "elapsed_ms={:.3}", us_to_ms(r.stats.elapsed_us))?;
            Ok(status_code(r.status))
        }
        Cmd::Decide { input, search, d } => {
            let set = load(&input)?;
            let m = model(set.clone(), Mode::Decide(d), &search)?;
            let r = decide(&m, &limits(&search), &mut Stopwatch::start())?;
            report_header(out, &set, &r)?;
            writeln!(out, "nodes={}", r.stats.nodes)?;
            writeln!(err, "elapsed_ms={:.3}", us_to_ms(r.stats.elapsed_us))?;
            Ok(status_code(r.status))
        }
        Cmd::Enumerate { input, search, d } => {
            let set = load(&input)?;
            let m = model(set.clone(), Mode::Enumerate(d), &search)?;
            let r = enumerate_all(&m, &limits(&search), &mut Stopwatch::start())?;
            writeln!(out, "count={}", r.witnesses.len())?;
            for w in &r.witnesses {
                writeln!(out, "{}", set.decode(w))?;
            }
            writeln!(err, "status={}", r.status)?;
            writeln!(err, "nodes={}", r.stats.nodes)?;
            Ok(status_code(r.status))
        }
        Cmd::Gen {
            n,
            l,
            seed,
            format,
            alphabet: a,
        } => {
            if n == 0 || l == 0 {
                return Err(Failure(EXIT_USAGE, "--n and --l must be positive".into()));
            }
            let mut doc = generate_instance(n, l, &alphabet(&a)?, seed);
            if let OutFormat::Fasta = format {
                doc.format = Format::Fasta;
                doc.names = Some((1..=n).map(|i| format!("s{i}")).collect());
            }
            write!(out, "{}", write_instance(&doc))?;
            Ok(EXIT_OK)
        }
        Cmd::Bench {
            ns,
            ls,
            seeds,
            base_seed,
            jobs,
            node_limit,
            out: path,
        } => {
            let cfg = BenchConfig {
                ns,
                ls,
                seeds,
                base_seed,
                jobs,
                node_limit,
                ..BenchConfig::default()
            };
            let rows = run_bench(&cfg)?;
            let csv_err = |e: csv::Error| Failure(EXIT_ERROR, e.to_string());
            match path {
                Some(p) => {
                    let f = std::fs::File::create(&p).map_err(|e| Failure(EXIT_ERROR, format!("{}: {e}", p.display())))?;
                    write_bench_csv(f, &rows).map_err(csv_err)?;
                }
                None => write_bench_csv(&mut *out, &rows).map_err(csv_err)?,
            }
            for h in &cfg.heuristics {
                let mut nodes: Vec<u64> =
                    rows.iter().filter(|r| r.heuristic == *h && r.mode == "certified").map(|r| r.nodes).collect();
                nodes.sort_unstable();
                if let Some(m) = nodes.get(nodes.len() / 2) {
                    writeln!(err, "{h}: median certified nodes {m}")?;
                }
            }
            let limited = rows.iter().any(|r| r.status.is_interrupted());
            Ok(if limited { EXIT_LIMIT } else { EXIT_OK })
        }
        Cmd::Coordinate {
            input,
            dist,
            workers,
            time_limit,
            heuristic,
            tie_seed,
            share_instance,
        } => {
            let set = load(&input)?;
            let cfg = RunConfig {
                queue_dir: dist.queue.clone(),
                worker: dist.worker_config(),
                workers,
                heuristic: heuristic.into(),
                tie_break: tie_break(tie_seed),
                time_limit: time_limit.map(secs),
                share_instance,
                ..RunConfig::new(&dist.queue)
            };
            let r = coordinate(&set, &cfg)?;
            report_header(out, &set, &r)?;
            writeln!(err, "nodes={}", r.stats.nodes)?;
            writeln!(err, "elapsed_ms={:.3}", us_to_ms(r.stats.elapsed_us))?;
            Ok(status_code(r.status))
        }
        Cmd::Worker {
            dist,
            idle_exit,
            max_units,
        } => {
            let queue = WorkQueue::open(&dist.queue)?;
            let opts = ServeOptions {
                idle_exit: idle_exit.map(secs),
                max_units,
            };
            let n = serve(&queue, &dist.worker_config(), &opts)?;
            writeln!(err, "units={n}")?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (program name first) and runs the command. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match exec(cli, out, err) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}
