use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use closest_core::{build_model, solve_min, Alphabet, DomainMode, Heuristic, Limits, Mode, Status};

use super::generate_instance;
use crate::clock::{us_to_ms, Stopwatch};

pub const BENCH_HEADER: [&str; 11] = [
    "instance_id",
    "N",
    "L",
    "seed",
    "heuristic",
    "mode",
    "status",
    "best_d",
    "nodes",
    "wall_ms",
    "incumbent_ms",
];

/// One benchmark measurement. Each run yields two rows: `to-optimal`
/// (work until the optimum was first found) and `certified` (until proven).
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub instance_id: String,
    pub n: usize,
    pub l: usize,
    pub seed: u64,
    pub heuristic: Heuristic,
    pub mode: String,
    pub status: Status,
    pub best_d: Option<usize>,
    pub nodes: u64,
    pub wall_ms: f64,
    /// Time of each incumbent improvement.
    pub incumbent_ms: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub ns: Vec<usize>,
    pub ls: Vec<usize>,
    pub seeds: u64,
    pub base_seed: u64,
    pub heuristics: Vec<Heuristic>,
    pub jobs: usize,
    pub node_limit: Option<u64>,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            ns: vec![3, 4, 5, 6],
            ls: vec![10, 15],
            seeds: 10,
            base_seed: 0,
            heuristics: vec![Heuristic::Pwm, Heuristic::Sdf],
            jobs: 1,
            node_limit: None,
        }
    }
}

impl BenchConfig {
    /// Generator seed for the `idx`-th instance of an `n` by `l` cell.
    pub fn instance_seed(&self, n: usize, l: usize, idx: u64) -> u64 {
        self.base_seed
            .wrapping_mul(1_000_000)
            .wrapping_add(n as u64 * 10_000 + l as u64 * 100 + idx)
    }
}

/// Runs the grid, `jobs` instances at a time. Rows come back in grid order
/// regardless of `jobs`.
pub fn run_bench(cfg: &BenchConfig) -> crate::Result<Vec<BenchRow>> {
    let mut tasks = Vec::new();
    for &n in &cfg.ns {
        for &l in &cfg.ls {
            for idx in 0..cfg.seeds {
                for &h in &cfg.heuristics {
                    tasks.push((n, l, idx, h));
                }
            }
        }
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<crate::Result<[BenchRow; 2]>>>> =
        Mutex::new(std::iter::repeat_with(|| None).take(tasks.len()).collect());
    std::thread::scope(|scope| {
        for _ in 0..cfg.jobs.max(1) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(n, l, idx, h)) = tasks.get(i) else { break };
                let out = bench_one(cfg, n, l, idx, h);
                slots.lock().unwrap()[i] = Some(out);
            });
        }
    });
    let mut rows = Vec::with_capacity(tasks.len() * 2);
    for slot in slots.into_inner().unwrap() {
        rows.extend(slot.expect("every task ran")?);
    }
    Ok(rows)
}

fn bench_one(cfg: &BenchConfig, n: usize, l: usize, idx: u64, h: Heuristic) -> crate::Result<[BenchRow; 2]> {
    let alphabet = Alphabet::dna();
    let seed = cfg.instance_seed(n, l, idx);
    let set = generate_instance(n, l, &alphabet, seed).to_string_set(&alphabet)?;
    let model = build_model(set, Mode::Optimize, h, DomainMode::Restricted)?;
    let limits = Limits {
        nodes: cfg.node_limit,
        ..Limits::default()
    };
    let mut clock = Stopwatch::start();
    let res = solve_min(&model, &limits, &mut clock)?;
    let incumbent_ms: Vec<f64> = res.trace.iter().map(|t| us_to_ms(t.elapsed_us)).collect();
    let last = res.trace.last();
    let row = |mode: &str, nodes: u64, us: u64| BenchRow {
        instance_id: format!("n{n}-l{l}-s{idx}"),
        n,
        l,
        seed,
        heuristic: h,
        mode: mode.to_string(),
        status: res.status,
        best_d: res.best_d,
        nodes,
        wall_ms: us_to_ms(us),
        incumbent_ms: incumbent_ms.clone(),
    };
    Ok([
        row("to-optimal", last.map_or(0, |t| t.nodes), last.map_or(0, |t| t.elapsed_us)),
        row("certified", res.stats.nodes, res.stats.elapsed_us),
    ])
}

pub fn write_bench_csv<W: std::io::Write>(out: W, rows: &[BenchRow]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(BENCH_HEADER)?;
    for r in rows {
        let trace = r.incumbent_ms.iter().map(|t| format!("{t:.3}")).collect::<Vec<_>>().join(";");
        w.write_record([
            r.instance_id.clone(),
            r.n.to_string(),
            r.l.to_string(),
            r.seed.to_string(),
            r.heuristic.to_string(),
            r.mode.clone(),
            r.status.to_string(),
            r.best_d.map_or_else(String::new, |d| d.to_string()),
            r.nodes.to_string(),
            format!("{:.3}", r.wall_ms),
            trace,
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_bench_csv<R: std::io::Read>(input: R) -> Result<Vec<BenchRow>, String> {
    let mut rd = csv::Reader::from_reader(input);
    let header = rd.headers().map_err(|e| e.to_string())?.clone();
    if header.iter().ne(BENCH_HEADER) {
        return Err(format!("unexpected header: {header:?}"));
    }
    let mut rows = Vec::new();
    for rec in rd.records() {
        let rec = rec.map_err(|e| e.to_string())?;
        let f = |i: usize| rec.get(i).unwrap_or_default();
        let num = |i: usize| f(i).parse::<f64>().map_err(|e| format!("column {}: {e}", BENCH_HEADER[i]));
        let int = |i: usize| f(i).parse::<u64>().map_err(|e| format!("column {}: {e}", BENCH_HEADER[i]));
        rows.push(BenchRow {
            instance_id: f(0).to_string(),
            n: int(1)? as usize,
            l: int(2)? as usize,
            seed: int(3)?,
            heuristic: f(4).parse().map_err(|_| format!("bad heuristic {:?}", f(4)))?,
            mode: f(5).to_string(),
            status: f(6).parse().map_err(|_| format!("bad status {:?}", f(6)))?,
            best_d: if f(7).is_empty() { None } else { Some(int(7)? as usize) },
            nodes: int(8)?,
            wall_ms: num(9)?,
            incumbent_ms: f(10)
                .split(';')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<f64>().map_err(|e| e.to_string()))
                .collect::<Result<_, _>>()?,
        });
    }
    Ok(rows)
}
