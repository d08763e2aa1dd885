//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on usage errors (bad flags, bad input files,
//! invalid configuration), 2 when a threshold is not reached or a numerical
//! failure occurs.

use std::ffi::OsString;
use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use crate::harness::{
    export_csv, format_float, minimal_degree, robustness_run, run_sweep, table2, CsvRecord, Family, Method, Metric,
    NRange, TABLE2_EPSILONS,
};
use crate::interpolant::{InterpMethod, Interpolant};
use crate::lagrange::{barycentric_eval, classical_lagrange_eval, generic_barycentric_weights};
use crate::metrics::{Benchmark, Grid, DEFAULT_GRID_POINTS};
use crate::nodes::{ChebKind, IntervalMap, NodeSet, SampleSet};

/// Relative tolerance on node spacing for data files to count as equidistant.
pub const EQUIDISTANCE_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Parser)]
#[command(
    name = "swi",
    version,
    about = "Symmetric wave interpolation and baseline benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Number of equispaced evaluation points on [-1, 1] (odd, >= 3)
    #[arg(long, env = "SWI_GRID_POINTS", default_value_t = DEFAULT_GRID_POINTS)]
    pub grid_points: usize,

    /// Write output here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build one interpolant and evaluate it
    Interpolate(InterpolateArgs),
    /// Maximal and cumulative errors over a range of degrees
    Sweep(SweepArgs),
    /// Smallest degree whose family-best error drops below epsilon
    MinDegree(MinDegreeArgs),
    /// Minimal-degree table for all benchmarks, families, metrics and thresholds
    Table2(Table2Args),
    /// Deviation caused by rounding the sample data
    Robustness(RobustnessArgs),
    /// Cumulative error split into endpoint and central regions
    Partition(PartitionArgs),
}

#[derive(Debug, Args)]
struct InterpolateArgs {
    /// classical, bary, ci1, ci2, swi1 or swi2
    #[arg(long)]
    method: InterpMethod,
    /// Benchmark function id (1-10)
    #[arg(long, conflicts_with = "data", required_unless_present = "data")]
    function: Option<u8>,
    /// Two-column file of equidistant samples (x, y)
    #[arg(long)]
    data: Option<PathBuf>,
    /// Degree (required with --function; taken from the file with --data)
    #[arg(long)]
    n: Option<usize>,
    /// Interval a,b of the abscissae
    #[arg(long, value_parser = parse_interval)]
    interval: Option<(f64, f64)>,
    /// Query point (repeatable)
    #[arg(long, allow_negative_numbers = true)]
    at: Vec<f64>,
    /// Evaluate on the whole grid instead of --at points
    #[arg(long)]
    dense: bool,
    #[command(flatten)]
    config: RunConfig,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// Benchmark function id (1-10)
    #[arg(long)]
    function: u8,
    /// Methods: ci1, ci2, swi1, swi2, avg_ci, avg_swi, classical
    #[arg(long, value_delimiter = ',', default_values_t = [Method::Ci1, Method::Ci2, Method::Swi1, Method::Swi2])]
    method: Vec<Method>,
    /// Degrees as A..B[:step]
    #[arg(long, visible_alias = "n")]
    n_range: NRange,
    /// Also split the cumulative error into endpoint and central parts
    #[arg(long)]
    partition: bool,
    #[command(flatten)]
    config: RunConfig,
}

#[derive(Debug, Args)]
struct MinDegreeArgs {
    /// Benchmark function id (1-10)
    #[arg(long)]
    function: u8,
    /// ci or swi
    #[arg(long)]
    family: Family,
    /// max or cumulative
    #[arg(long)]
    metric: Metric,
    /// Thresholds (comma separated)
    #[arg(long, value_delimiter = ',', required = true)]
    epsilon: Vec<f64>,
    /// Largest degree to try
    #[arg(long, default_value_t = 1000)]
    n_max: usize,
    #[command(flatten)]
    config: RunConfig,
}

#[derive(Debug, Args)]
struct Table2Args {
    /// Benchmark ids (default: all ten)
    #[arg(long, value_delimiter = ',')]
    function: Vec<u8>,
    /// Thresholds (comma separated)
    #[arg(long, value_delimiter = ',', default_values_t = TABLE2_EPSILONS)]
    epsilon: Vec<f64>,
    /// Largest degree to try per cell
    #[arg(long, default_value_t = 1000)]
    n_max: usize,
    #[command(flatten)]
    config: RunConfig,
}

#[derive(Debug, Args)]
struct RobustnessArgs {
    /// Benchmark function id (1-10)
    #[arg(long)]
    function: u8,
    /// swi1 or swi2 (default: both)
    #[arg(long, value_delimiter = ',')]
    method: Vec<InterpMethod>,
    #[arg(long, default_value_t = 12)]
    n: usize,
    /// Significant digits kept in the sample data
    #[arg(long, default_value_t = 2)]
    digits: u32,
    #[command(flatten)]
    config: RunConfig,
}

#[derive(Debug, Args)]
struct PartitionArgs {
    /// Benchmark function id (1-10)
    #[arg(long)]
    function: u8,
    /// Methods: ci1, ci2, swi1, swi2, avg_ci, avg_swi
    #[arg(long, value_delimiter = ',', default_values_t = [Method::AvgCi, Method::AvgSwi])]
    method: Vec<Method>,
    /// Degrees as A..B[:step]
    #[arg(long, visible_alias = "n", default_value = "30..120")]
    n_range: NRange,
    #[command(flatten)]
    config: RunConfig,
}

fn parse_interval(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s.split_once(',').ok_or("expected a,b")?;
    let a: f64 = a.trim().parse().map_err(|_| format!("bad endpoint '{a}'"))?;
    let b: f64 = b.trim().parse().map_err(|_| format!("bad endpoint '{b}'"))?;
    IntervalMap::new(a, b).map_err(|e| e.to_string())?;
    Ok((a, b))
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Numerical(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Numerical(_) => 2,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotReached { .. } | Error::NonfiniteWeight { .. } => CliError::Numerical(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(format!("io: {e}"))
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `stdout` unless `--out` is given. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = e.print();
                return 1;
            }
            let _ = write!(stdout, "{}", e.render());
            return 0;
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(code) => code,
        Err(e) => {
            match &e {
                CliError::Usage(m) => eprintln!("error: {m}"),
                CliError::Numerical(m) => eprintln!("numerical error: {m}"),
            }
            e.code()
        }
    }
}

fn dispatch(command: Command, stdout: &mut dyn Write) -> Result<u8, CliError> {
    match command {
        Command::Interpolate(a) => cmd_interpolate(a, stdout),
        Command::Sweep(a) => cmd_sweep(a, stdout),
        Command::MinDegree(a) => cmd_min_degree(a, stdout),
        Command::Table2(a) => cmd_table2(a, stdout),
        Command::Robustness(a) => cmd_robustness(a, stdout),
        Command::Partition(a) => cmd_partition(a, stdout),
    }
}

impl RunConfig {
    pub fn grid(&self) -> Result<Grid, Error> {
        Grid::new(self.grid_points)
    }

    fn emit(
        &self,
        stdout: &mut dyn Write,
        body: impl FnOnce(&mut dyn Write) -> Result<(), Error>,
    ) -> Result<(), CliError> {
        match &self.out {
            Some(path) => {
                let mut w = BufWriter::new(File::create(path)?);
                body(&mut w)?;
                w.flush()?;
            }
            None => body(stdout)?,
        }
        Ok(())
    }
}

fn bench(id: u8) -> Result<Benchmark, CliError> {
    Ok(Benchmark::new(id)?)
}

fn write_csv<R: CsvRecord>(config: &RunConfig, stdout: &mut dyn Write, records: &[R]) -> Result<u8, CliError> {
    config.emit(stdout, |w| export_csv(records, w))?;
    Ok(0)
}

/// Samples read from a data file: ascending abscissae and their values.
#[derive(Debug, Clone, PartialEq)]
pub struct DataFile {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
}

impl DataFile {
    /// Two whitespace- or comma-separated columns; `#` starts a comment.
    pub fn parse(text: &str) -> Result<DataFile, String> {
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let cols: Vec<&str> = line
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .collect();
            let [x, y] = cols[..] else {
                return Err(format!("line {}: expected two columns", lineno + 1));
            };
            let parse = |s: &str| {
                s.parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| format!("line {}: bad number '{s}'", lineno + 1))
            };
            xs.push(parse(x)?);
            ys.push(parse(y)?);
        }
        if xs.len() < 2 {
            return Err("need at least two samples".into());
        }
        if xs.windows(2).any(|w| w[0] >= w[1]) {
            return Err("abscissae must be strictly ascending".into());
        }
        Ok(DataFile { xs, ys })
    }

    pub fn read(path: &Path) -> Result<DataFile, String> {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        Self::parse(&text)
    }

    /// Checks that every spacing is within the relative tolerance of the mean spacing.
    pub fn check_equidistant(&self) -> Result<(), String> {
        let n = self.xs.len() - 1;
        let h = (self.xs[n] - self.xs[0]) / n as f64;
        for (i, w) in self.xs.windows(2).enumerate() {
            let dev = ((w[1] - w[0]) - h).abs() / h;
            if dev > EQUIDISTANCE_TOLERANCE {
                return Err(format!(
                    "abscissae are not equidistant: spacing {} deviates from {} by {:.3e} (relative) at row {}",
                    w[1] - w[0],
                    h,
                    dev,
                    i + 1
                ));
            }
        }
        Ok(())
    }
}

/// Evaluator on the unit interval for either input mode.
enum Unit {
    Built(Interpolant),
    /// Classical or barycentric Lagrange on user-supplied nodes.
    Raw {
        method: InterpMethod,
        nodes: Vec<f64>,
        values: Vec<f64>,
    },
}

impl Unit {
    fn eval(&self, x: f64) -> Result<f64, Error> {
        match self {
            Unit::Built(p) => p.eval(x),
            Unit::Raw { method, nodes, values } => match method {
                InterpMethod::Classical => classical_lagrange_eval(nodes, values, x),
                _ => Ok(barycentric_eval(nodes, values, &generic_barycentric_weights(nodes)?, x)),
            },
        }
    }
}

fn cmd_interpolate(a: InterpolateArgs, stdout: &mut dyn Write) -> Result<u8, CliError> {
    let grid = a.config.grid()?;
    let (map, unit) = if let Some(path) = &a.data {
        let data = DataFile::read(path).map_err(CliError::Usage)?;
        let n = data.xs.len() - 1;
        if a.n.is_some_and(|k| k != n) {
            return Err(CliError::Usage(format!(
                "--n does not match the {} samples in the data file",
                n + 1
            )));
        }
        let (lo, hi) = (data.xs[0], data.xs[n]);
        if let Some((ia, ib)) = a.interval {
            let tol = EQUIDISTANCE_TOLERANCE * (hi - lo);
            if (ia - lo).abs() > tol || (ib - hi).abs() > tol {
                return Err(CliError::Usage(format!(
                    "--interval {ia},{ib} does not match the data range [{lo}, {hi}]"
                )));
            }
        }
        let map = IntervalMap::new(lo, hi)?;
        let unit = match a.method {
            InterpMethod::Ci1 | InterpMethod::Ci2 => {
                return Err(CliError::Usage(
                    "Chebyshev interpolation needs samples at Chebyshev nodes; use classical, bary, swi1 or swi2 with --data"
                        .into(),
                ));
            }
            InterpMethod::Classical | InterpMethod::Barycentric => Unit::Raw {
                method: a.method,
                nodes: data.xs.iter().map(|&x| map.to_unit(x)).collect(),
                values: data.ys,
            },
            InterpMethod::Swi1 | InterpMethod::Swi2 => {
                data.check_equidistant().map_err(CliError::Usage)?;
                let samples = SampleSet::new(NodeSet::equidistant(n)?, data.ys)?;
                Unit::Built(Interpolant::build(a.method, samples)?)
            }
        };
        (map, unit)
    } else {
        let b = bench(a.function.expect("clap enforces --function or --data"))?;
        let n =
            a.n.ok_or_else(|| CliError::Usage("--n is required with --function".into()))?;
        let map = match a.interval {
            Some((lo, hi)) => IntervalMap::new(lo, hi)?,
            None => IntervalMap::unit(),
        };
        (map, Unit::Built(Interpolant::from_fn(a.method, n, |x| b.eval(x))?))
    };

    let queries: Vec<f64> = if a.dense {
        grid.points().iter().map(|&x| map.from_unit(x)).collect()
    } else if a.at.is_empty() {
        return Err(CliError::Usage("give at least one --at point or --dense".into()));
    } else {
        a.at.clone()
    };
    let mut rows = Vec::with_capacity(queries.len());
    for &xt in &queries {
        let x = map.to_unit(xt);
        if x.abs() > 1.0 {
            return Err(CliError::Usage(format!(
                "query point {xt} lies outside [{}, {}]",
                map.a(),
                map.b()
            )));
        }
        rows.push((xt, unit.eval(x)?));
    }
    a.config.emit(stdout, |w| {
        let mut w = csv::Writer::from_writer(w);
        w.write_record(["x", "value"])?;
        for (x, v) in &rows {
            w.write_record([format_float(*x), format_float(*v)])?;
        }
        w.flush()?;
        Ok(())
    })?;
    Ok(0)
}

fn cmd_sweep(a: SweepArgs, stdout: &mut dyn Write) -> Result<u8, CliError> {
    let grid = a.config.grid()?;
    let records = run_sweep(bench(a.function)?, &a.method, a.n_range, &grid, a.partition)?;
    write_csv(&a.config, stdout, &records)
}

fn cmd_partition(a: PartitionArgs, stdout: &mut dyn Write) -> Result<u8, CliError> {
    let grid = a.config.grid()?;
    let records = run_sweep(bench(a.function)?, &a.method, a.n_range, &grid, true)?;
    write_csv(&a.config, stdout, &records)
}

fn cmd_min_degree(a: MinDegreeArgs, stdout: &mut dyn Write) -> Result<u8, CliError> {
    let grid = a.config.grid()?;
    let b = bench(a.function)?;
    let records = a
        .epsilon
        .iter()
        .map(|&eps| minimal_degree(b, a.family, a.metric, eps, a.n_max, &grid))
        .collect::<Result<Vec<_>, _>>()?;
    write_csv(&a.config, stdout, &records)
}

fn cmd_table2(a: Table2Args, stdout: &mut dyn Write) -> Result<u8, CliError> {
    let grid = a.config.grid()?;
    let benches = if a.function.is_empty() {
        Benchmark::all().collect()
    } else {
        a.function.iter().map(|&id| bench(id)).collect::<Result<Vec<_>, _>>()?
    };
    let table = table2(&benches, &a.epsilon, a.n_max, &grid)?;
    a.config.emit(stdout, |w| table.write_csv(w))?;
    if table.all_reached() {
        Ok(0)
    } else {
        eprintln!("some cells were not reached within n <= {}", a.n_max);
        Ok(2)
    }
}

fn cmd_robustness(a: RobustnessArgs, stdout: &mut dyn Write) -> Result<u8, CliError> {
    let grid = a.config.grid()?;
    let b = bench(a.function)?;
    if a.digits == 0 {
        return Err(CliError::Usage("--digits must be >= 1".into()));
    }
    let kinds = if a.method.is_empty() {
        ChebKind::BOTH.to_vec()
    } else {
        a.method
            .iter()
            .map(|m| match m {
                InterpMethod::Swi1 => Ok(ChebKind::First),
                InterpMethod::Swi2 => Ok(ChebKind::Second),
                other => Err(CliError::Usage(format!(
                    "robustness runs need swi1 or swi2, got {other}"
                ))),
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    let records = kinds
        .into_iter()
        .map(|k| robustness_run(b, k, a.n, a.digits, &grid))
        .collect::<Result<Vec<_>, _>>()?;
    write_csv(&a.config, stdout, &records)
}
