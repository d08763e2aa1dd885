//! Experiment engine: error sweeps, minimal-degree search, robustness runs
//! and CSV export.

mod csv_io;
mod min_degree;
mod robustness;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::interpolant::{InterpMethod, Interpolant};
use crate::metrics::{Benchmark, ErrorReport, Grid};

pub use csv_io::{export_csv, export_csv_to_path, format_float, read_csv, CsvRecord};
pub use min_degree::{
    family_best_errors, minimal_degree, table2, Family, Metric, MinimalDegreeRecord, Table2, Table2Cell,
    TABLE2_EPSILONS,
};
pub use robustness::{robustness_deviation, robustness_run, RobustnessRecord};

/// Methods compared in sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Ci1,
    Ci2,
    Swi1,
    Swi2,
    /// `(p1 + p2) / 2` of the two Chebyshev interpolants.
    AvgCi,
    /// `(q1 + q2) / 2` of the two SWI interpolants.
    AvgSwi,
    ClassicalEquid,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::Ci1,
        Method::Ci2,
        Method::Swi1,
        Method::Swi2,
        Method::AvgCi,
        Method::AvgSwi,
        Method::ClassicalEquid,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Ci1 => "CI1",
            Method::Ci2 => "CI2",
            Method::Swi1 => "SWI1",
            Method::Swi2 => "SWI2",
            Method::AvgCi => "AVG_CI",
            Method::AvgSwi => "AVG_SWI",
            Method::ClassicalEquid => "CLASSICAL_EQUID",
        }
    }

    /// Values of the method's interpolant of `f` at degree `n` on the grid.
    pub fn grid_values(self, bench: Benchmark, n: usize, grid: &Grid) -> Result<Vec<f64>> {
        let single = |m: InterpMethod| -> Result<Vec<f64>> {
            Interpolant::from_fn(m, n, |x| bench.eval(x))?.eval_many(grid.points())
        };
        let average = |a: InterpMethod, b: InterpMethod| -> Result<Vec<f64>> {
            let (va, vb) = (single(a)?, single(b)?);
            Ok(va.iter().zip(&vb).map(|(p, q)| 0.5 * (p + q)).collect())
        };
        match self {
            Method::Ci1 => single(InterpMethod::Ci1),
            Method::Ci2 => single(InterpMethod::Ci2),
            Method::Swi1 => single(InterpMethod::Swi1),
            Method::Swi2 => single(InterpMethod::Swi2),
            Method::AvgCi => average(InterpMethod::Ci1, InterpMethod::Ci2),
            Method::AvgSwi => average(InterpMethod::Swi1, InterpMethod::Swi2),
            Method::ClassicalEquid => single(InterpMethod::Classical),
        }
    }

    /// `|f - phi|` on the grid.
    pub fn abs_errors(self, bench: Benchmark, n: usize, grid: &Grid) -> Result<Vec<f64>> {
        let values = self.grid_values(bench, n, grid)?;
        Ok(grid
            .points()
            .iter()
            .zip(values)
            .map(|(&x, v)| (bench.eval(x) - v).abs())
            .collect())
    }

    pub fn report(self, bench: Benchmark, n: usize, grid: &Grid, partition: bool) -> Result<ErrorReport> {
        ErrorReport::from_abs_errors(grid, &self.abs_errors(bench, n, grid)?, partition)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let norm = s.replace('-', "_");
        Method::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(&norm))
            .or_else(|| norm.eq_ignore_ascii_case("classical").then_some(Method::ClassicalEquid))
            .ok_or_else(|| format!("unknown method '{s}'"))
    }
}

/// Inclusive degree range `from..=to` walked with `step`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub from: usize,
    pub to: usize,
    pub step: usize,
}

impl NRange {
    pub fn new(from: usize, to: usize, step: usize) -> Result<Self> {
        if from < 1 || from > to || step == 0 {
            return Err(Error::InvalidRange { from, to, step });
        }
        Ok(NRange { from, to, step })
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        (self.from..=self.to).step_by(self.step)
    }
}

impl FromStr for NRange {
    type Err = String;

    /// `A..B` or `A..B:step`; a bare `A` is the single degree `A`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let bad = || format!("invalid degree range '{s}', expected A..B[:step]");
        let (span, step) = match s.split_once(':') {
            Some((span, step)) => (span, step.trim().parse().map_err(|_| bad())?),
            None => (s, 1),
        };
        let (from, to) = match span.split_once("..") {
            Some((a, b)) => (
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            ),
            None => {
                let n = span.trim().parse().map_err(|_| bad())?;
                (n, n)
            }
        };
        NRange::new(from, to, step).map_err(|e| e.to_string())
    }
}

/// One (function, method, degree) measurement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRecord {
    pub function_id: u8,
    pub method: Method,
    pub n: usize,
    pub max_error: f64,
    pub cumulative_error: f64,
    pub endpoint_part: Option<f64>,
    pub central_part: Option<f64>,
}

/// Errors of every method at every degree in `range`, in (method, n) order.
///
/// With `partition` set the cumulative error is also split into its
/// endpoint and central parts, which needs a grid containing `+-0.5`.
pub fn run_sweep(
    bench: Benchmark,
    methods: &[Method],
    range: NRange,
    grid: &Grid,
    partition: bool,
) -> Result<Vec<SweepRecord>> {
    if methods.is_empty() {
        return Err(Error::InvalidRange {
            from: range.from,
            to: range.to,
            step: range.step,
        });
    }
    if partition && grid.quarter_index().is_none() {
        return Err(Error::MissingBreakpoint(grid.len()));
    }
    let jobs: Vec<(Method, usize)> = methods
        .iter()
        .flat_map(|&m| range.iter().map(move |n| (m, n)))
        .collect();
    jobs.par_iter()
        .map(|&(method, n)| {
            let r = method.report(bench, n, grid, partition)?;
            Ok(SweepRecord {
                function_id: bench.id(),
                method,
                n,
                max_error: r.max_error,
                cumulative_error: r.cumulative_error,
                endpoint_part: r.endpoint_part,
                central_part: r.central_part,
            })
        })
        .collect()
}
