use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;

use super::Method;
use crate::error::{Error, Result};
use crate::metrics::{integral_of, max_of, Benchmark, Grid};

/// Thresholds used by the minimal-degree table.
pub const TABLE2_EPSILONS: [f64; 3] = [0.1, 0.01, 0.001];

/// A method family; its error at degree n is the better of its two kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Ci,
    Swi,
}

impl Family {
    pub const BOTH: [Family; 2] = [Family::Ci, Family::Swi];

    pub fn name(self) -> &'static str {
        match self {
            Family::Ci => "CI",
            Family::Swi => "SWI",
        }
    }

    pub fn members(self) -> [Method; 2] {
        match self {
            Family::Ci => [Method::Ci1, Method::Ci2],
            Family::Swi => [Method::Swi1, Method::Swi2],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Family::BOTH
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown family '{s}'"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Metric {
    Max,
    Cumulative,
}

impl Metric {
    pub const BOTH: [Metric; 2] = [Metric::Max, Metric::Cumulative];

    pub fn name(self) -> &'static str {
        match self {
            Metric::Max => "Max",
            Metric::Cumulative => "Cumulative",
        }
    }

    fn pick(self, errors: (f64, f64)) -> f64 {
        match self {
            Metric::Max => errors.0,
            Metric::Cumulative => errors.1,
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "max" | "maximal" => Ok(Metric::Max),
            "cumulative" | "cum" => Ok(Metric::Cumulative),
            _ => Err(format!("unknown metric '{s}'")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinimalDegreeRecord {
    pub function_id: u8,
    pub metric: Metric,
    pub epsilon: f64,
    pub family: Family,
    pub degree: usize,
}

/// `(max, cumulative)` errors of the family at degree `n`, each the smaller
/// of the family's two kinds.
pub fn family_best_errors(bench: Benchmark, family: Family, n: usize, grid: &Grid) -> Result<(f64, f64)> {
    let mut best = (f64::INFINITY, f64::INFINITY);
    for m in family.members() {
        let e = m.abs_errors(bench, n, grid)?;
        best.0 = best.0.min(max_of(&e));
        best.1 = best.1.min(integral_of(grid, &e));
    }
    Ok(best)
}

fn check_search(epsilon: f64, n_max: usize) -> Result<()> {
    if epsilon.is_nan() || epsilon <= 0.0 {
        return Err(Error::InvalidEpsilon(epsilon));
    }
    if n_max < 2 {
        return Err(Error::InvalidRange {
            from: 1,
            to: n_max,
            step: 1,
        });
    }
    Ok(())
}

/// Smallest `n` in `1..=n_max` whose family-best error drops below `epsilon`.
pub fn minimal_degree(
    bench: Benchmark,
    family: Family,
    metric: Metric,
    epsilon: f64,
    n_max: usize,
    grid: &Grid,
) -> Result<MinimalDegreeRecord> {
    check_search(epsilon, n_max)?;
    let mut best = f64::INFINITY;
    for n in 1..=n_max {
        let err = metric.pick(family_best_errors(bench, family, n, grid)?);
        if err < epsilon {
            return Ok(MinimalDegreeRecord {
                function_id: bench.id(),
                metric,
                epsilon,
                family,
                degree: n,
            });
        }
        best = best.min(err);
    }
    Err(Error::NotReached { epsilon, n_max, best })
}

/// One cell of the minimal-degree table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Table2Cell {
    pub function_id: u8,
    pub metric: Metric,
    pub epsilon: f64,
    pub family: Family,
    /// `None` when the threshold was not reached within the search bound.
    pub degree: Option<usize>,
    /// Family-best error at `degree`, or the smallest error seen if unreached.
    pub error: f64,
}

impl Table2Cell {
    pub fn record(&self) -> Option<MinimalDegreeRecord> {
        self.degree.map(|degree| MinimalDegreeRecord {
            function_id: self.function_id,
            metric: self.metric,
            epsilon: self.epsilon,
            family: self.family,
            degree,
        })
    }
}

/// Minimal degrees for every (function, metric, epsilon, family) combination.
#[derive(Debug, Clone, PartialEq)]
pub struct Table2 {
    functions: Vec<u8>,
    epsilons: Vec<f64>,
    cells: Vec<Table2Cell>,
}

/// Marker written for cells whose threshold was never reached.
pub const NOT_REACHED: &str = "NR";

impl Table2 {
    pub fn cells(&self) -> &[Table2Cell] {
        &self.cells
    }

    pub fn get(&self, function_id: u8, metric: Metric, epsilon: f64, family: Family) -> Option<&Table2Cell> {
        self.cells
            .iter()
            .find(|c| c.function_id == function_id && c.metric == metric && c.epsilon == epsilon && c.family == family)
    }

    pub fn degree(&self, function_id: u8, metric: Metric, epsilon: f64, family: Family) -> Option<usize> {
        self.get(function_id, metric, epsilon, family).and_then(|c| c.degree)
    }

    pub fn all_reached(&self) -> bool {
        self.cells.iter().all(|c| c.degree.is_some())
    }

    pub fn records(&self) -> Vec<MinimalDegreeRecord> {
        self.cells.iter().filter_map(Table2Cell::record).collect()
    }

    fn column_keys(&self) -> Vec<(Metric, f64, Family)> {
        let mut keys = Vec::new();
        for metric in Metric::BOTH {
            for &eps in &self.epsilons {
                for family in Family::BOTH {
                    keys.push((metric, eps, family));
                }
            }
        }
        keys
    }

    /// Wide layout: one row per function, one column per (metric, epsilon, family).
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        let keys = self.column_keys();
        let mut header = vec!["function_id".to_string()];
        header.extend(
            keys.iter()
                .map(|(m, e, f)| format!("{}_{}_{}", m.name().to_ascii_lowercase(), e, f.name())),
        );
        w.write_record(&header)?;
        for &fid in &self.functions {
            let mut row = vec![fid.to_string()];
            for &(m, e, f) in &keys {
                row.push(match self.degree(fid, m, e, f) {
                    Some(d) => d.to_string(),
                    None => NOT_REACHED.to_string(),
                });
            }
            w.write_record(&row)?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Scans one family from n = 1 upward until every (metric, epsilon) pair is
/// resolved or `n_max` is reached.
fn scan_family(
    bench: Benchmark,
    family: Family,
    epsilons: &[f64],
    n_max: usize,
    grid: &Grid,
) -> Result<Vec<Table2Cell>> {
    let mut cells: Vec<Table2Cell> = Metric::BOTH
        .iter()
        .flat_map(|&metric| {
            epsilons.iter().map(move |&epsilon| Table2Cell {
                function_id: bench.id(),
                metric,
                epsilon,
                family,
                degree: None,
                error: f64::INFINITY,
            })
        })
        .collect();
    for n in 1..=n_max {
        if cells.iter().all(|c| c.degree.is_some()) {
            break;
        }
        let errors = family_best_errors(bench, family, n, grid)?;
        for cell in cells.iter_mut().filter(|c| c.degree.is_none()) {
            let e = cell.metric.pick(errors);
            if e < cell.epsilon {
                cell.degree = Some(n);
                cell.error = e;
            } else {
                cell.error = cell.error.min(e);
            }
        }
    }
    Ok(cells)
}

/// Builds the minimal-degree table for `benches`.
///
/// Work is spread over (function, family) pairs; the cell order is fixed
/// (function, family, metric, epsilon) regardless of scheduling.
pub fn table2(benches: &[Benchmark], epsilons: &[f64], n_max: usize, grid: &Grid) -> Result<Table2> {
    for &e in epsilons {
        check_search(e, n_max)?;
    }
    let jobs: Vec<(Benchmark, Family)> = benches
        .iter()
        .flat_map(|&b| Family::BOTH.into_iter().map(move |f| (b, f)))
        .collect();
    let parts: Vec<Vec<Table2Cell>> = jobs
        .par_iter()
        .map(|&(b, f)| scan_family(b, f, epsilons, n_max, grid))
        .collect::<Result<_>>()?;
    Ok(Table2 {
        functions: benches.iter().map(|b| b.id()).collect(),
        epsilons: epsilons.to_vec(),
        cells: parts.into_iter().flatten().collect(),
    })
}
