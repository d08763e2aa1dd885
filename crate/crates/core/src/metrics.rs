//! Benchmark functions, evaluation grids and error metrics.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};

/// Default number of equispaced evaluation points on `[-1, 1]`.
pub const DEFAULT_GRID_POINTS: usize = 10_001;

/// One of the ten test functions on `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Benchmark(u8);

impl Benchmark {
    pub fn new(id: u8) -> Result<Self> {
        if (1..=10).contains(&id) {
            Ok(Benchmark(id))
        } else {
            Err(Error::InvalidBenchmark(id))
        }
    }

    pub fn all() -> impl Iterator<Item = Benchmark> {
        (1..=10).map(Benchmark)
    }

    pub fn id(self) -> u8 {
        self.0
    }

    pub fn description(self) -> &'static str {
        match self.0 {
            1 => "Runge function 1/(1+25x^2)",
            2 => "hyperbolic tangent tanh(10x)",
            3 => "bimodal bumps at -0.5 and 0.5",
            4 => "asymmetric hump |x| + 0.5x - x^2",
            5 => "Gaussian-modulated oscillation exp(-5x^2) sin(20x)",
            6 => "high-frequency oscillation sin(50x)/(1+25x^2)",
            7 => "rational oscillation sin(30x)/(1+10x^2) sin(10/(1+5x^2))",
            8 => "cosine power cos^19(4 pi x)",
            9 => "bimodal bumps contracted to -0.2 and 0.2",
            10 => "bimodal bumps dilated to -0.8 and 0.8",
            _ => unreachable!(),
        }
    }

    pub fn eval(self, x: f64) -> f64 {
        match self.0 {
            1 => 1.0 / (1.0 + 25.0 * x * x),
            2 => (10.0 * x).tanh(),
            3 => bimodal(x, 0.5),
            4 => x.abs() + 0.5 * x - x * x,
            5 => (-5.0 * x * x).exp() * (20.0 * x).sin(),
            6 => (50.0 * x).sin() / (1.0 + 25.0 * x * x),
            7 => (30.0 * x).sin() / (1.0 + 10.0 * x * x) * (10.0 / (1.0 + 5.0 * x * x)).sin(),
            8 => (4.0 * PI * x).cos().powi(19),
            9 => bimodal(x, 0.2),
            10 => bimodal(x, 0.8),
            _ => unreachable!(),
        }
    }
}

impl fmt::Display for Benchmark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{}", self.0)
    }
}

/// Rational bump at `-c` plus reciprocal-square-root bump at `+c`.
fn bimodal(x: f64, c: f64) -> f64 {
    let l = x + c;
    let r = x - c;
    1.0 / (1.0 + 1000.0 * l * l) + 1.0 / (1.0 + 1000.0 * r * r).sqrt()
}

/// Evaluates benchmark `id` at `x`.
pub fn benchmark(id: u8, x: f64) -> Result<f64> {
    Ok(Benchmark::new(id)?.eval(x))
}

/// Equispaced grid on `[-1, 1]` with an odd number of points.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    points: Vec<f64>,
}

impl Grid {
    pub fn new(count: usize) -> Result<Self> {
        if count < 3 || count.is_multiple_of(2) {
            return Err(Error::InvalidGrid(count));
        }
        let m = (count - 1) as f64;
        let points = (0..count)
            .map(|j| {
                if j == count - 1 {
                    1.0
                } else if 2 * j == count - 1 {
                    0.0
                } else {
                    -1.0 + 2.0 * j as f64 / m
                }
            })
            .collect();
        Ok(Grid { points })
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Index of `-0.5`, if it is a grid point. `+0.5` sits at `len - 1 - index`.
    pub fn quarter_index(&self) -> Option<usize> {
        let m = self.len() - 1;
        m.is_multiple_of(4).then_some(m / 4)
    }

    fn trapezoid(&self, values: &[f64], from: usize, to: usize) -> f64 {
        let mut sum = 0.0;
        for j in from..to {
            let h = self.points[j + 1] - self.points[j];
            sum += 0.5 * h * (values[j] + values[j + 1]);
        }
        sum
    }
}

impl Default for Grid {
    fn default() -> Self {
        Grid::new(DEFAULT_GRID_POINTS).expect("default grid is valid")
    }
}

/// Largest entry of a precomputed `|f - phi|` profile.
pub fn max_of(abs_errors: &[f64]) -> f64 {
    abs_errors.iter().fold(0.0f64, |m, &e| m.max(e))
}

/// Composite trapezoid integral of a precomputed `|f - phi|` profile.
pub fn integral_of(grid: &Grid, abs_errors: &[f64]) -> f64 {
    assert_eq!(grid.len(), abs_errors.len());
    grid.trapezoid(abs_errors, 0, grid.len() - 1)
}

/// Integrals over `[-1,-0.5] u [0.5,1]` and `[-0.5,0.5]` of a precomputed profile.
pub fn partition_of(grid: &Grid, abs_errors: &[f64]) -> Result<(f64, f64)> {
    assert_eq!(grid.len(), abs_errors.len());
    let q = grid.quarter_index().ok_or(Error::MissingBreakpoint(grid.len()))?;
    let last = grid.len() - 1;
    let left = grid.trapezoid(abs_errors, 0, q);
    let central = grid.trapezoid(abs_errors, q, last - q);
    let right = grid.trapezoid(abs_errors, last - q, last);
    Ok((left + right, central))
}

fn abs_profile(grid: &Grid, f: impl Fn(f64) -> f64, phi: impl Fn(f64) -> f64) -> Vec<f64> {
    grid.points().iter().map(|&x| (f(x) - phi(x)).abs()).collect()
}

/// `max |f - phi|` over the grid.
pub fn max_error(grid: &Grid, f: impl Fn(f64) -> f64, phi: impl Fn(f64) -> f64) -> f64 {
    max_of(&abs_profile(grid, f, phi))
}

/// Trapezoid approximation of `integral_{-1}^{1} |f - phi| dx`.
pub fn cumulative_error(grid: &Grid, f: impl Fn(f64) -> f64, phi: impl Fn(f64) -> f64) -> f64 {
    integral_of(grid, &abs_profile(grid, f, phi))
}

/// `(endpoint_part, central_part)` of the cumulative error.
pub fn partitioned_cumulative_error(
    grid: &Grid,
    f: impl Fn(f64) -> f64,
    phi: impl Fn(f64) -> f64,
) -> Result<(f64, f64)> {
    partition_of(grid, &abs_profile(grid, f, phi))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorReport {
    pub max_error: f64,
    pub cumulative_error: f64,
    pub endpoint_part: Option<f64>,
    pub central_part: Option<f64>,
    pub grid_size: usize,
}

impl ErrorReport {
    pub fn from_abs_errors(grid: &Grid, abs_errors: &[f64], partition: bool) -> Result<Self> {
        let (endpoint_part, central_part) = if partition {
            let (e, c) = partition_of(grid, abs_errors)?;
            (Some(e), Some(c))
        } else {
            (None, None)
        };
        Ok(ErrorReport {
            max_error: max_of(abs_errors),
            cumulative_error: integral_of(grid, abs_errors),
            endpoint_part,
            central_part,
            grid_size: grid.len(),
        })
    }
}

/// Rounds `y` to `digits` significant decimal digits, ties away from zero.
///
/// Works on the shortest decimal representation of `y`, so `0.0385` rounds
/// to `0.039` even though the nearest double sits slightly below the tie.
pub fn round_to_significant(y: f64, digits: u32) -> f64 {
    assert!(digits >= 1, "digits must be >= 1");
    if y == 0.0 || !y.is_finite() {
        return y;
    }
    let repr = format!("{:e}", y.abs());
    let (mantissa, exp) = repr.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let all: Vec<u8> = mantissa.bytes().filter(u8::is_ascii_digit).collect();
    let keep = digits as usize;
    if all.len() <= keep {
        return y;
    }
    let mut kept: u64 = all[..keep].iter().fold(0, |acc, d| acc * 10 + u64::from(d - b'0'));
    if all[keep] >= b'5' {
        kept += 1;
    }
    let scale = exp - (digits as i32 - 1);
    let rounded: f64 = format!("{kept}e{scale}").parse().expect("valid float literal");
    rounded.copysign(y)
}
