use crate::error::Result;
use crate::metrics::{round_to_significant, Benchmark, Grid};
use crate::nodes::{ChebKind, NodeFamily, SampleSet};
use crate::swi::SwiInterpolant;

/// Effect of rounding the sample data on an SWI interpolant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RobustnessRecord {
    pub function_id: u8,
    pub kind: ChebKind,
    pub n: usize,
    pub digits: u32,
    /// `max_i |y_i - round(y_i)|` over the samples.
    pub max_perturbation: f64,
    /// `max |q - q~|` over the grid.
    pub max_deviation: f64,
}

/// `(max_perturbation, max_deviation)` for `f` sampled at degree `n` and rounded
/// to `digits` significant digits.
pub fn robustness_deviation(
    kind: ChebKind,
    n: usize,
    f: impl Fn(f64) -> f64,
    digits: u32,
    grid: &Grid,
) -> Result<(f64, f64)> {
    let exact = SampleSet::from_fn(NodeFamily::Equidistant, n, f)?;
    let rounded = exact.map_values(|y| round_to_significant(y, digits));
    let perturbation = exact
        .values()
        .iter()
        .zip(rounded.values())
        .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
    let q = SwiInterpolant::build(kind, exact)?;
    let q_rounded = SwiInterpolant::build(kind, rounded)?;
    let mut deviation = 0.0f64;
    for &x in grid.points() {
        deviation = deviation.max((q.eval(x)? - q_rounded.eval(x)?).abs());
    }
    Ok((perturbation, deviation))
}

pub fn robustness_run(
    bench: Benchmark,
    kind: ChebKind,
    n: usize,
    digits: u32,
    grid: &Grid,
) -> Result<RobustnessRecord> {
    let (max_perturbation, max_deviation) = robustness_deviation(kind, n, |x| bench.eval(x), digits, grid)?;
    Ok(RobustnessRecord {
        function_id: bench.id(),
        kind,
        n,
        digits,
        max_perturbation,
        max_deviation,
    })
}
