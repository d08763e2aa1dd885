//! Global interpolation on equidistant nodes.
//!
//! The crate implements symmetric wave interpolation (SWI): equidistant
//! samples are carried onto Chebyshev nodes by a sine map and interpolated
//! there, which avoids the Runge blow-up of polynomial interpolation on
//! equispaced data. Classical and barycentric Lagrange interpolation and
//! Chebyshev interpolation of both kinds are included as baselines, along
//! with the benchmark functions, error metrics and the experiment harness
//! used to compare them.
//!
//! ```
//! use swi_interp::{ChebKind, SwiInterpolant};
//!
//! let runge = |x: f64| 1.0 / (1.0 + 25.0 * x * x);
//! let q = SwiInterpolant::from_fn(ChebKind::First, 20, runge).unwrap();
//! assert!((q.eval(0.3).unwrap() - runge(0.3)).abs() < 5e-3);
//! ```

pub mod chebyshev;
pub mod cli;
pub mod error;
pub mod harness;
pub mod interpolant;
pub mod lagrange;
pub mod metrics;
pub mod nodes;
pub mod swi;

pub use chebyshev::{cheb_eval, cheb_transform, chebyshev_t, ChebCoefficients, ChebInterpolant};
pub use error::{Error, Result};
pub use interpolant::{InterpMethod, Interpolant};
pub use lagrange::{
    barycentric_eval, classical_lagrange_eval, closed_form_cheb_weights, generic_barycentric_weights,
    BarycentricWeights, WeightProvenance,
};
pub use metrics::{
    benchmark, cumulative_error, max_error, partitioned_cumulative_error, round_to_significant, Benchmark, ErrorReport,
    Grid, DEFAULT_GRID_POINTS,
};
pub use nodes::{kappa, make_nodes, tau, ChebKind, IntervalMap, NodeFamily, NodeSet, SampleSet};
pub use swi::{lebesgue_constant, SwiForm, SwiInterpolant};
