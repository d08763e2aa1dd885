//! A single entry point over every interpolation method in the crate.

use std::fmt;
use std::str::FromStr;

use crate::chebyshev::ChebInterpolant;
use crate::error::{Error, Result};
use crate::lagrange::{barycentric_eval, classical_lagrange_eval, generic_barycentric_weights, BarycentricWeights};
use crate::nodes::{ChebKind, NodeFamily, SampleSet};
use crate::swi::SwiInterpolant;

/// User-facing interpolation methods.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InterpMethod {
    /// Classical Lagrange form on equidistant nodes.
    Classical,
    /// Barycentric Lagrange with generic weights on equidistant nodes.
    Barycentric,
    /// Chebyshev interpolation on first-kind Chebyshev nodes.
    Ci1,
    /// Chebyshev interpolation on second-kind Chebyshev nodes.
    Ci2,
    /// Symmetric wave interpolation of the first kind on equidistant nodes.
    Swi1,
    /// Symmetric wave interpolation of the second kind on equidistant nodes.
    Swi2,
}

impl InterpMethod {
    pub const ALL: [InterpMethod; 6] = [
        InterpMethod::Classical,
        InterpMethod::Barycentric,
        InterpMethod::Ci1,
        InterpMethod::Ci2,
        InterpMethod::Swi1,
        InterpMethod::Swi2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InterpMethod::Classical => "classical",
            InterpMethod::Barycentric => "bary",
            InterpMethod::Ci1 => "ci1",
            InterpMethod::Ci2 => "ci2",
            InterpMethod::Swi1 => "swi1",
            InterpMethod::Swi2 => "swi2",
        }
    }

    /// Node family the method samples on.
    pub fn node_family(self) -> NodeFamily {
        match self {
            InterpMethod::Ci1 => NodeFamily::Cheb1,
            InterpMethod::Ci2 => NodeFamily::Cheb2,
            _ => NodeFamily::Equidistant,
        }
    }
}

impl fmt::Display for InterpMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InterpMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        InterpMethod::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown method '{s}'"))
    }
}

/// A built interpolant on `[-1, 1]`.
#[derive(Debug, Clone)]
pub enum Interpolant {
    Classical(SampleSet),
    Barycentric(SampleSet, BarycentricWeights),
    Chebyshev(ChebInterpolant),
    Swi(SwiInterpolant),
}

impl Interpolant {
    /// Builds `method` from samples, which must lie on the method's node family.
    pub fn build(method: InterpMethod, samples: SampleSet) -> Result<Self> {
        let expected = method.node_family();
        if samples.family() != expected {
            return Err(Error::WrongNodeFamily {
                expected: expected.name(),
                found: samples.family().name(),
            });
        }
        Ok(match method {
            InterpMethod::Classical => Interpolant::Classical(samples),
            InterpMethod::Barycentric => {
                let w = generic_barycentric_weights(samples.nodes())?;
                Interpolant::Barycentric(samples, w)
            }
            InterpMethod::Ci1 => Interpolant::Chebyshev(ChebInterpolant::build(ChebKind::First, samples)?),
            InterpMethod::Ci2 => Interpolant::Chebyshev(ChebInterpolant::build(ChebKind::Second, samples)?),
            InterpMethod::Swi1 => Interpolant::Swi(SwiInterpolant::build(ChebKind::First, samples)?),
            InterpMethod::Swi2 => Interpolant::Swi(SwiInterpolant::build(ChebKind::Second, samples)?),
        })
    }

    /// Samples `f` on the method's nodes and builds it.
    pub fn from_fn(method: InterpMethod, n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::build(method, SampleSet::from_fn(method.node_family(), n, f)?)
    }

    pub fn samples(&self) -> &SampleSet {
        match self {
            Interpolant::Classical(s) | Interpolant::Barycentric(s, _) => s,
            Interpolant::Chebyshev(c) => c.samples(),
            Interpolant::Swi(s) => s.samples(),
        }
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        if x.abs() > 1.0 {
            return Err(Error::Domain { what: "x", value: x });
        }
        match self {
            Interpolant::Classical(s) => classical_lagrange_eval(s.nodes(), s.values(), x),
            Interpolant::Barycentric(s, w) => Ok(barycentric_eval(s.nodes(), s.values(), w, x)),
            Interpolant::Chebyshev(c) => c.eval(x),
            Interpolant::Swi(s) => s.eval(x),
        }
    }

    /// Evaluates at every point of `xs`.
    pub fn eval_many(&self, xs: &[f64]) -> Result<Vec<f64>> {
        xs.iter().map(|&x| self.eval(x)).collect()
    }
}
