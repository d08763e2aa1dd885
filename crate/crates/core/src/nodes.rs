//! Node families and the sine maps between equidistant and Chebyshev nodes.
//!
//! The maps `kappa` carry the equidistant node `x_i = -1 + 2i/n` onto the
//! Chebyshev node of the same index:
//!
//! ```text
//! kappa_1(x) = -sin(n pi x / (2 (n + 1)))   ->  cos((2i + 1) pi / (2 (n + 1)))
//! kappa_2(x) = -sin(pi x / 2)               ->  cos(i pi / n)
//! ```
//!
//! `tau` is the inverse of `kappa`. Chebyshev node sets are kept in index
//! order (decreasing abscissae) so that `x_i` and `z_i` pair up positionally.

use std::f64::consts::{FRAC_PI_2, PI};
use std::ops::Deref;

use crate::error::{Error, Result};

/// Which Chebyshev family (and matching sine map) is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChebKind {
    /// Roots of `T_{n+1}`; interior points only.
    First,
    /// Extrema of `T_n`, including both endpoints.
    Second,
}

impl ChebKind {
    pub const BOTH: [ChebKind; 2] = [ChebKind::First, ChebKind::Second];

    pub fn index(self) -> u8 {
        match self {
            ChebKind::First => 1,
            ChebKind::Second => 2,
        }
    }

    pub fn from_index(k: u8) -> Option<Self> {
        match k {
            1 => Some(ChebKind::First),
            2 => Some(ChebKind::Second),
            _ => None,
        }
    }

    pub fn family(self) -> NodeFamily {
        match self {
            ChebKind::First => NodeFamily::Cheb1,
            ChebKind::Second => NodeFamily::Cheb2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeFamily {
    Equidistant,
    Cheb1,
    Cheb2,
}

impl NodeFamily {
    pub fn name(self) -> &'static str {
        match self {
            NodeFamily::Equidistant => "equidistant",
            NodeFamily::Cheb1 => "chebyshev-1",
            NodeFamily::Cheb2 => "chebyshev-2",
        }
    }
}

/// `n + 1` abscissae of one family on `[-1, 1]`, in index order.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeSet {
    family: NodeFamily,
    nodes: Vec<f64>,
}

impl NodeSet {
    pub fn new(family: NodeFamily, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDegree(n));
        }
        let nodes = (0..=n).map(|i| node(family, n, i)).collect();
        Ok(NodeSet { family, nodes })
    }

    pub fn equidistant(n: usize) -> Result<Self> {
        Self::new(NodeFamily::Equidistant, n)
    }

    pub fn chebyshev(kind: ChebKind, n: usize) -> Result<Self> {
        Self::new(kind.family(), n)
    }

    pub fn family(&self) -> NodeFamily {
        self.family
    }

    /// Degree, one less than the point count.
    pub fn degree(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.nodes
    }
}

impl Deref for NodeSet {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.nodes
    }
}

/// Generates the node set of `family` for degree `n`.
pub fn make_nodes(family: NodeFamily, n: usize) -> Result<NodeSet> {
    NodeSet::new(family, n)
}

fn node(family: NodeFamily, n: usize, i: usize) -> f64 {
    let nf = n as f64;
    let fi = i as f64;
    match family {
        NodeFamily::Equidistant => {
            if i == n {
                1.0
            } else {
                -1.0 + 2.0 * fi / nf
            }
        }
        NodeFamily::Cheb1 => ((2.0 * fi + 1.0) * PI / (2.0 * (nf + 1.0))).cos(),
        NodeFamily::Cheb2 => {
            if i == 0 {
                1.0
            } else if i == n {
                -1.0
            } else {
                (fi * PI / nf).cos()
            }
        }
    }
}

/// Node values paired with sample values.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet {
    nodes: NodeSet,
    values: Vec<f64>,
}

impl SampleSet {
    pub fn new(nodes: NodeSet, values: Vec<f64>) -> Result<Self> {
        if nodes.len() != values.len() {
            return Err(Error::LengthMismatch {
                nodes: nodes.len(),
                values: values.len(),
            });
        }
        Ok(SampleSet { nodes, values })
    }

    /// Samples `f` at the nodes of `family`.
    pub fn from_fn(family: NodeFamily, n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        let nodes = NodeSet::new(family, n)?;
        let values = nodes.iter().map(|&x| f(x)).collect();
        Ok(SampleSet { nodes, values })
    }

    pub fn nodes(&self) -> &NodeSet {
        &self.nodes
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn degree(&self) -> usize {
        self.nodes.degree()
    }

    pub fn family(&self) -> NodeFamily {
        self.nodes.family()
    }

    /// Same nodes, values replaced by `g(y_i)`.
    pub fn map_values(&self, g: impl Fn(f64) -> f64) -> SampleSet {
        SampleSet {
            nodes: self.nodes.clone(),
            values: self.values.iter().map(|&y| g(y)).collect(),
        }
    }
}

/// Frequency of the sine map: `n pi / (2 (n + 1))` for the first kind, `pi / 2` for the second.
pub(crate) fn map_frequency(kind: ChebKind, n: usize) -> f64 {
    match kind {
        ChebKind::First => {
            let nf = n as f64;
            nf * PI / (2.0 * (nf + 1.0))
        }
        ChebKind::Second => FRAC_PI_2,
    }
}

fn check_unit(what: &'static str, value: f64) -> Result<()> {
    if value.abs() <= 1.0 {
        Ok(())
    } else {
        Err(Error::Domain { what, value })
    }
}

/// Maps an equidistant abscissa onto the Chebyshev axis of `kind`.
pub fn kappa(kind: ChebKind, n: usize, x: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidDegree(n));
    }
    check_unit("x", x)?;
    Ok(-(map_frequency(kind, n) * x).sin())
}

/// Inverse of [`kappa`]. For the first kind the image is `[-(n+1)/n, (n+1)/n]`.
pub fn tau(kind: ChebKind, n: usize, z: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidDegree(n));
    }
    check_unit("z", z)?;
    Ok(-z.asin() / map_frequency(kind, n))
}

/// Affine map between a user interval `[a, b]` and `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalMap {
    a: f64,
    b: f64,
}

impl IntervalMap {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() || a >= b {
            return Err(Error::InvalidInterval { a, b });
        }
        Ok(IntervalMap { a, b })
    }

    pub fn unit() -> Self {
        IntervalMap { a: -1.0, b: 1.0 }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// `x = (2 x~ - (a + b)) / (b - a)`; the endpoints map exactly to -1 and 1.
    pub fn to_unit(&self, xt: f64) -> f64 {
        if xt == self.a {
            -1.0
        } else if xt == self.b {
            1.0
        } else {
            (2.0 * xt - (self.a + self.b)) / (self.b - self.a)
        }
    }

    pub fn from_unit(&self, x: f64) -> f64 {
        if x == -1.0 {
            self.a
        } else if x == 1.0 {
            self.b
        } else {
            0.5 * (self.b - self.a) * x + 0.5 * (self.a + self.b)
        }
    }
}
