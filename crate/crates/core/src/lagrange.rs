//! Classical and barycentric Lagrange interpolation.
//!
//! The classical form costs O(n^2) per point and is kept as an oracle and for
//! demonstrating the Runge blow-up. The barycentric form
//!
//! ```text
//! p(x) = sum_i (w_i / (x - x_i)) y_i  /  sum_i w_i / (x - x_i)
//! ```
//!
//! costs O(n) once the weights are known, and is invariant under scaling of
//! all weights by a common factor.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::nodes::ChebKind;

/// Where a weight vector came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightProvenance {
    Generic,
    ClosedFormCheb1,
    ClosedFormCheb2,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BarycentricWeights {
    weights: Vec<f64>,
    provenance: WeightProvenance,
}

impl BarycentricWeights {
    pub fn degree(&self) -> usize {
        self.weights.len() - 1
    }

    pub fn provenance(&self) -> WeightProvenance {
        self.provenance
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.weights
    }

    /// Multiplies every weight by `factor`; the interpolant is unchanged.
    pub fn scaled(&self, factor: f64) -> BarycentricWeights {
        BarycentricWeights {
            weights: self.weights.iter().map(|w| w * factor).collect(),
            provenance: self.provenance,
        }
    }
}

fn check_distinct(nodes: &[f64]) -> Result<()> {
    for i in 0..nodes.len() {
        for j in (i + 1)..nodes.len() {
            if nodes[i] == nodes[j] {
                return Err(Error::DegenerateNodes { i, j });
            }
        }
    }
    Ok(())
}

/// Evaluates `sum_i y_i l_i(x)` with the Lagrange basis built from scratch.
pub fn classical_lagrange_eval(nodes: &[f64], values: &[f64], x: f64) -> Result<f64> {
    if nodes.len() != values.len() {
        return Err(Error::LengthMismatch {
            nodes: nodes.len(),
            values: values.len(),
        });
    }
    if nodes.len() < 2 {
        return Err(Error::InvalidDegree(0));
    }
    check_distinct(nodes)?;
    let mut sum = 0.0;
    for (i, (&xi, &yi)) in nodes.iter().zip(values).enumerate() {
        let mut basis = 1.0;
        for (j, &xj) in nodes.iter().enumerate() {
            if j != i {
                basis *= (x - xj) / (xi - xj);
            }
        }
        sum += yi * basis;
    }
    Ok(sum)
}

/// `w_i = 1 / prod_{j != i} (x_i - x_j)`.
///
/// Fails with [`Error::NonfiniteWeight`] when a product overflows or
/// underflows, which happens for equidistant nodes somewhere past n = 700.
pub fn generic_barycentric_weights(nodes: &[f64]) -> Result<BarycentricWeights> {
    if nodes.len() < 2 {
        return Err(Error::InvalidDegree(0));
    }
    check_distinct(nodes)?;
    let n = nodes.len() - 1;
    let mut weights = Vec::with_capacity(nodes.len());
    for (i, &xi) in nodes.iter().enumerate() {
        let prod: f64 = nodes
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &xj)| xi - xj)
            .product();
        let w = 1.0 / prod;
        if !w.is_finite() || w == 0.0 {
            return Err(Error::NonfiniteWeight { index: i, n });
        }
        weights.push(w);
    }
    Ok(BarycentricWeights {
        weights,
        provenance: WeightProvenance::Generic,
    })
}

/// Closed-form weights for Chebyshev nodes with i-independent factors dropped.
pub fn closed_form_cheb_weights(kind: ChebKind, n: usize) -> Result<BarycentricWeights> {
    if n == 0 {
        return Err(Error::InvalidDegree(n));
    }
    let sign = |i: usize| if i.is_multiple_of(2) { 1.0 } else { -1.0 };
    let (weights, provenance) = match kind {
        ChebKind::First => {
            let denom = 2.0 * (n as f64 + 1.0);
            let w = (0..=n)
                .map(|i| sign(i) * ((2.0 * i as f64 + 1.0) * PI / denom).sin())
                .collect();
            (w, WeightProvenance::ClosedFormCheb1)
        }
        ChebKind::Second => {
            let w = (0..=n)
                .map(|i| {
                    let half = if i == 0 || i == n { 0.5 } else { 1.0 };
                    sign(i) * half
                })
                .collect();
            (w, WeightProvenance::ClosedFormCheb2)
        }
    };
    Ok(BarycentricWeights { weights, provenance })
}

/// Tolerance under which `x` counts as hitting a node.
#[inline]
pub(crate) fn node_hit_tolerance(x: f64) -> f64 {
    4.0 * f64::EPSILON * x.abs().max(1.0)
}

/// Evaluates the barycentric formula, returning `values[k]` when `x` hits `nodes[k]`.
///
/// # Panics
///
/// If `nodes`, `values` and `weights` disagree in length.
pub fn barycentric_eval(nodes: &[f64], values: &[f64], weights: &BarycentricWeights, x: f64) -> f64 {
    assert_eq!(nodes.len(), values.len(), "nodes/values length mismatch");
    assert_eq!(nodes.len(), weights.weights.len(), "nodes/weights length mismatch");
    let tol = node_hit_tolerance(x);
    let mut num = 0.0;
    let mut den = 0.0;
    for ((&xi, &yi), &wi) in nodes.iter().zip(values).zip(&weights.weights) {
        let d = x - xi;
        if d.abs() <= tol {
            return yi;
        }
        let t = wi / d;
        num += t * yi;
        den += t;
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nodes::NodeSet;

    #[test]
    fn classical_quadratic() {
        let v = classical_lagrange_eval(&[-1.0, 0.0, 1.0], &[1.0, 0.0, 1.0], 0.5).unwrap();
        assert!((v - 0.25).abs() < 1e-15);
    }

    #[test]
    fn classical_constant() {
        let nodes = [-0.9, -0.2, 0.1, 0.35, 0.8];
        for x in [-1.0, -0.3, 0.0, 0.77, 1.0] {
            let v = classical_lagrange_eval(&nodes, &[3.5; 5], x).unwrap();
            assert!((v - 3.5).abs() < 1e-13);
        }
    }

    #[test]
    fn classical_duplicate_nodes() {
        let r = classical_lagrange_eval(&[0.0, 0.5, 0.5], &[1.0, 2.0, 3.0], 0.1);
        assert_eq!(r, Err(Error::DegenerateNodes { i: 1, j: 2 }));
    }

    #[test]
    fn runge_blow_up_matches_extended_precision() {
        // 60-digit Vandermonde solve: p(0.99) = -42.470507751234293069
        let f = |x: f64| 1.0 / (1.0 + 25.0 * x * x);
        let nodes = NodeSet::equidistant(20).unwrap();
        let ys: Vec<f64> = nodes.iter().map(|&x| f(x)).collect();
        let p = classical_lagrange_eval(&nodes, &ys, 0.99).unwrap();
        assert!((p - -42.470_507_751_234_29).abs() < 1e-9);
        assert!((f(0.99) - p).abs() > 1.0);
    }

    #[test]
    fn generic_weight_examples() {
        let w = generic_barycentric_weights(&[-1.0, 0.0, 1.0]).unwrap();
        assert_eq!(w.as_slice(), &[0.5, -1.0, 0.5]);
        assert_eq!(w.provenance(), WeightProvenance::Generic);
        let w = generic_barycentric_weights(&[0.0, 1.0]).unwrap();
        assert_eq!(w.as_slice(), &[-1.0, 1.0]);
    }

    #[test]
    fn generic_cheb2_proportional_to_closed_form() {
        let nodes = NodeSet::chebyshev(ChebKind::Second, 3).unwrap();
        let g = generic_barycentric_weights(&nodes).unwrap();
        let c = [0.5, -1.0, 1.0, -0.5];
        let ratio = g.as_slice()[0] / c[0];
        for (gi, ci) in g.as_slice().iter().zip(c) {
            assert!((gi / ci - ratio).abs() < 1e-14 * ratio.abs());
        }
    }

    #[test]
    fn generic_duplicate_and_overflow() {
        assert!(matches!(
            generic_barycentric_weights(&[0.1, 0.1]),
            Err(Error::DegenerateNodes { .. })
        ));
        let nodes = NodeSet::equidistant(1000).unwrap();
        assert!(matches!(
            generic_barycentric_weights(&nodes),
            Err(Error::NonfiniteWeight { .. })
        ));
    }

    #[test]
    fn closed_form_examples() {
        let w = closed_form_cheb_weights(ChebKind::Second, 3).unwrap();
        assert_eq!(w.as_slice(), &[0.5, -1.0, 1.0, -0.5]);
        assert_eq!(w.provenance(), WeightProvenance::ClosedFormCheb2);
        let w = closed_form_cheb_weights(ChebKind::Second, 2).unwrap();
        assert_eq!(w.as_slice(), &[0.5, -1.0, 0.5]);
        let w = closed_form_cheb_weights(ChebKind::First, 1).unwrap();
        let h = 2f64.sqrt() / 2.0;
        assert!((w.as_slice()[0] - h).abs() < 1e-15);
        assert!((w.as_slice()[1] + h).abs() < 1e-15);
        assert!(closed_form_cheb_weights(ChebKind::First, 0).is_err());
    }

    #[test]
    fn barycentric_examples() {
        let nodes = [-1.0, 0.0, 1.0];
        let ys = [1.0, 0.0, 1.0];
        let w = generic_barycentric_weights(&nodes).unwrap();
        assert!((barycentric_eval(&nodes, &ys, &w, 0.5) - 0.25).abs() < 1e-15);
        for k in 0..3 {
            assert_eq!(barycentric_eval(&nodes, &ys, &w, nodes[k]), ys[k]);
        }
        // within the node-hit tolerance
        let near = 0.0 + 2.0 * f64::EPSILON;
        assert_eq!(barycentric_eval(&nodes, &[7.0, 8.0, 9.0], &w, near), 8.0);
    }
}
