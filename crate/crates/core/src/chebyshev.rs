//! Chebyshev interpolation of the first and second kind.
//!
//! Coefficients come from the discrete cosine sums
//!
//! ```text
//! c_k = 2/(n+1) sum_i y_i cos(k (2i+1) pi / (2(n+1)))          (first kind)
//! c_k = 2/n     sum_i d_i y_i cos(k i pi / n)                   (second kind)
//! ```
//!
//! and the interpolant is `sum_k d_k c_k T_k(z)`, where `d_k` halves the
//! first term (and the last one for the second kind). Sums are direct
//! O(n^2); evaluation runs the three-term recurrence on `T_k`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::lagrange::{barycentric_eval, closed_form_cheb_weights, BarycentricWeights};
use crate::nodes::{ChebKind, NodeSet, SampleSet};

/// Halving factor `d_k` applied to coefficient `k` of a degree-`n` expansion.
pub fn delta(kind: ChebKind, n: usize, k: usize) -> f64 {
    match kind {
        ChebKind::First if k == 0 => 0.5,
        ChebKind::Second if k == 0 || k == n => 0.5,
        _ => 1.0,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChebCoefficients {
    kind: ChebKind,
    c: Vec<f64>,
}

impl ChebCoefficients {
    pub fn kind(&self) -> ChebKind {
        self.kind
    }

    pub fn degree(&self) -> usize {
        self.c.len() - 1
    }

    /// The raw `c_k`, before the `d_k` halving.
    pub fn as_slice(&self) -> &[f64] {
        &self.c
    }

    pub fn delta(&self, k: usize) -> f64 {
        delta(self.kind, self.degree(), k)
    }

    /// `d_k c_k`, the actual multipliers of `T_k`.
    pub fn weighted(&self) -> Vec<f64> {
        (0..self.c.len()).map(|k| self.delta(k) * self.c[k]).collect()
    }

    /// Recurrence evaluation without the domain check.
    pub(crate) fn eval_unchecked(&self, z: f64) -> f64 {
        let n = self.degree();
        let mut sum = self.delta(0) * self.c[0];
        if n == 0 {
            return sum;
        }
        let mut t_prev = 1.0;
        let mut t = z;
        sum += self.delta(1) * self.c[1] * t;
        let two_z = 2.0 * z;
        for k in 2..=n {
            let t_next = two_z * t - t_prev;
            t_prev = t;
            t = t_next;
            sum += self.delta(k) * self.c[k] * t;
        }
        sum
    }
}

/// Computes Chebyshev coefficients from values given in node index order.
pub fn cheb_transform(kind: ChebKind, values: &[f64]) -> Result<ChebCoefficients> {
    if values.len() < 2 {
        return Err(Error::InvalidDegree(values.len().saturating_sub(1)));
    }
    let n = values.len() - 1;
    // cos(m pi / period_half) for m in one full period, so every cos() is
    // evaluated on a reduced argument.
    let (period, scale) = match kind {
        ChebKind::First => (4 * (n + 1), 2.0 / (n as f64 + 1.0)),
        ChebKind::Second => (2 * n, 2.0 / n as f64),
    };
    let half = period as f64 / 2.0;
    let table: Vec<f64> = (0..period).map(|m| (m as f64 * PI / half).cos()).collect();
    let scaled: Vec<f64> = match kind {
        ChebKind::First => values.to_vec(),
        ChebKind::Second => values.iter().enumerate().map(|(i, &y)| delta(kind, n, i) * y).collect(),
    };
    let c = (0..=n)
        .map(|k| {
            let sum: f64 = scaled
                .iter()
                .enumerate()
                .map(|(i, &y)| {
                    let m = match kind {
                        ChebKind::First => k * (2 * i + 1),
                        ChebKind::Second => k * i,
                    };
                    y * table[m % period]
                })
                .sum();
            scale * sum
        })
        .collect();
    Ok(ChebCoefficients { kind, c })
}

/// Evaluates `sum_k d_k c_k T_k(z)`.
pub fn cheb_eval(coeffs: &ChebCoefficients, z: f64) -> Result<f64> {
    if z.abs() > 1.0 {
        return Err(Error::Domain { what: "z", value: z });
    }
    Ok(coeffs.eval_unchecked(z))
}

/// `T_k(z)` by the three-term recurrence.
pub fn chebyshev_t(k: usize, z: f64) -> Result<f64> {
    if z.abs() > 1.0 {
        return Err(Error::Domain { what: "z", value: z });
    }
    let (mut t_prev, mut t) = (1.0, z);
    if k == 0 {
        return Ok(1.0);
    }
    for _ in 1..k {
        let next = 2.0 * z * t - t_prev;
        t_prev = t;
        t = next;
    }
    Ok(t)
}

/// A Chebyshev interpolant of data sampled at Chebyshev nodes.
#[derive(Debug, Clone)]
pub struct ChebInterpolant {
    samples: SampleSet,
    coeffs: ChebCoefficients,
    weights: BarycentricWeights,
}

impl ChebInterpolant {
    pub fn build(kind: ChebKind, samples: SampleSet) -> Result<Self> {
        if samples.family() != kind.family() {
            return Err(Error::WrongNodeFamily {
                expected: kind.family().name(),
                found: samples.family().name(),
            });
        }
        let coeffs = cheb_transform(kind, samples.values())?;
        let weights = closed_form_cheb_weights(kind, samples.degree())?;
        Ok(ChebInterpolant {
            samples,
            coeffs,
            weights,
        })
    }

    /// Samples `f` at the Chebyshev nodes of `kind` and builds the interpolant.
    pub fn from_fn(kind: ChebKind, n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::build(kind, SampleSet::from_fn(kind.family(), n, f)?)
    }

    pub fn kind(&self) -> ChebKind {
        self.coeffs.kind
    }

    pub fn degree(&self) -> usize {
        self.coeffs.degree()
    }

    pub fn coefficients(&self) -> &ChebCoefficients {
        &self.coeffs
    }

    pub fn samples(&self) -> &SampleSet {
        &self.samples
    }

    pub fn nodes(&self) -> &NodeSet {
        self.samples.nodes()
    }

    pub fn eval(&self, z: f64) -> Result<f64> {
        cheb_eval(&self.coeffs, z)
    }

    /// Same polynomial through the closed-form barycentric weights.
    pub fn eval_barycentric(&self, z: f64) -> f64 {
        barycentric_eval(self.nodes(), self.samples.values(), &self.weights, z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_coefficients_kind2() {
        let c = cheb_transform(ChebKind::Second, &[1.0, 0.0, -1.0]).unwrap();
        let expected = [0.0, 1.0, 0.0];
        for (a, b) in c.as_slice().iter().zip(expected) {
            assert!((a - b).abs() < 1e-15, "{:?}", c.as_slice());
        }
        let v = cheb_eval(&c, 0.3).unwrap();
        assert!((v - 0.3).abs() < 1e-15);
    }

    #[test]
    fn constant_coefficients() {
        for kind in ChebKind::BOTH {
            for n in [1, 2, 7, 30] {
                let c = cheb_transform(kind, &vec![2.5; n + 1]).unwrap();
                assert!((c.as_slice()[0] - 5.0).abs() < 1e-13);
                assert!(c.as_slice()[1..].iter().all(|ck| ck.abs() < 1e-13));
                for z in [-1.0, -0.4, 0.0, 0.9, 1.0] {
                    assert!((cheb_eval(&c, z).unwrap() - 2.5).abs() < 1e-13);
                }
            }
        }
    }

    #[test]
    fn too_short() {
        assert!(cheb_transform(ChebKind::First, &[1.0]).is_err());
        assert!(cheb_transform(ChebKind::Second, &[]).is_err());
    }

    #[test]
    fn eval_domain() {
        let c = cheb_transform(ChebKind::First, &[1.0, 2.0, 3.0]).unwrap();
        assert!(matches!(cheb_eval(&c, 1.01), Err(Error::Domain { .. })));
    }

    #[test]
    fn t_examples() {
        assert_eq!(chebyshev_t(0, 0.37).unwrap(), 1.0);
        assert!((chebyshev_t(3, 0.5).unwrap() + 1.0).abs() < 1e-15);
        let trig = (7.0 * 0.123f64.acos()).cos();
        assert!((chebyshev_t(7, 0.123).unwrap() - trig).abs() < 1e-12);
        assert!(chebyshev_t(2, -1.5).is_err());
    }

    #[test]
    fn t_matches_trig_definition() {
        for k in 0..=50 {
            for j in 0..=40 {
                let z = -1.0 + j as f64 / 20.0;
                let t = chebyshev_t(k, z).unwrap();
                assert!((t - (k as f64 * z.acos()).cos()).abs() < 1e-12, "k={k} z={z}");
            }
        }
    }

    #[test]
    fn wrong_family_rejected() {
        let s = SampleSet::from_fn(crate::NodeFamily::Equidistant, 4, |x| x).unwrap();
        assert!(matches!(
            ChebInterpolant::build(ChebKind::First, s),
            Err(Error::WrongNodeFamily { .. })
        ));
    }
}
