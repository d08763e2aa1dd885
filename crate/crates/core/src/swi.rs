//! Symmetric wave interpolation (SWI) of equidistant samples.
//!
//! Samples `y_i = f(x_i)` on `x_i = -1 + 2i/n` are treated as samples of
//! `g(z) = f(tau(z))` on the Chebyshev nodes `z_i = kappa(x_i)`. The
//! Chebyshev interpolant `p` of those values composed with `kappa` gives
//!
//! ```text
//! q(x) = p(kappa(x)) = sum_k d_k c_k cos(k pi/2 + k a x)
//! ```
//!
//! with `a = n pi / (2(n+1))` (first kind) or `a = pi / 2` (second kind).
//! The same function also has a barycentric rational form in `sin(a x)`;
//! both are available and must agree.

use std::f64::consts::FRAC_PI_2;

use crate::chebyshev::{cheb_transform, ChebCoefficients};
use crate::error::{Error, Result};
use crate::lagrange::{closed_form_cheb_weights, node_hit_tolerance, BarycentricWeights};
use crate::nodes::{map_frequency, ChebKind, NodeFamily, NodeSet, SampleSet};

/// Which closed form [`SwiInterpolant::eval`] uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SwiForm {
    /// Cosine sum; no singularities and no arccosine.
    #[default]
    TrigSum,
    Barycentric,
}

#[derive(Debug, Clone)]
pub struct SwiInterpolant {
    kind: ChebKind,
    samples: SampleSet,
    coeffs: ChebCoefficients,
    weighted: Vec<f64>,
    cheb_nodes: NodeSet,
    weights: BarycentricWeights,
    frequency: f64,
    form: SwiForm,
}

impl SwiInterpolant {
    /// Builds the SWI interpolant of `kind` from equidistant samples.
    pub fn build(kind: ChebKind, samples: SampleSet) -> Result<Self> {
        if samples.family() != NodeFamily::Equidistant {
            return Err(Error::WrongNodeFamily {
                expected: NodeFamily::Equidistant.name(),
                found: samples.family().name(),
            });
        }
        let n = samples.degree();
        // g(z_i) = f(x_i) = y_i, so the y_i feed the transform unchanged.
        let coeffs = cheb_transform(kind, samples.values())?;
        let weighted = coeffs.weighted();
        Ok(SwiInterpolant {
            kind,
            coeffs,
            weighted,
            cheb_nodes: NodeSet::chebyshev(kind, n)?,
            weights: closed_form_cheb_weights(kind, n)?,
            frequency: map_frequency(kind, n),
            samples,
            form: SwiForm::default(),
        })
    }

    /// Samples `f` on `n + 1` equidistant nodes and builds the interpolant.
    pub fn from_fn(kind: ChebKind, n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::build(kind, SampleSet::from_fn(NodeFamily::Equidistant, n, f)?)
    }

    pub fn with_form(mut self, form: SwiForm) -> Self {
        self.form = form;
        self
    }

    pub fn kind(&self) -> ChebKind {
        self.kind
    }

    pub fn degree(&self) -> usize {
        self.samples.degree()
    }

    pub fn form(&self) -> SwiForm {
        self.form
    }

    pub fn samples(&self) -> &SampleSet {
        &self.samples
    }

    pub fn coefficients(&self) -> &ChebCoefficients {
        &self.coeffs
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        match self.form {
            SwiForm::TrigSum => self.eval_trig(x),
            SwiForm::Barycentric => self.eval_barycentric(x),
        }
    }

    /// `sum_k d_k c_k cos(k (pi/2 + a x))`.
    pub fn eval_trig(&self, x: f64) -> Result<f64> {
        check_x(x)?;
        let phase = FRAC_PI_2 + self.frequency * x;
        Ok(self
            .weighted
            .iter()
            .enumerate()
            .map(|(k, &c)| c * (k as f64 * phase).cos())
            .sum())
    }

    /// The rational form: terms `-w_i / (sin(a x) + z_i)` over the closed-form
    /// Chebyshev weights `w_i`, with the node-hit rule at sample nodes.
    pub fn eval_barycentric(&self, x: f64) -> Result<f64> {
        check_x(x)?;
        let ys = self.samples.values();
        if let Some(i) = self.equidistant_hit(x) {
            return Ok(ys[i]);
        }
        let s = (self.frequency * x).sin();
        let mut num = 0.0;
        let mut den = 0.0;
        for ((&zi, &wi), &yi) in self.cheb_nodes.iter().zip(self.weights.as_slice()).zip(ys) {
            let d = s + zi;
            if d == 0.0 {
                return Ok(yi);
            }
            let t = -wi / d;
            num += t * yi;
            den += t;
        }
        Ok(num / den)
    }

    fn equidistant_hit(&self, x: f64) -> Option<usize> {
        let n = self.degree();
        let i = ((x + 1.0) * n as f64 / 2.0).round();
        if i < 0.0 || i > n as f64 {
            return None;
        }
        let i = i as usize;
        let xi = self.samples.nodes()[i];
        ((x - xi).abs() <= node_hit_tolerance(x)).then_some(i)
    }

    /// Sum of absolute Lagrange basis values at `x` (the Lebesgue function).
    pub fn lebesgue_function(&self, x: f64) -> Result<f64> {
        check_x(x)?;
        if self.equidistant_hit(x).is_some() {
            return Ok(1.0);
        }
        let s = (self.frequency * x).sin();
        let mut terms = Vec::with_capacity(self.degree() + 1);
        for (&zi, &wi) in self.cheb_nodes.iter().zip(self.weights.as_slice()) {
            let d = s + zi;
            if d == 0.0 {
                return Ok(1.0);
            }
            terms.push(-wi / d);
        }
        let den: f64 = terms.iter().sum();
        Ok(terms.iter().map(|t| (t / den).abs()).sum())
    }
}

fn check_x(x: f64) -> Result<()> {
    if x.abs() <= 1.0 {
        Ok(())
    } else {
        Err(Error::Domain { what: "x", value: x })
    }
}

/// Largest Lebesgue function value of the degree-`n` SWI basis over `xs`.
pub fn lebesgue_constant(kind: ChebKind, n: usize, xs: &[f64]) -> Result<f64> {
    let basis = SwiInterpolant::from_fn(kind, n, |_| 0.0)?;
    xs.iter()
        .map(|&x| basis.lebesgue_function(x))
        .try_fold(0.0f64, |m, v| Ok(m.max(v?)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebyshev::cheb_eval;
    use crate::nodes::kappa;

    fn runge(x: f64) -> f64 {
        1.0 / (1.0 + 25.0 * x * x)
    }

    #[test]
    fn constant_reproduced() {
        for kind in ChebKind::BOTH {
            let q = SwiInterpolant::from_fn(kind, 9, |_| -1.75).unwrap();
            for j in 0..=20 {
                let x = -1.0 + j as f64 / 10.0;
                assert!((q.eval_trig(x).unwrap() + 1.75).abs() < 1e-13);
                assert!((q.eval_barycentric(x).unwrap() + 1.75).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn wrong_family() {
        let s = SampleSet::from_fn(NodeFamily::Cheb1, 5, runge).unwrap();
        assert!(matches!(
            SwiInterpolant::build(ChebKind::First, s),
            Err(Error::WrongNodeFamily { .. })
        ));
    }

    #[test]
    fn two_point_second_kind_midpoint() {
        // c_0 = y0 + y1, c_1 = y0 - y1; the k = 1 term vanishes at x = 0.
        let nodes = NodeSet::equidistant(1).unwrap();
        let s = SampleSet::new(nodes, vec![3.0, 8.0]).unwrap();
        let q = SwiInterpolant::build(ChebKind::Second, s).unwrap();
        let c = q.coefficients().as_slice();
        assert!((c[0] - 11.0).abs() < 1e-15 && (c[1] + 5.0).abs() < 1e-15);
        assert!((q.eval_trig(0.0).unwrap() - 5.5).abs() < 1e-15);
    }

    #[test]
    fn first_kind_hits_endpoints() {
        let q = SwiInterpolant::from_fn(ChebKind::First, 12, runge).unwrap();
        for x in [-1.0, 1.0] {
            assert!((q.eval_trig(x).unwrap() - 1.0 / 26.0).abs() < 1e-10);
        }
    }

    #[test]
    fn forms_agree_at_random_points() {
        let q = SwiInterpolant::from_fn(ChebKind::First, 12, runge).unwrap();
        for j in 0..500 {
            let x = -1.0 + 2.0 * ((j as f64 * 0.618_033_988_749_895) % 1.0);
            let a = q.eval_trig(x).unwrap();
            let b = q.eval_barycentric(x).unwrap();
            assert!((a - b).abs() < 1e-9, "x={x}");
        }
    }

    #[test]
    fn second_kind_barycentric_is_composition() {
        let q = SwiInterpolant::from_fn(ChebKind::Second, 12, runge).unwrap();
        let z = NodeSet::chebyshev(ChebKind::Second, 12).unwrap();
        let w = closed_form_cheb_weights(ChebKind::Second, 12).unwrap();
        for j in 0..=200 {
            let x = -1.0 + j as f64 / 100.0;
            let direct = crate::lagrange::barycentric_eval(
                &z,
                q.samples().values(),
                &w,
                kappa(ChebKind::Second, 12, x).unwrap(),
            );
            assert!((q.eval_barycentric(x).unwrap() - direct).abs() < 1e-10);
        }
    }

    #[test]
    fn second_kind_endpoints_are_node_hits() {
        let q = SwiInterpolant::from_fn(ChebKind::Second, 8, runge)
            .unwrap()
            .with_form(SwiForm::Barycentric);
        assert_eq!(q.eval(1.0).unwrap(), runge(1.0));
        assert_eq!(q.eval(-1.0).unwrap(), runge(-1.0));
    }

    #[test]
    fn trig_is_composed_chebyshev() {
        for kind in ChebKind::BOTH {
            let q = SwiInterpolant::from_fn(kind, 17, runge).unwrap();
            for j in 0..=100 {
                let x = -1.0 + j as f64 / 50.0;
                let z = kappa(kind, 17, x).unwrap();
                let composed = cheb_eval(q.coefficients(), z).unwrap();
                assert!((q.eval_trig(x).unwrap() - composed).abs() < 1e-12 * 18.0);
            }
        }
    }

    #[test]
    fn domain_checked() {
        let q = SwiInterpolant::from_fn(ChebKind::First, 4, runge).unwrap();
        assert!(q.eval_trig(1.5).is_err());
        assert!(q.eval_barycentric(-1.0001).is_err());
    }

    #[test]
    fn lebesgue_at_least_one() {
        let xs: Vec<f64> = (0..=400).map(|j| -1.0 + j as f64 / 200.0).collect();
        for kind in ChebKind::BOTH {
            let l = lebesgue_constant(kind, 12, &xs).unwrap();
            assert!((1.0..10.0).contains(&l), "{l}");
        }
    }
}
