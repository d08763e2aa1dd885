//! Cross-checks between independent evaluation routes, over all benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use swi_interp::harness::Method;
use swi_interp::{
    barycentric_eval, cheb_eval, classical_lagrange_eval, closed_form_cheb_weights, cumulative_error, kappa, max_error,
    Benchmark, ChebInterpolant, ChebKind, Grid, NodeSet, SwiInterpolant,
};

const CHEB_DEGREES: [usize; 7] = [4, 6, 8, 10, 12, 16, 20];

#[test]
fn chebyshev_interpolation_condition() {
    for b in Benchmark::all() {
        for kind in ChebKind::BOTH {
            for n in CHEB_DEGREES {
                let p = ChebInterpolant::from_fn(kind, n, |x| b.eval(x)).unwrap();
                for (&z, &y) in p.nodes().iter().zip(p.samples().values()) {
                    let v = p.eval(z).unwrap();
                    assert!((v - y).abs() <= 1e-10 * (1.0 + y.abs()), "{b} {kind:?} n={n}");
                }
            }
        }
    }
}

#[test]
fn chebyshev_coefficients_match_barycentric() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for b in Benchmark::all() {
        for kind in ChebKind::BOTH {
            for n in 1..=40 {
                let p = ChebInterpolant::from_fn(kind, n, |x| b.eval(x)).unwrap();
                for _ in 0..200 {
                    let z: f64 = rng.gen_range(-1.0..=1.0);
                    let a = p.eval(z).unwrap();
                    let c = p.eval_barycentric(z);
                    assert!((a - c).abs() <= 1e-9, "{b} {kind:?} n={n} z={z}: {a} vs {c}");
                }
            }
        }
    }
}

#[test]
fn runge_n4_first_kind_coefficients_vs_barycentric() {
    let f1 = Benchmark::new(1).unwrap();
    let p = ChebInterpolant::from_fn(ChebKind::First, 4, |x| f1.eval(x)).unwrap();
    let nodes = NodeSet::chebyshev(ChebKind::First, 4).unwrap();
    let w = closed_form_cheb_weights(ChebKind::First, 4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..100 {
        let z: f64 = rng.gen_range(-1.0..=1.0);
        let bary = barycentric_eval(&nodes, p.samples().values(), &w, z);
        assert!((p.eval(z).unwrap() - bary).abs() <= 1e-10);
    }
}

#[test]
fn swi_trig_sum_is_composed_chebyshev() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for b in Benchmark::all() {
        for kind in ChebKind::BOTH {
            for n in 4..=40 {
                let q = SwiInterpolant::from_fn(kind, n, |x| b.eval(x)).unwrap();
                let tol = 1e-12 * (n as f64 + 1.0);
                for _ in 0..1000 {
                    let x: f64 = rng.gen_range(-1.0..=1.0);
                    let composed = cheb_eval(q.coefficients(), kappa(kind, n, x).unwrap()).unwrap();
                    let trig = q.eval_trig(x).unwrap();
                    assert!((trig - composed).abs() <= tol, "{b} {kind:?} n={n} x={x}");
                }
            }
        }
    }
}

#[test]
fn swi_forms_agree_away_from_nodes() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for b in Benchmark::all() {
        for kind in ChebKind::BOTH {
            for n in 1..=60 {
                let q = SwiInterpolant::from_fn(kind, n, |x| b.eval(x)).unwrap();
                let nodes = q.samples().nodes().clone();
                let mut checked = 0;
                while checked < 100 {
                    let x: f64 = rng.gen_range(-1.0..=1.0);
                    if nodes.iter().any(|xi| (x - xi).abs() <= 1e-6) {
                        continue;
                    }
                    let t = q.eval_trig(x).unwrap();
                    let r = q.eval_barycentric(x).unwrap();
                    assert!((t - r).abs() <= 1e-9, "{b} {kind:?} n={n} x={x}: {t} vs {r}");
                    checked += 1;
                }
            }
        }
    }
}

#[test]
fn swi_interpolation_condition() {
    for b in Benchmark::all() {
        for kind in ChebKind::BOTH {
            for n in 1..=100 {
                let q = SwiInterpolant::from_fn(kind, n, |x| b.eval(x)).unwrap();
                for (&x, &y) in q.samples().nodes().iter().zip(q.samples().values()) {
                    let tol = 1e-10 * (1.0 + y.abs());
                    assert!((q.eval_trig(x).unwrap() - y).abs() <= tol, "{b} {kind:?} n={n} x={x}");
                    assert!((q.eval_barycentric(x).unwrap() - y).abs() <= tol);
                }
            }
        }
    }
}

#[test]
fn swi_first_kind_endpoint_exactness() {
    for b in Benchmark::all() {
        for n in 1..=100 {
            let q = SwiInterpolant::from_fn(ChebKind::First, n, |x| b.eval(x)).unwrap();
            for x in [-1.0, 1.0] {
                assert!((q.eval(x).unwrap() - b.eval(x)).abs() <= 1e-10, "{b} n={n} x={x}");
            }
        }
    }
}

#[test]
fn swi_beats_classical_on_runge() {
    let grid = Grid::default();
    let f1 = Benchmark::new(1).unwrap();
    for n in 10..=40 {
        let classical = Method::ClassicalEquid.report(f1, n, &grid, false).unwrap().max_error;
        for m in [Method::Swi1, Method::Swi2] {
            let swi = m.report(f1, n, &grid, false).unwrap().max_error;
            assert!(swi < classical, "n={n} {m}: {swi} vs {classical}");
        }
    }
}

#[test]
fn classical_lagrange_blows_up_near_runge_endpoint() {
    let nodes = NodeSet::equidistant(20).unwrap();
    let f = |x: f64| 1.0 / (1.0 + 25.0 * x * x);
    let ys: Vec<f64> = nodes.iter().map(|&x| f(x)).collect();
    let p = classical_lagrange_eval(&nodes, &ys, 0.99).unwrap();
    assert!((f(0.99) - p).abs() > 1.0);
}

#[test]
fn runge_degree_12_reference_errors() {
    // numpy reference on the same 10001-point grid (recurrence evaluation)
    let grid = Grid::default();
    let f1 = Benchmark::new(1).unwrap();
    let cases = [
        (Method::Ci1, 12, 0.06921570780776709),
        (Method::Ci2, 12, 0.0843965833493373),
        (Method::Swi1, 12, 0.023332292926515175),
        (Method::Swi2, 12, 0.020872093054543628),
        (Method::Swi1, 20, 0.001895507704826327),
        (Method::Swi2, 20, 0.0017480796186933878),
    ];
    for (m, n, expected) in cases {
        let got = m.report(f1, n, &grid, false).unwrap().max_error;
        assert!((got - expected).abs() < 1e-12, "{m} n={n}: {got} vs {expected}");
    }
    let ci1 = Method::Ci1.report(f1, 12, &grid, false).unwrap().max_error;
    assert!(ci1 > 1e-3 && ci1 < 1e-1);
    for m in [Method::Swi1, Method::Swi2] {
        assert!(m.report(f1, 12, &grid, false).unwrap().max_error < ci1);
        assert!(m.report(f1, 20, &grid, false).unwrap().max_error < 0.05);
    }
}

#[test]
fn metric_symmetry_for_even_benchmarks() {
    let grid = Grid::new(4001).unwrap();
    for id in [1, 8] {
        let b = Benchmark::new(id).unwrap();
        let q = SwiInterpolant::from_fn(ChebKind::First, 15, |x| (x + 0.3).cos()).unwrap();
        let phi = |x: f64| q.eval(x).unwrap();
        let direct = max_error(&grid, |x| b.eval(x), phi);
        let mirrored = max_error(&grid, |x| b.eval(-x), |x| phi(-x));
        assert_eq!(direct, mirrored);
    }
}

#[test]
fn cumulative_error_stable_under_grid_refinement() {
    let coarse = Grid::default();
    let fine = Grid::new(2 * (coarse.len() - 1) + 1).unwrap();
    let methods = [
        Method::Ci1,
        Method::Ci2,
        Method::Swi1,
        Method::Swi2,
        Method::AvgCi,
        Method::AvgSwi,
    ];
    for b in Benchmark::all() {
        for n in [12, 40, 100] {
            for m in methods {
                let c = m.report(b, n, &coarse, false).unwrap().cumulative_error;
                let f = m.report(b, n, &fine, false).unwrap().cumulative_error;
                // below 1e-12 the metric is rounding noise
                if c.max(f) > 1e-12 {
                    assert!((c - f).abs() < 0.01 * f, "{b} {m} n={n}: {c} vs {f}");
                }
            }
        }
    }
}

#[test]
fn cumulative_metric_matches_closed_form_example() {
    let grid = Grid::default();
    assert!((cumulative_error(&grid, |_| 0.0, |x| x) - 1.0).abs() < 1e-6);
}
