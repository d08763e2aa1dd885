//! Barycentric Lagrange interpolation on arbitrary nodes, checked against the classical form.

use swi_interp::{barycentric_eval, classical_lagrange_eval, generic_barycentric_weights};

fn main() -> swi_interp::Result<()> {
    let nodes = [-1.0, -0.6, -0.1, 0.25, 0.8, 1.0];
    let values: Vec<f64> = nodes.iter().map(|x: &f64| (3.0 * x).cos()).collect();
    let w = generic_barycentric_weights(&nodes)?;
    println!("weights: {:.4?}", w.as_slice());
    for x in [-0.9, -0.1, 0.5, 0.95] {
        let b = barycentric_eval(&nodes, &values, &w, x);
        let c = classical_lagrange_eval(&nodes, &values, x)?;
        println!(
            "x = {x:>5}: barycentric {b:.12}, classical {c:.12}, cos(3x) {:.12}",
            (3.0 * x).cos()
        );
    }
    Ok(())
}
