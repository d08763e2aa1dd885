//! Chebyshev interpolation on both node kinds, in coefficient and barycentric form.

use swi_interp::{closed_form_cheb_weights, Benchmark, ChebInterpolant, ChebKind, Grid};

fn main() -> swi_interp::Result<()> {
    let f = Benchmark::new(2)?;
    let grid = Grid::new(2001)?;
    for kind in ChebKind::BOTH {
        let p = ChebInterpolant::from_fn(kind, 16, |x| f.eval(x))?;
        let c = p.coefficients().as_slice();
        println!("kind {}: c_0..c_4 = {:.6?}", kind.index(), &c[..5]);
        println!(
            "  closed-form weights w_0..w_2 = {:.4?}",
            &closed_form_cheb_weights(kind, 16)?.as_slice()[..3]
        );
        let mut worst: f64 = 0.0;
        let mut gap: f64 = 0.0;
        for &x in grid.points() {
            let v = p.eval(x)?;
            worst = worst.max((v - f.eval(x)).abs());
            gap = gap.max((v - p.eval_barycentric(x)).abs());
        }
        println!("  max error {worst:.3e}, coefficient vs barycentric {gap:.1e}");
    }
    Ok(())
}
