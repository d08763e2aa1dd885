//! Interpolate the Runge function from 21 equidistant samples with both SWI variants.

use swi_interp::{ChebKind, SwiForm, SwiInterpolant};

fn main() -> swi_interp::Result<()> {
    let runge = |x: f64| 1.0 / (1.0 + 25.0 * x * x);
    let n = 20;
    for kind in ChebKind::BOTH {
        let q = SwiInterpolant::from_fn(kind, n, runge)?;
        let bary = q.clone().with_form(SwiForm::Barycentric);
        println!("SWI{} with n = {n}", kind.index());
        println!("{:>8} {:>14} {:>14} {:>14}", "x", "f(x)", "trig sum", "barycentric");
        for x in [-1.0, -0.93, -0.5, -0.05, 0.0, 0.37, 0.99] {
            println!(
                "{x:>8.3} {:>14.8} {:>14.8} {:>14.8}",
                runge(x),
                q.eval(x)?,
                bary.eval(x)?
            );
        }
        println!();
    }
    Ok(())
}
