//! Classical interpolation on equidistant nodes diverges for the Runge function,
//! SWI on the same samples converges.

use swi_interp::harness::Method;
use swi_interp::{Benchmark, Grid};

fn main() -> swi_interp::Result<()> {
    let f1 = Benchmark::new(1)?;
    let grid = Grid::default();
    println!("{:>4} {:>14} {:>12} {:>12}", "n", "classical", "SWI1", "SWI2");
    for n in [4, 6, 8, 10, 12, 16, 20, 30, 40] {
        let e = |m: Method| m.report(f1, n, &grid, false).map(|r| r.max_error);
        println!(
            "{n:>4} {:>14.4e} {:>12.4e} {:>12.4e}",
            e(Method::ClassicalEquid)?,
            e(Method::Swi1)?,
            e(Method::Swi2)?
        );
    }
    Ok(())
}
