//! Where the cumulative error lives: near the endpoints or in the middle of the interval.

use swi_interp::harness::{run_sweep, Method, NRange};
use swi_interp::{Benchmark, Grid};

fn main() -> swi_interp::Result<()> {
    let grid = Grid::default();
    for id in [9, 10] {
        let f = Benchmark::new(id)?;
        println!("{f}: {}", f.description());
        println!("{:>8} {:>4} {:>12} {:>12}", "method", "n", "endpoint", "central");
        let recs = run_sweep(
            f,
            &[Method::AvgCi, Method::AvgSwi],
            NRange::new(30, 120, 30)?,
            &grid,
            true,
        )?;
        for r in recs {
            println!(
                "{:>8} {:>4} {:>12.4e} {:>12.4e}",
                r.method.name(),
                r.n,
                r.endpoint_part.unwrap_or(f64::NAN),
                r.central_part.unwrap_or(f64::NAN)
            );
        }
        println!();
    }
    Ok(())
}
