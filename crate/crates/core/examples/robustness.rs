//! Sensitivity of SWI to rounded sample values.

use swi_interp::harness::robustness_run;
use swi_interp::{lebesgue_constant, Benchmark, ChebKind, Grid};

fn main() -> swi_interp::Result<()> {
    let f1 = Benchmark::new(1)?;
    let grid = Grid::default();
    let n = 12;
    println!(
        "{:>5} {:>7} {:>13} {:>13} {:>9}",
        "kind", "digits", "perturbation", "deviation", "Lebesgue"
    );
    for kind in ChebKind::BOTH {
        let lebesgue = lebesgue_constant(kind, n, grid.points())?;
        for digits in [1, 2, 3, 5, 8] {
            let r = robustness_run(f1, kind, n, digits, &grid)?;
            println!(
                "{:>5} {digits:>7} {:>13.4e} {:>13.4e} {lebesgue:>9.4}",
                format!("SWI{}", kind.index()),
                r.max_perturbation,
                r.max_deviation
            );
        }
    }
    Ok(())
}
