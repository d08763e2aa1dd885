//! Minimal degrees reaching each error threshold, for a few benchmarks.
//!
//! Pass benchmark ids as arguments (default: 1 2 5). The full table over all
//! ten benchmarks is `swi table2`.

use std::io;

use swi_interp::harness::{minimal_degree, table2, Family, Metric, TABLE2_EPSILONS};
use swi_interp::{Benchmark, Grid};

fn main() -> swi_interp::Result<()> {
    let ids: Vec<u8> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let ids = if ids.is_empty() { vec![1, 2, 5] } else { ids };
    let benches = ids
        .into_iter()
        .map(Benchmark::new)
        .collect::<swi_interp::Result<Vec<_>>>()?;
    let grid = Grid::default();

    let r = minimal_degree(benches[0], Family::Swi, Metric::Max, 0.01, 1000, &grid)?;
    eprintln!(
        "{}: SWI max error first drops below 0.01 at n = {}",
        benches[0], r.degree
    );

    table2(&benches, &TABLE2_EPSILONS, 1000, &grid)?.write_csv(io::stdout().lock())
}
