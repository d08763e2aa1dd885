//! Error sweep for a smooth benchmark up to large degree, written as CSV to stdout.

use std::io;

use swi_interp::harness::{export_csv, run_sweep, Method, NRange};
use swi_interp::{Benchmark, Grid};

fn main() -> swi_interp::Result<()> {
    let f5 = Benchmark::new(5)?;
    eprintln!("{f5}: {}", f5.description());
    let recs = run_sweep(
        f5,
        &[Method::Ci1, Method::Swi1, Method::Swi2],
        NRange::new(100, 1000, 100)?,
        &Grid::default(),
        false,
    )?;
    export_csv(&recs, io::stdout().lock())
}
