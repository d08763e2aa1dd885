//! Interpolating equidistant data given on an arbitrary interval [a, b].

use swi_interp::{ChebKind, IntervalMap, NodeFamily, SampleSet, SwiInterpolant};

fn main() -> swi_interp::Result<()> {
    let (a, b) = (0.0, 10.0);
    let map = IntervalMap::new(a, b)?;
    let g = |t: f64| (t / 2.0).sin() * (-t / 8.0).exp();
    let n = 24;

    let samples = SampleSet::from_fn(NodeFamily::Equidistant, n, |x| g(map.from_unit(x)))?;
    let q = SwiInterpolant::build(ChebKind::Second, samples)?;

    println!("{:>6} {:>12} {:>12} {:>10}", "t", "g(t)", "q(t)", "error");
    for t in [0.0, 0.7, 2.5, 4.2, 6.66, 9.1, 10.0] {
        let v = q.eval(map.to_unit(t))?;
        println!("{t:>6.2} {:>12.8} {v:>12.8} {:>10.2e}", g(t), (v - g(t)).abs());
    }
    Ok(())
}
