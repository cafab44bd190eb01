//! sigma <= f_svcp <= gamma and the diameter bounds over every connected
//! graph on a few vertices.

use svcp::graph::connected_graphs;
use svcp::solver::{check_sandwich, SolverConfig};

fn main() -> svcp::Result<()> {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(5);
    let cfg = SolverConfig::default();
    let (mut total, mut failing) = (0, 0);
    for n in 1..=max {
        for g in connected_graphs(n)? {
            total += 1;
            let r = check_sandwich(&g, &cfg)?;
            if !r.holds() {
                failing += 1;
                println!(
                    "{:?}: sigma={} f={} gamma={} | {}",
                    g.edges(),
                    r.sigma,
                    r.f_svcp,
                    r.gamma,
                    r.violations.join("; ")
                );
            }
        }
    }
    println!("{failing} of {total} graphs violate a bound");
    Ok(())
}
