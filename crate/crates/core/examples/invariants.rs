//! Exhaustive sigma, f_svcp and gamma with extremal witnesses.
//!
//! `cargo run --release --example invariants -- 5` picks the wheel rim.

use svcp::graph::{make_friendship, make_path, make_star, make_wheel, Graph};
use svcp::solver::{compute, Invariant, SolverConfig};

fn main() -> svcp::Result<()> {
    let rim = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(5);
    let graphs: Vec<(String, Graph)> = vec![
        ("P_5".into(), make_path(5)?),
        ("K_{1,3}".into(), make_star(3)?),
        ("F_2".into(), make_friendship(2)?),
        (format!("W_{rim}"), make_wheel(rim)?),
    ];
    let cfg = SolverConfig::default();
    for (name, g) in &graphs {
        for inv in [Invariant::Sigma, Invariant::FSvcp, Invariant::Gamma] {
            let r = compute(g, inv, &cfg)?;
            println!(
                "{name:<8} {inv:<7} {:>3}  witness {:?}  ({} distributions, {:.2?})",
                r.value,
                r.witness
                    .as_ref()
                    .map(|w| w.counts().to_vec())
                    .unwrap_or_default(),
                r.stats.distributions_examined,
                r.wall_time
            );
        }
    }
    Ok(())
}
