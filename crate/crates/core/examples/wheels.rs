//! Wheels: the rim-case formula against exhaustive search, and the stack
//! that settles each value.

use svcp::formulas::{f_svcp_complete, f_svcp_wheel};
use svcp::graph::make_wheel;
use svcp::solver::{compute_f_svcp, SolverConfig};

fn main() -> svcp::Result<()> {
    let cfg = SolverConfig::default();
    for rim in 3..=7 {
        let r = compute_f_svcp(&make_wheel(rim)?, &cfg)?;
        let formula = f_svcp_wheel(rim);
        println!(
            "W_{rim}: search {:>2}, case formula {:>2}, witness {:?}",
            r.value,
            formula.value_u64().unwrap(),
            r.witness.map(|w| w.counts().to_vec()).unwrap_or_default()
        );
        if let Some(sample) = r.certificate {
            println!(
                "      {:?} reaches {{{}}} in {} moves",
                sample.distribution,
                sample.target.label(),
                sample.certificate.len()
            );
        }
    }
    println!("K_4 formula: {}", f_svcp_complete(4).value_u64().unwrap());
    Ok(())
}
