//! Pebbling moves and exact reachability with a replayable certificate.

use svcp::covers::minimal_secure_covers;
use svcp::graph::{make_path, VertexSet};
use svcp::pebbling::{apply_move, can_reach_any, can_reach_set, Distribution};

fn main() -> svcp::Result<()> {
    let p6 = make_path(6)?;
    let d = Distribution::stacked(6, 0, 4);
    println!("{:?} -> {:?}", d, apply_move(&p6, &d, 0, 1)?);

    let target = VertexSet::from_one_based([1, 2, 4, 5]);
    for pebbles in [26, 27] {
        let d = Distribution::stacked(6, 0, pebbles);
        let r = can_reach_set(&p6, &d, target)?;
        println!(
            "{pebbles} pebbles on v1 reach {{{}}}: {} ({} states)",
            target.label(),
            r.reachable,
            r.states_expanded
        );
        if let Some(cert) = r.certificate {
            println!("  {} moves, final {:?}", cert.len(), cert.replay(&p6, &d)?);
        }
    }

    let covers = minimal_secure_covers(&p6, 24)?;
    let d = Distribution::parse("0:3,2:4,5:2", 6)?;
    let r = can_reach_any(&p6, &d, &covers)?;
    match r.target_index {
        Some(i) => println!(
            "{} reaches secure cover {{{}}}",
            d.to_text(),
            covers[i].label()
        ),
        None => println!("{} reaches no secure cover", d.to_text()),
    }
    Ok(())
}
