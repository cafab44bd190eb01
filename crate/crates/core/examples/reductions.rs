//! The clique-layer and apex gadgets, with the cover correspondence
//! checked over every small connected graph.

use svcp::graph::{connected_graphs, make_cycle, make_path, to_edge_list};
use svcp::reductions::{
    build_apex, build_clique_layer, probe_apex_pebble_counts, verify_clique_layer_correspondence,
};
use svcp::solver::SolverConfig;

fn main() -> svcp::Result<()> {
    let inst = build_clique_layer(&make_path(3)?)?;
    print!("clique layer of P_3:\n{}", to_edge_list(&inst.graph));

    let mut checked = 0;
    for n in 1..=6 {
        for g in connected_graphs(n)? {
            let report = verify_clique_layer_correspondence(&g)?;
            assert!(report.holds, "{:?}", report.counterexamples);
            checked += 1;
        }
    }
    println!("correspondence holds on {checked} connected graphs");

    let wheel = build_apex(&make_cycle(5)?)?;
    println!("apex of C_5 has {} edges", wheel.graph.edge_count());
    let probe = probe_apex_pebble_counts(&make_cycle(4)?, 3, &SolverConfig::default())?;
    println!("{}", serde_json::to_string(&probe)?);
    Ok(())
}
