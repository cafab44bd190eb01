//! Family generators, combinators and the edge-list format.

use svcp::graph::*;

fn main() -> svcp::Result<()> {
    let specs = [
        FamilySpec::Path { n: 5 },
        FamilySpec::CompleteMultipartite {
            parts: vec![3, 2, 1],
        },
        FamilySpec::Friendship { n: 3 },
        FamilySpec::Wheel { rim: 6 },
        FamilySpec::join(FamilySpec::Complete { n: 2 }, FamilySpec::Cycle { n: 4 }),
    ];
    for spec in &specs {
        let g = spec.build()?;
        println!(
            "{:<16} n={} m={} diameter={:?}",
            spec.to_string(),
            g.n(),
            g.edge_count(),
            g.diameter()
        );
    }

    let text = "# triangle with a tail\nn=4\n0 1\n1 2\n2 0\n2 3\n";
    let g = parse_edge_list(text)?;
    assert_eq!(parse_edge_list(&to_edge_list(&g))?, g);
    println!(
        "parsed {} edges, connected: {}",
        g.edge_count(),
        g.is_connected()
    );

    let counts: Vec<usize> = (1..=6)
        .map(|n| connected_graphs(n).map(|v| v.len()))
        .collect::<svcp::Result<_>>()?;
    println!("connected graphs on 1..6 vertices: {counts:?}");
    Ok(())
}
